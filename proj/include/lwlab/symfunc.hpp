#pragma once

#include <lwlab/multipoly.hpp>
#include <lwlab/partition.hpp>

#include <map>

namespace lwlab {

/// e_k, h_k, p_k in the x variables of the ring (u slot, if any, unused).
/// e_0 = h_0 = 1; zero for k < 0; e_k = 0 for k > nx.
MultiPoly elementary(const PolyRing& ring, int k);
MultiPoly complete(const PolyRing& ring, int k);
MultiPoly powersum(const PolyRing& ring, int k);

enum class SchurMethod { JacobiTrudiH, JacobiTrudiE, SsytSum };

/// s_lambda in the ring's x variables; zero when length(lambda) > nx.
MultiPoly schur(const PolyRing& ring, const Partition& lambda,
                SchurMethod method = SchurMethod::JacobiTrudiH);

/// Jacobi-Trudi determinants of explicitly chosen size (size >= the minimal
/// one); used to property-test that padding does not change the result.
MultiPoly schur_jt_h(const PolyRing& ring, const Partition& lambda, int size);
MultiPoly schur_jt_e(const PolyRing& ring, const Partition& lambda, int size);

/// f_r = sum_m e_m e_{m+r}; symmetric in r (f_{-r} = f_r), zero for |r| > nx.
MultiPoly f_series(const PolyRing& ring, int r);

/// e(x) = sum_k e_k = prod (1+x_i); signed variant sum (-1)^k e_k = prod (1-x_i).
MultiPoly e_sum(const PolyRing& ring, bool signed_variant);

/// Finite formal combination sum c_r f_r with indices normalized to r >= 0
/// via f_{-r} = f_r.
class FComb {
public:
    FComb() = default;
    static FComb single(int r, Int c = 1);

    void add(int r, const Int& c);
    const std::map<int, Int>& coeffs() const { return c_; }
    bool operator==(const FComb& o) const { return c_ == o.c_; }

    FComb operator+(const FComb& o) const;
    FComb operator-(const FComb& o) const;

    /// Image under one application of the substitution f_i -> f_{i-1} + f_{i+1}.
    FComb shift_once() const;

    MultiPoly materialize(const PolyRing& ring) const;

private:
    std::map<int, Int> c_;
};

/// Closed form for the j-th skew power applied to f_i:
/// sum_{r=0..j} C(j,r) f_{i-j+2r}, normalized.
FComb f_skew_power(int j, int i);

}  // namespace lwlab
