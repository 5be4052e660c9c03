#pragma once

#include <lwlab/partition.hpp>
#include <lwlab/report.hpp>
#include <lwlab/symfunc.hpp>

#include <map>

namespace lwlab {

/// Element of the symmetric-function ring truncated at total degree D,
/// stored in the Schur basis as partition -> coefficient.
class SchurExpansion {
public:
    explicit SchurExpansion(int truncation) : d_(truncation) {}
    static SchurExpansion single(int truncation, const Partition& p, Int c = 1);
    static SchurExpansion one(int truncation) { return single(truncation, Partition{}); }

    int truncation() const { return d_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Partition, Int>& coeffs() const { return c_; }
    Int coeff(const Partition& p) const;

    SchurExpansion operator+(const SchurExpansion& o) const;
    SchurExpansion operator-(const SchurExpansion& o) const;
    SchurExpansion operator*(const Int& c) const;
    bool operator==(const SchurExpansion& o) const { return d_ == o.d_ && c_ == o.c_; }

    /// Multiplication by e_k (Pieri rule: add vertical k-strips), truncated.
    SchurExpansion pieri_e(int k) const;
    /// Multiplication by s_(1) = e_1.
    SchurExpansion times_s1() const { return pieri_e(1); }

    /// Skewing by p_1: delete one corner cell from each index partition.
    SchurExpansion p1_perp() const;

    /// Hall inner product; requires matching truncation.
    Int hall(const SchurExpansion& o) const;

    /// Drop all terms of degree > d (d <= truncation); the result keeps
    /// truncation level d so later comparisons stay honest.
    SchurExpansion truncate(int d) const;

    /// Specialize to n variables (sum of coeff * s_lambda(x_n)).
    MultiPoly to_poly(const PolyRing& ring) const;

private:
    void add(const Partition& p, const Int& c);
    int d_;
    std::map<Partition, Int> c_;
};

/// f_r = sum_m e_m e_{m+|r|} expanded in the Schur basis, truncated at D.
SchurExpansion f_in_schur(int r, int truncation);

/// General product via iterated Pieri is not provided; multiply through the
/// e-basis instead (e_k products cover everything the checks need).
SchurExpansion e_product_in_schur(const std::vector<int>& ks, int truncation);

/// (p1-perp)^j f_i against the binomial closed form, the two column-operation
/// expansions, and the derivation property on e-products. Comparisons happen
/// at the degrees where the truncated model is exact.
std::vector<CheckResult> check_skew_lemmas(int truncation, int i_lo, int i_hi, int j_max,
                                           int trials, uint64_t seed);

/// <p1-perp a, b> = <a, s_(1) b> on random expansions.
std::vector<CheckResult> check_adjointness(int truncation, int pairs, uint64_t seed);

}  // namespace lwlab
