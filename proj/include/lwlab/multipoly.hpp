#pragma once

#include <lwlab/bigint.hpp>

#include <map>
#include <string>
#include <vector>

namespace lwlab {

/// Ring descriptor for MultiPoly values. Exponents are stored per slot:
/// slots 0..nx-1 are x_1..x_nx, and when with_u is set the last slot is the
/// extra indeterminate u. In half mode a stored exponent e means x^(e/2)
/// (all exponents doubled); laurent allows negative exponents.
struct PolyRing {
    int nx = -1;  // nx < 0 marks the untyped ring of the default-constructed zero
    bool with_u = false;
    bool laurent = false;
    bool half = false;

    int slots() const { return nx + (with_u ? 1 : 0); }
    bool untyped() const { return nx < 0; }
    bool operator==(const PolyRing&) const = default;

    static PolyRing plain(int nx) { return {nx, false, false, false}; }
    static PolyRing with_extra_u(int nx) { return {nx, true, false, false}; }
    static PolyRing laurent_half(int nx) { return {nx, false, true, true}; }
};

using Mono = std::vector<int>;

/// Graded reverse lexicographic order on exponent vectors.
struct GrevlexLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

/// Sparse exact multivariate polynomial with cpp_int coefficients.
/// Immutable value semantics; all operations return new values.
class MultiPoly {
public:
    MultiPoly() = default;  // zero of the untyped ring, compatible with anything
    explicit MultiPoly(PolyRing ring) : ring_(ring) {}

    static MultiPoly constant(PolyRing ring, Int c);
    /// x_i^power for 1-based i; power counts whole units even in half mode.
    static MultiPoly variable(PolyRing ring, int i, int power = 1);
    /// x_i^(num/2); requires half mode.
    static MultiPoly half_power(PolyRing ring, int i, int num);
    static MultiPoly u(PolyRing ring, int power = 1);
    static MultiPoly monomial(PolyRing ring, Mono m, Int c);

    const PolyRing& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Int, GrevlexLess>& terms() const { return terms_; }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Int& c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(int e) const;

    /// Exact coefficient of the given stored-exponent monomial (0 if absent).
    Int coefficient(const Mono& m) const;
    /// Coefficient of x_1^e_1...x_nx^e_nx in whole units (u slot must match too
    /// when present; pass the full stored vector via coefficient() for that).
    Int coefficient_x(const std::vector<int>& whole_exponents) const;

    /// Exact evaluation; requires positive coordinates for laurent/half rings.
    Rat evaluate(const std::vector<Rat>& point) const;

    /// Substitute u := 1. Result lives in the same ring without u.
    MultiPoly substitute_u_one() const;
    /// Coefficient of u^k as a polynomial in the ring without u.
    MultiPoly coeff_of_u(int k) const;

    /// Re-encode into the target ring (widening only: adding u, enabling
    /// laurent, enabling half mode).
    MultiPoly convert_to(const PolyRing& target) const;

    /// Divide every coefficient by d; throws if not exactly divisible.
    MultiPoly divide_exact(const Int& d) const;

    long total_degree_x2() const;  // max total stored degree, in half units x2 when half

    std::string to_string() const;
    /// FNV-1a hash of the canonical rendering.
    uint64_t canonical_hash() const;

private:
    void insert_term(Mono m, Int c);
    static const PolyRing& join(const PolyRing& a, const PolyRing& b);

    PolyRing ring_{};
    std::map<Mono, Int, GrevlexLess> terms_;
};

inline MultiPoly operator*(const Int& c, const MultiPoly& p) { return p * c; }

/// Customization point used by the generic determinant/Pfaffian code.
inline MultiPoly ring_one(const MultiPoly& like) {
    return MultiPoly::constant(like.ring().untyped() ? PolyRing::plain(0) : like.ring(), 1);
}
inline Int ring_one(const Int&) { return Int(1); }

}  // namespace lwlab
