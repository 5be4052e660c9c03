#pragma once

#include <lwlab/bigint.hpp>

#include <vector>

namespace lwlab {

/// Truncated power series sum a_k x^k, k = 0..order, with exact rational
/// coefficients. Arithmetic truncates at the common order.
class EgfSeries {
public:
    explicit EgfSeries(int order) : a_(order + 1, Rat(0)) {}

    int order() const { return static_cast<int>(a_.size()) - 1; }
    const Rat& coeff(int k) const { return a_[k]; }
    Rat& coeff(int k) { return a_[k]; }
    /// k! * a_k, which must be integral; throws otherwise.
    Int egf_coeff(int k) const;

    static EgfSeries exp_x(int order);
    /// Modified Bessel I_|alpha|(2x) = sum_r C(2r+|a|, r) x^(2r+|a|)/(2r+|a|)!.
    static EgfSeries bessel_i(int alpha, int order);
    /// x^k/k! (the theta image of e_k); zero series for k < 0.
    static EgfSeries e_image(int k, int order);

    EgfSeries operator+(const EgfSeries& o) const;
    EgfSeries operator-(const EgfSeries& o) const;
    EgfSeries operator*(const EgfSeries& o) const;
    EgfSeries operator-() const;
    EgfSeries operator*(const Rat& c) const;
    bool operator==(const EgfSeries& o) const { return a_ == o.a_; }

    EgfSeries derivative() const;
    /// Truncate to a (smaller) order.
    EgfSeries truncate(int order) const;

private:
    std::vector<Rat> a_;
};

inline EgfSeries ring_one(const EgfSeries& like) {
    EgfSeries r(like.order());
    r.coeff(0) = 1;
    return r;
}

}  // namespace lwlab
