#include <lwlab/egf.hpp>

#include <cstdlib>
#include <stdexcept>

namespace lwlab {

Int EgfSeries::egf_coeff(int k) const {
    Rat v = a_[k] * Rat(factorial(k));
    if (denominator(v) != 1) throw std::domain_error("egf_coeff: not integral");
    return numerator(v);
}

EgfSeries EgfSeries::exp_x(int order) {
    EgfSeries s(order);
    for (int k = 0; k <= order; ++k) s.a_[k] = Rat(1, factorial(k));
    return s;
}

EgfSeries EgfSeries::bessel_i(int alpha, int order) {
    EgfSeries s(order);
    int a = std::abs(alpha);
    for (int r = 0; 2 * r + a <= order; ++r) {
        int k = 2 * r + a;
        s.a_[k] = Rat(binomial(k, r), factorial(k));
    }
    return s;
}

EgfSeries EgfSeries::e_image(int k, int order) {
    EgfSeries s(order);
    if (k >= 0 && k <= order) s.a_[k] = Rat(1, factorial(k));
    return s;
}

EgfSeries EgfSeries::operator+(const EgfSeries& o) const {
    int n = std::min(order(), o.order());
    EgfSeries r(n);
    for (int k = 0; k <= n; ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

EgfSeries EgfSeries::operator-(const EgfSeries& o) const {
    int n = std::min(order(), o.order());
    EgfSeries r(n);
    for (int k = 0; k <= n; ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

EgfSeries EgfSeries::operator-() const {
    EgfSeries r(order());
    for (int k = 0; k <= order(); ++k) r.a_[k] = -a_[k];
    return r;
}

EgfSeries EgfSeries::operator*(const EgfSeries& o) const {
    int n = std::min(order(), o.order());
    EgfSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o.a_[j] == 0) continue;
            r.a_[i + j] += a_[i] * o.a_[j];
        }
    }
    return r;
}

EgfSeries EgfSeries::operator*(const Rat& c) const {
    EgfSeries r(order());
    for (int k = 0; k <= order(); ++k) r.a_[k] = a_[k] * c;
    return r;
}

EgfSeries EgfSeries::derivative() const {
    if (order() == 0) return EgfSeries(0);
    EgfSeries r(order() - 1);
    for (int k = 1; k <= order(); ++k) r.a_[k - 1] = a_[k] * k;
    return r;
}

EgfSeries EgfSeries::truncate(int order) const {
    if (order > this->order()) throw std::invalid_argument("truncate: cannot extend");
    EgfSeries r(order);
    for (int k = 0; k <= order; ++k) r.a_[k] = a_[k];
    return r;
}

}  // namespace lwlab
