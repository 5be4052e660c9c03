#include <lwlab/syt.hpp>

#include <lwlab/ring_matrix.hpp>

#include <stdexcept>

namespace lwlab {

namespace {

bool query_accepts(const SytQuery& q, const Partition& shape) {
    if (q.odd_cols && shape.odd_cols() != *q.odd_cols) return false;
    if (q.odd_rows && shape.odd_rows() != *q.odd_rows) return false;
    return true;
}

// Grow shapes cell by cell; every intermediate shape respects the width bound.
void syt_rec(const SytQuery& q, std::vector<int>& shape, int placed, Int& acc) {
    if (placed == q.n) {
        Partition p(shape);
        if (query_accepts(q, p)) ++acc;
        return;
    }
    for (size_t i = 0; i <= shape.size(); ++i) {
        int cur = i < shape.size() ? shape[i] : 0;
        int above = i == 0 ? q.width : shape[i - 1];
        if (cur + 1 > above || cur + 1 > q.width) continue;
        if (i < shape.size()) {
            ++shape[i];
            syt_rec(q, shape, placed + 1, acc);
            --shape[i];
        } else {
            shape.push_back(1);
            syt_rec(q, shape, placed + 1, acc);
            shape.pop_back();
        }
    }
}

}  // namespace

Int syt_count_bruteforce(const SytQuery& q) {
    Int acc = 0;
    std::vector<int> shape;
    syt_rec(q, shape, 0, acc);
    return acc;
}

Int syt_count_hooksum(const SytQuery& q) {
    Int acc = 0;
    for (const Partition& p : partitions_of(q.n, q.width))
        if (query_accepts(q, p)) acc += hook_count(p);
    return acc;
}

Int catalan_half(long twice_q) {
    if (twice_q < 0 || twice_q % 2 != 0) return 0;
    long q = twice_q / 2;
    return div_exact(binomial(2 * q, q), Int(q + 1));
}

Int central_binomial(long n) {
    if (n < 0) return 0;
    return binomial(n, n / 2);
}

Int ballot_f(long r, long twice_s) {
    if (r < 0 || twice_s % 2 != 0) return 0;
    long s = twice_s / 2;
    return binomial(r, s) - binomial(r, s - 1);
}

EgfSeries theta_e(int k, int order) { return EgfSeries::e_image(k, order); }

EgfSeries theta_f(int r, int order) { return EgfSeries::bessel_i(r, order); }

EgfSeries theta_fcomb(const FComb& c, int order) {
    EgfSeries acc(order);
    for (const auto& [r, co] : c.coeffs()) acc = acc + theta_f(r, order) * Rat(co);
    return acc;
}

EgfSeries theta_schur(const SchurExpansion& s, int order) {
    EgfSeries acc(order);
    for (const auto& [p, co] : s.coeffs()) {
        long n = p.size();
        if (n <= order) acc.coeff(static_cast<int>(n)) += Rat(co * hook_count(p), factorial(n));
    }
    return acc;
}

std::vector<Int> gessel_sequence(int w, bool odd_bound, int order) {
    EgfSeries zero(order);
    RingMatrix<EgfSeries> m(w, w, zero);
    for (int i = 1; i <= w; ++i)
        for (int j = 1; j <= w; ++j) {
            if (odd_bound)
                m.at(i - 1, j - 1) =
                    EgfSeries::bessel_i(i - j, order) - EgfSeries::bessel_i(i + j, order);
            else
                m.at(i - 1, j - 1) =
                    EgfSeries::bessel_i(i - j, order) + EgfSeries::bessel_i(i + j - 1, order);
        }
    EgfSeries d = determinant(m);
    if (odd_bound) d = d * EgfSeries::exp_x(order);
    std::vector<Int> out;
    for (int n = 0; n <= order; ++n) out.push_back(d.egf_coeff(n));
    return out;
}

namespace {

void compositions(int total, int slots, std::vector<long>& acc,
                  const std::function<void(const std::vector<long>&)>& fn) {
    if (slots == 1) {
        acc.push_back(total);
        fn(acc);
        acc.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        acc.push_back(v);
        compositions(total - v, slots - 1, acc, fn);
        acc.pop_back();
    }
}

}  // namespace

Int klo_count(KloVariant variant, int n, int w, std::optional<int> kopt) {
    if ((variant == KloVariant::KloOdd || variant == KloVariant::KloEven) && w < 1)
        throw std::invalid_argument("klo variants want w >= 1");
    if ((variant == KloVariant::RefOdd || variant == KloVariant::RefEven) && !kopt)
        throw std::invalid_argument("refined variants need k");
    const int k = kopt.value_or(0);
    Int acc = 0;
    auto det_of = [&](const std::function<Int(int, int)>& entry) {
        RingMatrix<Int> m(w, w, Int(0));
        for (int i = 1; i <= w; ++i)
            for (int j = 1; j <= w; ++j) m.at(i - 1, j - 1) = entry(i, j);
        return determinant(m);
    };
    std::vector<long> t;
    switch (variant) {
        case KloVariant::KloOdd:
            compositions(n, w + 1, t, [&](const std::vector<long>& ts) {
                // ts = (t_0, t_1, ..., t_w)
                Int d = det_of([&](int i, int j) { return catalan_half(ts[i] + 2 * w - i - j); });
                acc += multinomial(n, ts) * d;
            });
            break;
        case KloVariant::KloEven:
            compositions(n, w, t, [&](const std::vector<long>& ts) {
                Int d = det_of([&](int i, int j) {
                    long a = ts[i - 1] + 2 * w - i - j;
                    return binomial(a, a / 2);
                });
                acc += multinomial(n, ts) * d;
            });
            break;
        case KloVariant::RefOdd: {
            if (n - k < 0) return 0;
            compositions(n - k, w, t, [&](const std::vector<long>& ts) {
                Int d = det_of(
                    [&](int i, int j) { return catalan_half(ts[i - 1] + i + j - 2); });
                std::vector<long> parts = ts;
                parts.insert(parts.begin(), k);
                acc += multinomial(n, parts) * d;
            });
            break;
        }
        case KloVariant::RefEven:
            compositions(n, w, t, [&](const std::vector<long>& ts) {
                Int d = det_of([&](int i, int j) {
                    long kicker = i == w ? k : 0;
                    return ballot_f(ts[i - 1] + j - 1, ts[i - 1] - i - kicker + j);
                });
                acc += multinomial(n, ts) * d;
            });
            break;
    }
    return acc;
}

std::vector<CheckResult> check_syt_counts(int n_max, int w_max) {
    std::vector<CheckResult> out;
    for (int w = 1; w <= w_max; ++w) {
        auto odd_seq = gessel_sequence(w, true, n_max);
        auto even_seq = gessel_sequence(w, false, n_max);
        for (int n = 0; n <= n_max; ++n) {
            {
                SytQuery q{n, 2 * w + 1, std::nullopt, std::nullopt};
                Int brute = syt_count_bruteforce(q);
                Int hooks = syt_count_hooksum(q);
                Int klo = klo_count(KloVariant::KloOdd, n, w);
                CheckResult res;
                res.name = "syt_cross_odd";
                res.with("n", n).with("w", w);
                res.pass = brute == hooks && brute == odd_seq[n] && brute == klo;
                out.push_back(std::move(res));
            }
            {
                SytQuery q{n, 2 * w, std::nullopt, std::nullopt};
                Int brute = syt_count_bruteforce(q);
                Int hooks = syt_count_hooksum(q);
                Int klo = klo_count(KloVariant::KloEven, n, w);
                CheckResult res;
                res.name = "syt_cross_even";
                res.with("n", n).with("w", w);
                res.pass = brute == hooks && brute == even_seq[n] && brute == klo;
                out.push_back(std::move(res));
            }
            for (int k = 0; k <= n; ++k) {
                SytQuery qo{n, 2 * w + 1, std::nullopt, k};
                SytQuery qe{n, 2 * w, std::nullopt, k};
                CheckResult res;
                res.name = "syt_refined";
                res.with("n", n).with("w", w).with("k", k);
                res.pass = syt_count_bruteforce(qo) == klo_count(KloVariant::RefOdd, n, w, k) &&
                           syt_count_bruteforce(qe) == klo_count(KloVariant::RefEven, n, w, k);
                out.push_back(std::move(res));
            }
        }
    }
    return out;
}

}  // namespace lwlab
