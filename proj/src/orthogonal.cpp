#include <lwlab/orthogonal.hpp>

#include <lwlab/ring_matrix.hpp>
#include <lwlab/symfunc.hpp>

#include <stdexcept>

namespace lwlab {

MultiPoly laurent_elementary(const PolyRing& ring, int r) {
    if (!ring.laurent || !ring.half) throw std::invalid_argument("needs the laurent-half ring");
    int n = ring.nx;
    MultiPoly zero(ring);
    if (r < 0 || r > 2 * n) return zero;
    std::vector<MultiPoly> E(r + 1, zero);
    E[0] = MultiPoly::constant(ring, 1);
    for (int item = 0; item < 2 * n; ++item) {
        int var = item / 2 + 1;
        MultiPoly y = MultiPoly::half_power(ring, var, item % 2 == 0 ? 2 : -2);
        for (int j = std::min(r, item + 1); j >= 1; --j) E[j] += E[j - 1] * y;
    }
    return E[r];
}

namespace {

MultiPoly prod_over_vars(const PolyRing& ring, int half_num_a, int half_num_b, bool minus) {
    // prod_i (x_i^(a/2) +- x_i^(b/2))
    MultiPoly acc = MultiPoly::constant(ring, 1);
    for (int i = 1; i <= ring.nx; ++i) {
        MultiPoly t = MultiPoly::half_power(ring, i, half_num_a);
        MultiPoly s = MultiPoly::half_power(ring, i, half_num_b);
        acc *= minus ? t - s : t + s;
    }
    return acc;
}

}  // namespace

MultiPoly orthogonal_character(const PolyRing& ring, const Partition& lambda, bool shift_half,
                               OrthKind kind) {
    if (!ring.laurent || !ring.half) throw std::invalid_argument("needs the laurent-half ring");
    const int n = ring.nx;
    if (lambda.length() > n) throw std::invalid_argument("length(lambda) > n");
    const int q = lambda.width();
    Partition conj = lambda.conjugate();
    auto e = [&](int r) { return laurent_elementary(ring, r); };

    if (kind == OrthKind::Sorth) {
        // lambda_n = 0 (integral weight with a zero last entry): plain o.
        // Otherwise (o + o-bar)/2; coefficients are even where division occurs.
        bool last_zero = !shift_half && lambda.length() < n;
        if (last_zero) return orthogonal_character(ring, lambda, false, OrthKind::OPlus);
        MultiPoly sum = orthogonal_character(ring, lambda, shift_half, OrthKind::OPlus) +
                        orthogonal_character(ring, lambda, shift_half, OrthKind::OBar);
        return sum.divide_exact(2);
    }

    if (!shift_half) {
        if (kind == OrthKind::OPlus) {
            if (lambda.empty()) return MultiPoly::constant(ring, 1);
            RingMatrix<MultiPoly> m(q, q, MultiPoly(ring));
            for (int i = 1; i <= q; ++i)
                for (int j = 1; j <= q; ++j)
                    m.at(i - 1, j - 1) = e(conj.part(i) - i + j) + e(conj.part(i) - i - j + 2);
            return determinant(m).divide_exact(2);
        }
        // o-bar: zero unless the weight has full length
        if (lambda.length() < n) return MultiPoly(ring);
        RingMatrix<MultiPoly> m(q - 1, q - 1, MultiPoly(ring));
        for (int i = 2; i <= q; ++i)
            for (int j = 2; j <= q; ++j)
                m.at(i - 2, j - 2) = e(conj.part(i) - i + j) - e(conj.part(i) - i - j + 2);
        return prod_over_vars(ring, 2, -2, true) * determinant(m);
    }

    // half-shifted weights lambda + 1/2
    RingMatrix<MultiPoly> m(q, q, MultiPoly(ring));
    bool minus_inside = kind == OrthKind::OPlus;
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j) {
            MultiPoly a = e(conj.part(i) - i + j);
            MultiPoly b = e(conj.part(i) - i - j + 1);
            m.at(i - 1, j - 1) = minus_inside ? a - b : a + b;
        }
    MultiPoly pref = prod_over_vars(ring, 1, -1, kind == OrthKind::OBar);
    return pref * determinant(m);
}

MultiPoly sorth_nearly_rectangular(const PolyRing& ring, int twice_c, int k) {
    if (k < 0 || k > twice_c) throw std::out_of_range("k outside [0, 2c]");
    const int n = ring.nx;
    const bool half = twice_c % 2 != 0;
    const int twice_last = twice_c - 2 * k;  // 2(c - k)

    auto body = [&](int twice_entry_last) {
        // builds the partition (c^{n-1}, last) shifted down by 1/2 when half
        std::vector<int> parts;
        int lead = half ? (twice_c - 1) / 2 : twice_c / 2;
        for (int i = 0; i < n - 1; ++i) parts.push_back(lead);
        int last = half ? (twice_entry_last - 1) / 2 : twice_entry_last / 2;
        parts.push_back(last);
        return Partition(std::move(parts));
    };

    if (twice_last > 0) {
        Partition lam = body(twice_last);
        MultiPoly sum = orthogonal_character(ring, lam, half, OrthKind::OPlus) +
                        orthogonal_character(ring, lam, half, OrthKind::OBar);
        return sum.divide_exact(2);
    }
    if (twice_last == 0) {
        Partition lam = body(0);
        return orthogonal_character(ring, lam, half, OrthKind::OPlus);
    }
    // negative last entry: so_{(..., -a)} = (o - o-bar)/2 for the flipped weight
    Partition lam = body(-twice_last);
    MultiPoly diff = orthogonal_character(ring, lam, half, OrthKind::OPlus) -
                     orthogonal_character(ring, lam, half, OrthKind::OBar);
    return diff.divide_exact(2);
}

int skew_odd_cols(int width, int n, const Partition& lambda) {
    Partition conj = lambda.conjugate();
    int count = 0;
    for (int j = 1; j <= width; ++j)
        if ((n - conj.part(j)) % 2 != 0) ++count;
    return count;
}

CheckResult check_kratt(int twice_c, int k, int n) {
    CheckResult res;
    res.name = "kratt";
    res.with("2c", twice_c).with("k", k).with("n", n);
    PolyRing ring = PolyRing::laurent_half(n);

    MultiPoly lhs = sorth_nearly_rectangular(ring, twice_c, k);
    for (int i = 1; i <= n; ++i) lhs *= MultiPoly::half_power(ring, i, twice_c);

    MultiPoly rhs(ring);
    for (const Partition& la : partitions_up_to(static_cast<long>(twice_c) * n, twice_c, n))
        if (skew_odd_cols(twice_c, n, la) == k)
            rhs += schur(PolyRing::plain(n), la).convert_to(ring);

    res.pass = (lhs == rhs);
    res.lhs_hash = lhs.canonical_hash();
    res.rhs_hash = rhs.canonical_hash();
    return res;
}

CheckResult check_f_specialization(int r, int n) {
    CheckResult res;
    res.name = "f_specialization";
    res.with("r", r).with("n", n);
    PolyRing ring = PolyRing::laurent_half(n);
    MultiPoly lhs = f_series(PolyRing::plain(n), r).convert_to(ring);
    MultiPoly rhs = laurent_elementary(ring, n - r);
    for (int i = 1; i <= n; ++i) rhs *= MultiPoly::half_power(ring, i, 2);
    res.pass = (lhs == rhs);
    return res;
}

CheckResult check_e_half_product(int n) {
    CheckResult res;
    res.name = "e_half_product";
    res.with("n", n);
    PolyRing ring = PolyRing::laurent_half(n);
    MultiPoly lhs = e_sum(PolyRing::plain(n), false).convert_to(ring);
    MultiPoly rhs = prod_over_vars(ring, 1, -1, false);
    for (int i = 1; i <= n; ++i) rhs *= MultiPoly::half_power(ring, i, 1);
    res.pass = (lhs == rhs);
    return res;
}

}  // namespace lwlab
