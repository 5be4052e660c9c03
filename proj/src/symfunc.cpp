#include <lwlab/symfunc.hpp>

#include <lwlab/ring_matrix.hpp>

#include <cstdlib>
#include <stdexcept>

namespace lwlab {

MultiPoly elementary(const PolyRing& ring, int k) {
    MultiPoly zero(ring);
    if (k < 0 || k > ring.nx) return zero;
    // DP over variables: E[j] = e_j of the prefix processed so far
    std::vector<MultiPoly> E(k + 1, zero);
    E[0] = MultiPoly::constant(ring, 1);
    for (int i = 1; i <= ring.nx; ++i) {
        MultiPoly xi = MultiPoly::variable(ring, i);
        for (int j = std::min(k, i); j >= 1; --j) E[j] += E[j - 1] * xi;
    }
    return E[k];
}

MultiPoly complete(const PolyRing& ring, int k) {
    MultiPoly zero(ring);
    if (k < 0) return zero;
    if (k == 0) return MultiPoly::constant(ring, 1);
    // H[i][j]: complete homogeneous of degree j in the first i variables
    std::vector<MultiPoly> H(k + 1, zero);
    H[0] = MultiPoly::constant(ring, 1);
    for (int i = 1; i <= ring.nx; ++i) {
        MultiPoly xi = MultiPoly::variable(ring, i);
        for (int j = 1; j <= k; ++j) H[j] += H[j - 1] * xi;
    }
    return ring.nx == 0 ? zero : H[k];
}

MultiPoly powersum(const PolyRing& ring, int k) {
    if (k < 1) throw std::invalid_argument("powersum wants k >= 1");
    MultiPoly r(ring);
    for (int i = 1; i <= ring.nx; ++i) r += MultiPoly::variable(ring, i, k);
    return r;
}

MultiPoly schur_jt_h(const PolyRing& ring, const Partition& lambda, int size) {
    if (size < lambda.length()) throw std::invalid_argument("jt_h size below length");
    RingMatrix<MultiPoly> m(size, size, MultiPoly(ring));
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) m.at(i - 1, j - 1) = complete(ring, lambda.part(i) - i + j);
    return determinant(m);
}

MultiPoly schur_jt_e(const PolyRing& ring, const Partition& lambda, int size) {
    if (size < lambda.width()) throw std::invalid_argument("jt_e size below width");
    Partition c = lambda.conjugate();
    RingMatrix<MultiPoly> m(size, size, MultiPoly(ring));
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) m.at(i - 1, j - 1) = elementary(ring, c.part(i) - i + j);
    return determinant(m);
}

namespace {

// Sum of x^T over SSYT of the given shape with entries bounded by nx.
void ssyt_rec(const PolyRing& ring, const Partition& lambda, int row, int col,
              std::vector<std::vector<int>>& fill, MultiPoly& acc) {
    if (row == lambda.length()) {
        Mono m(ring.slots(), 0);
        for (const auto& r : fill)
            for (int v : r) m[v - 1] += ring.half ? 2 : 1;
        acc += MultiPoly::monomial(ring, std::move(m), 1);
        return;
    }
    if (col == lambda.part(row + 1)) {
        ssyt_rec(ring, lambda, row + 1, 0, fill, acc);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, fill[row][col - 1]);              // weak rows
    if (row > 0 && col < lambda.part(row)) lo = std::max(lo, fill[row - 1][col] + 1);  // strict cols
    for (int v = lo; v <= ring.nx; ++v) {
        fill[row][col] = v;
        ssyt_rec(ring, lambda, row, col + 1, fill, acc);
    }
}

}  // namespace

MultiPoly schur(const PolyRing& ring, const Partition& lambda, SchurMethod method) {
    if (lambda.length() > ring.nx) return MultiPoly(ring);
    switch (method) {
        case SchurMethod::JacobiTrudiH:
            return schur_jt_h(ring, lambda, lambda.length());
        case SchurMethod::JacobiTrudiE:
            return schur_jt_e(ring, lambda, lambda.width());
        case SchurMethod::SsytSum: {
            MultiPoly acc(ring);
            std::vector<std::vector<int>> fill;
            for (int i = 1; i <= lambda.length(); ++i) fill.emplace_back(lambda.part(i), 0);
            ssyt_rec(ring, lambda, 0, 0, fill, acc);
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

MultiPoly f_series(const PolyRing& ring, int r) {
    int a = std::abs(r);
    MultiPoly acc(ring);
    for (int m = 0; m + a <= ring.nx; ++m) acc += elementary(ring, m) * elementary(ring, m + a);
    return acc;
}

MultiPoly e_sum(const PolyRing& ring, bool signed_variant) {
    MultiPoly acc = MultiPoly::constant(ring, 1);
    for (int i = 1; i <= ring.nx; ++i) {
        MultiPoly factor = MultiPoly::constant(ring, 1);
        if (signed_variant)
            factor -= MultiPoly::variable(ring, i);
        else
            factor += MultiPoly::variable(ring, i);
        acc *= factor;
    }
    return acc;
}

FComb FComb::single(int r, Int c) {
    FComb f;
    f.add(r, c);
    return f;
}

void FComb::add(int r, const Int& c) {
    if (c == 0) return;
    int key = std::abs(r);
    auto it = c_.find(key);
    if (it == c_.end()) {
        c_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

FComb FComb::operator+(const FComb& o) const {
    FComb r = *this;
    for (const auto& [k, c] : o.c_) r.add(k, c);
    return r;
}

FComb FComb::operator-(const FComb& o) const {
    FComb r = *this;
    for (const auto& [k, c] : o.c_) r.add(k, -c);
    return r;
}

FComb FComb::shift_once() const {
    FComb r;
    for (const auto& [k, c] : c_) {
        r.add(k - 1, c);
        r.add(k + 1, c);
    }
    return r;
}

MultiPoly FComb::materialize(const PolyRing& ring) const {
    MultiPoly acc(ring);
    for (const auto& [k, c] : c_) acc += f_series(ring, k) * c;
    return acc;
}

FComb f_skew_power(int j, int i) {
    if (j < 0) throw std::invalid_argument("f_skew_power wants j >= 0");
    FComb f;
    for (int r = 0; r <= j; ++r) f.add(i - j + 2 * r, binomial(j, r));
    return f;
}

}  // namespace lwlab
