#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lwlab {

/// Dense matrix over a commutative-ring element type R. R needs +, -, *,
/// unary -, ==, and a ring_one(const R&) customization (found by ADL).
template <class R>
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(int rows, int cols, R zero)
        : rows_(rows), cols_(cols), zero_(zero), d_(static_cast<size_t>(rows) * cols, zero) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const R& zero() const { return zero_; }

    R& at(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
    const R& at(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

    RingMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        RingMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()), zero_);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(rows[i], cols[j]);
        return s;
    }

    RingMatrix transpose() const {
        RingMatrix t(cols_, rows_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RingMatrix operator*(const RingMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        RingMatrix p(rows_, o.cols_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k)
                for (int j = 0; j < o.cols_; ++j) p.at(i, j) += at(i, k) * o.at(k, j);
        return p;
    }

    bool is_skew_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i) {
            if (!(at(i, i) == zero_)) return false;
            for (int j = i + 1; j < cols_; ++j)
                if (!(at(j, i) == -at(i, j))) return false;
        }
        return true;
    }

private:
    int rows_ = 0, cols_ = 0;
    R zero_{};
    std::vector<R> d_;
};

/// Division-free determinant: cofactor expansion memoized over column subsets.
/// det of the 0x0 matrix is 1.
template <class R>
R determinant(const RingMatrix<R>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    if (n > 20) throw std::invalid_argument("determinant: size above supported bound");
    if (n == 0) return ring_one(m.zero());
    std::unordered_map<uint32_t, R> memo;
    // rem = bitmask of columns still available; row index = n - popcount(rem)
    auto rec = [&](auto&& self, uint32_t rem) -> R {
        if (rem == 0) return ring_one(m.zero());
        auto it = memo.find(rem);
        if (it != memo.end()) return it->second;
        int row = n - __builtin_popcount(rem);
        R acc = m.zero();
        bool neg = false;
        for (int j = 0; j < n; ++j) {
            if (!(rem >> j & 1)) continue;
            if (!(m.at(row, j) == m.zero())) {
                R sub = self(self, rem & ~(1u << j));
                R term = m.at(row, j) * sub;
                if (neg)
                    acc = acc - term;
                else
                    acc = acc + term;
            }
            neg = !neg;
        }
        memo.emplace(rem, acc);
        return acc;
    };
    return rec(rec, (n == 32 ? ~0u : (1u << n) - 1));
}

/// Exact Pfaffian via expansion along the first remaining row, memoized over
/// index subsets. Requires an even-size skew-symmetric matrix; Pf of the 0x0
/// matrix is 1.
template <class R>
R pfaffian(const RingMatrix<R>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian of non-square matrix");
    const int n = m.rows();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian of odd-size matrix");
    if (n > 20) throw std::invalid_argument("pfaffian: size above supported bound");
    if (!m.is_skew_symmetric()) throw std::invalid_argument("pfaffian of non-skew matrix");
    if (n == 0) return ring_one(m.zero());
    std::unordered_map<uint32_t, R> memo;
    auto rec = [&](auto&& self, uint32_t rem) -> R {
        if (rem == 0) return ring_one(m.zero());
        auto it = memo.find(rem);
        if (it != memo.end()) return it->second;
        int i = __builtin_ctz(rem);
        R acc = m.zero();
        bool neg = false;  // partner at relative position t gets sign (-1)^t, t >= 1
        for (int j = i + 1; j < n; ++j) {
            if (!(rem >> j & 1)) continue;
            if (!(m.at(i, j) == m.zero())) {
                R sub = self(self, rem & ~(1u << i) & ~(1u << j));
                R term = m.at(i, j) * sub;
                if (neg)
                    acc = acc - term;
                else
                    acc = acc + term;
            }
            neg = !neg;
        }
        memo.emplace(rem, acc);
        return acc;
    };
    return rec(rec, (n == 32 ? ~0u : (1u << n) - 1));
}

}  // namespace lwlab
