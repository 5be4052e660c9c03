#pragma once

#include <lwlab/egf.hpp>
#include <lwlab/partition.hpp>
#include <lwlab/report.hpp>
#include <lwlab/schur_ring.hpp>
#include <lwlab/symfunc.hpp>

#include <optional>

namespace lwlab {

/// Standard Young tableaux of size n with width (number of columns) <= width,
/// optionally restricted to shapes with a given number of odd columns/rows.
struct SytQuery {
    int n = 0;
    int width = 0;
    std::optional<int> odd_cols;
    std::optional<int> odd_rows;
};

Int syt_count_bruteforce(const SytQuery& q);
Int syt_count_hooksum(const SytQuery& q);

/// Cat(q) for q = twice_q/2: the usual Catalan number when q is a nonnegative
/// integer, zero otherwise.
Int catalan_half(long twice_q);
/// C(n, floor(n/2)); zero for n < 0.
Int central_binomial(long n);
/// F(r, s) = C(r,s) - C(r,s-1) for s = twice_s/2; zero when s is not an
/// integer.
Int ballot_f(long r, long twice_s);

/// theta images: theta(e_k) = x^k/k!, theta(f_r) = I_|r|(2x),
/// theta(s_lambda) = f^lambda x^n / n!.
EgfSeries theta_e(int k, int order);
EgfSeries theta_f(int r, int order);
EgfSeries theta_fcomb(const FComb& c, int order);
EgfSeries theta_schur(const SchurExpansion& s, int order);

/// |SYT_{n,2w+1}| (odd) or |SYT_{n,2w}| (even) for n = 0..order via the
/// Bessel determinant EGFs.
std::vector<Int> gessel_sequence(int w, bool odd_bound, int order);

enum class KloVariant { KloOdd, KloEven, RefOdd, RefEven };

/// Multinomial sums of determinants for |SYT_{n,2w+1}|, |SYT_{n,2w}| and the
/// odd-row refinements.
Int klo_count(KloVariant variant, int n, int w, std::optional<int> k = std::nullopt);

/// Cross-check brute force vs hook sums vs Gessel vs the closed formulas.
std::vector<CheckResult> check_syt_counts(int n_max, int w_max);

}  // namespace lwlab
