#pragma once

#include <lwlab/multipoly.hpp>
#include <lwlab/report.hpp>
#include <lwlab/ring_matrix.hpp>

#include <cstdint>

namespace lwlab {

/// Free skew symbols z_k realized as polynomials: z_k -> x_k for k > 0,
/// z_0 = 0 and z_{-k} = -z_k. The ring must have at least |k| variables.
using SkewSymbolPoly = MultiPoly;
SkewSymbolPoly skew_symbol(const PolyRing& ring, int k);

/// Pf(z_{j-i})_{2w x 2w} against the four Gordon-type half-size determinants.
CheckResult check_gordon(int w, int variant);

/// Minor summation formula on random integer instances:
/// sum_K Pf(A^K) det(M^[m]_K) = Pf(M A M^t).
std::vector<CheckResult> check_minor_summation(int m, int p, int trials, uint64_t seed);

/// Row-decomposition determinant lemma on random integer instances.
std::vector<CheckResult> check_sum_det(int n_max, int trials, uint64_t seed);

/// Pf N_n = 2^(n/2-1) for even n.
std::vector<CheckResult> check_pf_n(int n_max);

/// Pf M^eps(u) = 2^(n/2-1) (prod_{eps=+1} u_i + prod_{eps=-1} u_i) over
/// polynomials in u_1..u_n, for random sign vectors.
std::vector<CheckResult> check_pf_m(int n_max, int trials, uint64_t seed);

/// Sub-Pfaffians of the 0,0',1,2,... matrix over Z[u] (all four cases).
std::vector<CheckResult> check_sub_pfaffian(int mu_size_max, int h_max);

/// Minors of the Jacobi-Trudi block matrix equal s_{mu'} or vanish.
std::vector<CheckResult> check_jt_minors(int m_max, int col_range, int nx);

/// Everything above at the sizes used by the aux-lemma suite.
std::vector<CheckResult> check_aux_lemmas(int n_max, int trials, uint64_t seed);

}  // namespace lwlab
