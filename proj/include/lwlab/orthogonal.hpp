#pragma once

#include <lwlab/multipoly.hpp>
#include <lwlab/partition.hpp>
#include <lwlab/report.hpp>

#include <vector>

namespace lwlab {

/// e_r(x_1,...,x_n, x_1^{-1},...,x_n^{-1}) in the half-Laurent ring;
/// zero outside 0 <= r <= 2n.
MultiPoly laurent_elementary(const PolyRing& ring, int r);

enum class OrthKind { OPlus, OBar, Sorth };

/// Even-orthogonal characters of partition highest weight (shift_half adds
/// 1/2 to every entry). OPlus/OBar are the determinantal o / o-bar forms;
/// Sorth assembles the irreducible character for a nonnegative last entry.
/// The ring must be laurent-half with nx = n.
MultiPoly orthogonal_character(const PolyRing& ring, const Partition& lambda, bool shift_half,
                               OrthKind kind);

/// Irreducible character for the weight (c^(n-1), c-k) with 2c = twice_c and
/// 0 <= k <= 2c; handles negative last entries through the weight-flip
/// symmetry.
MultiPoly sorth_nearly_rectangular(const PolyRing& ring, int twice_c, int k);

/// Number of odd columns of the skew shape rect/lambda where rect = (width^n).
int skew_odd_cols(int width, int n, const Partition& lambda);

/// One instance of the bounded rectangle identity: (x_1...x_n)^c *
/// sorth_{(c^{n-1},c-k)} equals the Schur sum over lambda in ((2c)^n) whose
/// complement has k odd columns.
CheckResult check_kratt(int twice_c, int k, int n);

/// f_r(x_n) = (x_1...x_n) e_{n-r}(x_n^{+-1}) for |r| <= n.
CheckResult check_f_specialization(int r, int n);

/// e(x_n) = (x_1...x_n)^(1/2) prod (x_i^(1/2) + x_i^(-1/2)).
CheckResult check_e_half_product(int n);

}  // namespace lwlab
