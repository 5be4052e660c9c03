#pragma once

#include <lwlab/multipoly.hpp>
#include <lwlab/partition.hpp>
#include <lwlab/report.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lwlab {

/// One verified equation per enum value; names follow the bound parity and the
/// statistic being refined (rows/columns, u-weight, skew-operator form).
enum class TheoremId {
    BK_odd1,
    BK_even1,
    G_odd_k,
    G_even_k,
    RG_even_plus,
    RG_even_minus,
    RG_odd_plus,
    RG_odd_minus,
    RG2_odd_sum,
    RG2_odd_diff,
    RG2_even_sum,
    RG2_even_diff,
    BK2_odd,
    BK2_even,
    G2_odd,
    G2_even,
    POP_odd_sum,
    POP_odd_diff,
    POP_even_sum,
    POP_even_diff,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);
std::vector<TheoremId> all_theorems();

/// Whether the id takes a k parameter, and the inclusive k range for given w
/// (second value < first means "no valid k", e.g. even-diff at w = 1 has none).
bool theorem_has_k(TheoremId id);
std::pair<int, int> theorem_k_range(TheoremId id, int n, int w);
/// u-weighted ids live in Z[u][x].
bool theorem_uses_u(TheoremId id);

struct SchurFilter {
    enum Kind { None, OddRows, OddCols, OddColsPair, UWeight } kind = None;
    int k = 0;        // OddRows/OddCols/OddColsPair first count
    int m = 0;        // pair partner is m - k; UWeight exponent pairing
    bool minus = false;  // pair/u-weight sign
};

/// Exact sum of s_lambda over lambda with lambda_1 <= width_bound and
/// length <= nx, filtered/weighted as requested. UWeight requires a ring
/// with u.
MultiPoly bounded_schur_sum(const PolyRing& ring, int width_bound, const SchurFilter& filter);

/// Right-hand side of the identity. `denominator` is 1 or 2: the returned
/// polynomial equals denominator * RHS (keeps everything in Z coefficients).
struct RhsPoly {
    MultiPoly poly;
    int denominator = 1;
};
RhsPoly rhs_determinant(TheoremId id, int nx, int w, std::optional<int> k = std::nullopt);

/// LHS for the id at these parameters (same scaling convention: multiply the
/// plain sum by RhsPoly::denominator before comparing).
MultiPoly lhs_sum(TheoremId id, const PolyRing& ring, int w, std::optional<int> k);

PolyRing theorem_ring(TheoremId id, int nx);

/// Verify one instance; includes the u = 1 degeneration cross-check for the
/// u-weighted ids. `asserted` is false for the unasserted w = 0 Goulden cases.
CheckResult verify_identity(TheoremId id, int nx, int w, std::optional<int> k);

/// Grid driver: all n in [1, n_max], w in [w_lo, w_max], every valid k.
std::vector<CheckResult> verify_identity_grid(TheoremId id, int n_max, int w_lo, int w_max);

}  // namespace lwlab
