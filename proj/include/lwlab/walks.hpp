#pragma once

#include <lwlab/multipoly.hpp>
#include <lwlab/partition.hpp>
#include <lwlab/report.hpp>

#include <functional>
#include <vector>

namespace lwlab {

/// w-up-down tableau of length 2n from mu to nu: alternating grow/shrink by
/// vertical strips, all lengths <= w.
struct UpDownTableau {
    int w = 0;
    std::vector<Partition> seq;  // T_0 .. T_2n

    int blocks() const { return static_cast<int>(seq.size() - 1) / 2; }
    /// Exponent of x_i in omega(T): -|T_{2i-2}| + 2|T_{2i-1}| - |T_{2i}|.
    std::vector<int> weight_exponents() const;
    MultiPoly weight(const PolyRing& ring) const;
};

struct PeakInfo {
    std::vector<int> peaks;      // blocks j with l(T_{2j-2}) < l(T_{2j-1}) > l(T_{2j})
    std::vector<int> full_peaks; // peaks with l(T_{2j-1}) = w
    std::vector<int> ew;         // E_w: l(T_{2j-2}) < l(T_{2j-1}) = l(T_{2j}) = w
    int peak_count = 0;
    bool all_peaks_full = true;
    bool all_below_w = true;  // l(T_j) < w for every j
};
PeakInfo classify_peaks(const UpDownTableau& t);

void enumerate_ud(int n, int w, const Partition& mu, const Partition& nu,
                  const std::function<void(const UpDownTableau&)>& fn);

enum class MudClass { Mud, MudO, MudStar, MudLt, Mud1, Mud0e, Mud0o, MudEe, MudEo };

/// Enumerate (T, S) pairs of the marked class; marks are block indices 1..n.
void enumerate_marked(MudClass cls, int n, int w, const Partition& mu, const Partition& nu,
                      const std::function<void(const UpDownTableau&, const std::vector<int>&)>& fn);

/// w-vacillating tableau of length n: consecutive partitions differ by at
/// most one cell, lengths <= w. Walk view: steps 0, +eps_i, -eps_i.
struct VacTableau {
    int w = 0;
    std::vector<Partition> seq;  // T_0 .. T_n
    int zero_steps() const;
};

enum class VtClass {
    Vt,           // all walks
    VtGt,         // zero steps only at full length w
    VtZeroOnAxis, // zero steps only when x_w = 0
    MvtStar,      // no zero steps; marks on +eps_w steps starting at x_w = 0
    Mvt0,         // MvtStar minus: first +eps_w step unmarked (or none)
    Mvt1,         // MvtStar with the first +eps_w step marked
};

void enumerate_vt(VtClass cls, int n, int w, const Partition& mu, const Partition& nu,
                  const std::function<void(const VacTableau&, const std::vector<int>&)>& fn);

Int count_vt(VtClass cls, int n, int w, const Partition& mu, const Partition& nu);

/// Number of w-tuples of pairwise disjoint lattice paths matching the up-down
/// tableau identification (path i from (mu_{w+1-i}+i, 0) to (nu_{w+1-i}+i, 2n),
/// even heights >= 1).
Int count_nonintersecting_families(int n, int w, const Partition& mu, const Partition& nu);

/// Generating-function identities for single weighted lattice paths.
enum class PathEq { Lem0, Lem1, Lem2, Lem3, Lem4 };
CheckResult check_path_gf(PathEq eq, int i, int j, int n);

/// Identities between bounded Schur sums / SYT counts and (marked) tableau or
/// walk enumerations.
enum class CombThm {
    GouldenMUDeven,
    GouldenMUDodd,
    UDodd1,
    UDodd2,
    UDeven,
    UDevenPrime,
    UDevenH,
    SYTodd,
    SYTeven,
    Zeilberger,
    EuEtAl,
};

const char* comb_thm_name(CombThm t);
/// n is the variable count for the polynomial identities (section-7 style) and
/// the walk length for the counting identities (section-8 style).
CheckResult check_combinatorial(CombThm t, int n, int w, int k);
/// Valid k range (inclusive); {0,-1} when the theorem takes no k.
std::pair<int, int> comb_k_range(CombThm t, int n, int w);

}  // namespace lwlab
