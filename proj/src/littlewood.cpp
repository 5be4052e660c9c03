#include <lwlab/littlewood.hpp>

#include <lwlab/ring_matrix.hpp>
#include <lwlab/symfunc.hpp>

#include <functional>
#include <stdexcept>

namespace lwlab {

namespace {

struct IdInfo {
    TheoremId id;
    const char* name;
    bool has_k;
    bool uses_u;
};

constexpr IdInfo kIds[] = {
    {TheoremId::BK_odd1, "BK_odd1", false, false},
    {TheoremId::BK_even1, "BK_even1", false, false},
    {TheoremId::G_odd_k, "G_odd_k", true, false},
    {TheoremId::G_even_k, "G_even_k", true, false},
    {TheoremId::RG_even_plus, "RG_even_plus", false, true},
    {TheoremId::RG_even_minus, "RG_even_minus", false, true},
    {TheoremId::RG_odd_plus, "RG_odd_plus", false, true},
    {TheoremId::RG_odd_minus, "RG_odd_minus", false, true},
    {TheoremId::RG2_odd_sum, "RG2_odd_sum", true, false},
    {TheoremId::RG2_odd_diff, "RG2_odd_diff", true, false},
    {TheoremId::RG2_even_sum, "RG2_even_sum", true, false},
    {TheoremId::RG2_even_diff, "RG2_even_diff", true, false},
    {TheoremId::BK2_odd, "BK2_odd", false, false},
    {TheoremId::BK2_even, "BK2_even", false, false},
    {TheoremId::G2_odd, "G2_odd", true, false},
    {TheoremId::G2_even, "G2_even", true, false},
    {TheoremId::POP_odd_sum, "POP_odd_sum", true, false},
    {TheoremId::POP_odd_diff, "POP_odd_diff", true, false},
    {TheoremId::POP_even_sum, "POP_even_sum", true, false},
    {TheoremId::POP_even_diff, "POP_even_diff", true, false},
};

const IdInfo& info(TheoremId id) {
    for (const auto& e : kIds)
        if (e.id == id) return e;
    throw std::invalid_argument("unknown theorem id");
}

int chi(bool b) { return b ? 1 : 0; }

}  // namespace

const char* theorem_name(TheoremId id) { return info(id).name; }

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    for (const auto& e : kIds)
        if (name == e.name) return e.id;
    return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
    std::vector<TheoremId> v;
    for (const auto& e : kIds) v.push_back(e.id);
    return v;
}

bool theorem_has_k(TheoremId id) { return info(id).has_k; }
bool theorem_uses_u(TheoremId id) { return info(id).uses_u; }

std::pair<int, int> theorem_k_range(TheoremId id, int n, int w) {
    switch (id) {
        case TheoremId::G_odd_k:
        case TheoremId::G_even_k:
        case TheoremId::G2_odd:
        case TheoremId::G2_even:
            return {0, n + 1};  // r(lambda) <= n; n+1 exercises the vanishing case
        case TheoremId::RG2_odd_sum:
        case TheoremId::RG2_odd_diff:
        case TheoremId::RG2_even_sum:
        case TheoremId::POP_odd_sum:
        case TheoremId::POP_odd_diff:
        case TheoremId::POP_even_sum:
            return {0, w};
        case TheoremId::RG2_even_diff:
        case TheoremId::POP_even_diff:
            return {0, w - 1};
        default:
            return {0, -1};
    }
}

PolyRing theorem_ring(TheoremId id, int nx) {
    return theorem_uses_u(id) ? PolyRing::with_extra_u(nx) : PolyRing::plain(nx);
}

namespace {

// Shared complete-homogeneous table so the Jacobi-Trudi determinants of all
// summands reuse the same generators.
struct SchurEvaluator {
    const PolyRing& ring;
    std::vector<MultiPoly> h;  // h_0 .. h_max

    SchurEvaluator(const PolyRing& r, int max_degree) : ring(r) {
        for (int k = 0; k <= max_degree; ++k) h.push_back(complete(r, k));
    }

    MultiPoly at(int k) const {
        if (k < 0) return MultiPoly(ring);
        return h[static_cast<size_t>(k)];
    }

    MultiPoly schur(const Partition& la) const {
        if (la.length() > ring.nx) return MultiPoly(ring);
        int p = la.length();
        RingMatrix<MultiPoly> m(p, p, MultiPoly(ring));
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= p; ++j) m.at(i - 1, j - 1) = at(la.part(i) - i + j);
        return determinant(m);
    }
};

}  // namespace

MultiPoly bounded_schur_sum(const PolyRing& ring, int width_bound, const SchurFilter& filter) {
    if (filter.kind == SchurFilter::UWeight && !ring.with_u)
        throw std::invalid_argument("u-weight filter needs a ring with u");
    MultiPoly acc(ring);
    SchurEvaluator ev(ring, width_bound + ring.nx);
    for_each_partition(static_cast<long>(width_bound) * ring.nx, width_bound, ring.nx,
                       [&](const Partition& la) {
                           Int mult = 0;
                           MultiPoly weight;
                           switch (filter.kind) {
                               case SchurFilter::None:
                                   mult = 1;
                                   break;
                               case SchurFilter::OddRows:
                                   mult = la.odd_rows() == filter.k ? 1 : 0;
                                   break;
                               case SchurFilter::OddCols:
                                   mult = la.odd_cols() == filter.k ? 1 : 0;
                                   break;
                               case SchurFilter::OddColsPair: {
                                   int c = la.odd_cols();
                                   mult = Int(c == filter.k ? 1 : 0) +
                                          Int(c == filter.m - filter.k ? (filter.minus ? -1 : 1)
                                                                       : 0);
                                   break;
                               }
                               case SchurFilter::UWeight: {
                                   int c = la.odd_cols();
                                   MultiPoly ua = MultiPoly::u(ring).pow(c);
                                   MultiPoly ub = MultiPoly::u(ring).pow(filter.m - c);
                                   weight = filter.minus ? ua - ub : ua + ub;
                                   break;
                               }
                           }
                           if (filter.kind == SchurFilter::UWeight) {
                               if (!weight.is_zero()) acc += ev.schur(la) * weight;
                           } else if (mult != 0) {
                               acc += ev.schur(la) * mult;
                           }
                       });
    return acc;
}

namespace {

using EntryFn = std::function<MultiPoly(int, int)>;

MultiPoly det_range(const PolyRing& ring, int lo, int hi, const EntryFn& entry) {
    int size = hi - lo + 1;
    if (size <= 0) return MultiPoly::constant(ring, 1);
    RingMatrix<MultiPoly> m(size, size, MultiPoly(ring));
    for (int i = lo; i <= hi; ++i)
        for (int j = lo; j <= hi; ++j) m.at(i - lo, j - lo) = entry(i, j);
    return determinant(m);
}

MultiPoly det_w(const PolyRing& ring, int w, const EntryFn& entry) {
    return det_range(ring, 1, w, entry);
}

// Materialized (p_1-perp)^pow applied to f_a, and differences/sums of two.
MultiPoly pop_f(const PolyRing& ring, int pow, int a) {
    return f_skew_power(pow, a).materialize(ring);
}
MultiPoly pop_f2(const PolyRing& ring, int pow, int a, int b, bool minus) {
    FComb c = minus ? f_skew_power(pow, a) - f_skew_power(pow, b)
                    : f_skew_power(pow, a) + f_skew_power(pow, b);
    return c.materialize(ring);
}

}  // namespace

RhsPoly rhs_determinant(TheoremId id, int nx, int w, std::optional<int> kopt) {
    if (info(id).has_k && !kopt) throw std::invalid_argument("theorem needs k");
    const int k = kopt.value_or(0);
    {
        auto [klo, khi] = theorem_k_range(id, nx, w);
        if (info(id).has_k && (k < klo || k > khi))
            throw std::out_of_range("k outside the theorem's stated range");
    }
    PolyRing ring = theorem_ring(id, nx);
    auto f = [&](int r) { return f_series(ring, r); };
    MultiPoly E = e_sum(ring, false), Eb = e_sum(ring, true);
    RhsPoly out{MultiPoly(ring), 1};

    switch (id) {
        case TheoremId::BK_odd1:
            out.poly = E * det_w(ring, w, [&](int i, int j) { return f(i - j) - f(i + j); });
            break;
        case TheoremId::BK_even1:
            out.poly = det_w(ring, w, [&](int i, int j) { return f(i - j) + f(i + j - 1); });
            break;
        case TheoremId::G_odd_k:
            out.poly = elementary(ring, k) *
                       det_w(ring, w, [&](int i, int j) { return f(i - j) - f(i + j); });
            break;
        case TheoremId::G_even_k:
            out.poly = det_w(ring, w, [&](int i, int j) {
                int a = i == w ? i + k : i;
                return f(a - j) - f(a + j);
            });
            break;
        case TheoremId::RG_even_plus: {
            out.denominator = 2;
            MultiPoly sum(ring);
            for (int t = 0; t <= w; ++t) {
                MultiPoly weight = MultiPoly::u(ring).pow(t) + MultiPoly::u(ring).pow(2 * w - t);
                sum += weight * det_w(ring, w, [&](int i, int j) {
                           return i <= w - t ? f(i - j) + f(i + j - 2)
                                             : f(i - j + 1) + f(i + j - 1);
                       });
            }
            out.poly = sum;
            break;
        }
        case TheoremId::RG_even_minus: {
            MultiPoly sum(ring);
            for (int t = 0; t <= w - 1; ++t) {
                MultiPoly weight = MultiPoly::u(ring).pow(t) - MultiPoly::u(ring).pow(2 * w - t);
                sum += weight * det_w(ring, w - 1, [&](int i, int j) {
                           return i <= w - t - 1 ? f(i - j) - f(i + j)
                                                 : f(i - j + 1) - f(i + j + 1);
                       });
            }
            out.poly = E * Eb * sum;
            break;
        }
        case TheoremId::RG_odd_plus: {
            MultiPoly sum(ring);
            for (int t = 0; t <= w; ++t) {
                MultiPoly weight =
                    MultiPoly::u(ring).pow(t) + MultiPoly::u(ring).pow(2 * w + 1 - t);
                sum += weight * det_w(ring, w, [&](int i, int j) {
                           return i <= w - t ? f(i - j) - f(i + j - 1)
                                             : f(i - j + 1) - f(i + j);
                       });
            }
            out.poly = E * sum;
            break;
        }
        case TheoremId::RG_odd_minus: {
            MultiPoly sum(ring);
            for (int t = 0; t <= w; ++t) {
                MultiPoly weight =
                    MultiPoly::u(ring).pow(t) - MultiPoly::u(ring).pow(2 * w + 1 - t);
                sum += weight * det_w(ring, w, [&](int i, int j) {
                           return i <= w - t ? f(i - j) + f(i + j - 1)
                                             : f(i - j + 1) + f(i + j);
                       });
            }
            out.poly = Eb * sum;
            break;
        }
        case TheoremId::RG2_odd_sum:
            out.poly = E * det_w(ring, w, [&](int i, int j) {
                           int c = i + chi(i > w - k);
                           return f(c - j) - f(c + j - 1);
                       });
            break;
        case TheoremId::RG2_odd_diff:
            out.poly = Eb * det_w(ring, w, [&](int i, int j) {
                           int c = i + chi(i > w - k);
                           return f(c - j) + f(c + j - 1);
                       });
            break;
        case TheoremId::RG2_even_sum:
            out.denominator = k < w ? 2 : 1;
            out.poly = det_w(ring, w, [&](int i, int j) {
                int c = i + chi(i > w - k);
                return f(c - j) + f(c + j - 2);
            });
            break;
        case TheoremId::RG2_even_diff:
            out.poly = E * Eb * det_range(ring, 2, w, [&](int i, int j) {
                           int c = i + chi(i > w - k);
                           return f(c - j) - f(c + j - 2);
                       });
            break;
        case TheoremId::BK2_odd:
            out.poly = E * det_w(ring, w, [&](int i, int j) {
                           return pop_f2(ring, i + j - 2, 0, 2, true);
                       });
            break;
        case TheoremId::BK2_even:
            out.poly = det_w(ring, w, [&](int i, int j) {
                return pop_f2(ring, i + j - 2, 0, 1, false);
            });
            break;
        case TheoremId::G2_odd:
            out.poly = elementary(ring, k) * det_w(ring, w, [&](int i, int j) {
                           return pop_f2(ring, i + j - 2, 0, 2, true);
                       });
            break;
        case TheoremId::G2_even:
            out.poly = det_w(ring, w, [&](int i, int j) {
                int a = i == w ? i + k : i;
                return pop_f2(ring, j - 1, a - 1, a + 1, true);
            });
            break;
        case TheoremId::POP_odd_sum:
            out.poly = E * det_w(ring, w, [&](int i, int j) {
                           int c = i + chi(i > w - k);
                           return pop_f2(ring, j - 1, c - 1, c, true);
                       });
            break;
        case TheoremId::POP_odd_diff:
            out.poly = Eb * det_w(ring, w, [&](int i, int j) {
                           int c = i + chi(i > w - k);
                           return pop_f2(ring, j - 1, c - 1, c, false);
                       });
            break;
        case TheoremId::POP_even_sum: {
            MultiPoly d = det_w(ring, w, [&](int i, int j) {
                int c = i + chi(i > w - k);
                return pop_f(ring, j - 1, c - 1);
            });
            out.poly = k == w ? d * Int(2) : d;
            break;
        }
        case TheoremId::POP_even_diff:
            out.poly = E * Eb * det_range(ring, 2, w, [&](int i, int j) {
                           int c = i + chi(i > w - k);
                           return pop_f2(ring, j - 2, c - 2, c, true);
                       });
            break;
    }
    return out;
}

MultiPoly lhs_sum(TheoremId id, const PolyRing& ring, int w, std::optional<int> kopt) {
    const int k = kopt.value_or(0);
    SchurFilter filter;
    int bound = 0;
    switch (id) {
        case TheoremId::BK_odd1:
        case TheoremId::BK2_odd:
            bound = 2 * w + 1;
            break;
        case TheoremId::BK_even1:
        case TheoremId::BK2_even:
            bound = 2 * w;
            break;
        case TheoremId::G_odd_k:
        case TheoremId::G2_odd:
            bound = 2 * w + 1;
            filter = {SchurFilter::OddRows, k, 0, false};
            break;
        case TheoremId::G_even_k:
        case TheoremId::G2_even:
            bound = 2 * w;
            filter = {SchurFilter::OddRows, k, 0, false};
            break;
        case TheoremId::RG_even_plus:
            bound = 2 * w;
            filter = {SchurFilter::UWeight, 0, 2 * w, false};
            break;
        case TheoremId::RG_even_minus:
            bound = 2 * w;
            filter = {SchurFilter::UWeight, 0, 2 * w, true};
            break;
        case TheoremId::RG_odd_plus:
            bound = 2 * w + 1;
            filter = {SchurFilter::UWeight, 0, 2 * w + 1, false};
            break;
        case TheoremId::RG_odd_minus:
            bound = 2 * w + 1;
            filter = {SchurFilter::UWeight, 0, 2 * w + 1, true};
            break;
        case TheoremId::RG2_odd_sum:
        case TheoremId::POP_odd_sum:
            bound = 2 * w + 1;
            filter = {SchurFilter::OddColsPair, k, 2 * w + 1, false};
            break;
        case TheoremId::RG2_odd_diff:
        case TheoremId::POP_odd_diff:
            bound = 2 * w + 1;
            filter = {SchurFilter::OddColsPair, k, 2 * w + 1, true};
            break;
        case TheoremId::RG2_even_sum:
        case TheoremId::POP_even_sum:
            bound = 2 * w;
            filter = {SchurFilter::OddColsPair, k, 2 * w, false};
            break;
        case TheoremId::RG2_even_diff:
        case TheoremId::POP_even_diff:
            bound = 2 * w;
            filter = {SchurFilter::OddColsPair, k, 2 * w, true};
            break;
    }
    return bounded_schur_sum(ring, bound, filter);
}

CheckResult verify_identity(TheoremId id, int nx, int w, std::optional<int> k) {
    CheckResult res;
    res.name = theorem_name(id);
    res.with("n", nx).with("w", w);
    if (theorem_has_k(id)) res.with("k", k.value());

    PolyRing ring = theorem_ring(id, nx);
    RhsPoly rhs = rhs_determinant(id, nx, w, k);
    MultiPoly lhs = lhs_sum(id, ring, w, k) * Int(rhs.denominator);
    bool equal = (lhs == rhs.poly);

    if (theorem_uses_u(id)) {
        // u = 1 degeneration: minus variants vanish, plus variants give twice
        // the corresponding unrefined bounded sum.
        MultiPoly at1 = lhs.substitute_u_one();
        bool minus = id == TheoremId::RG_even_minus || id == TheoremId::RG_odd_minus;
        if (minus) {
            equal = equal && at1.is_zero() && rhs.poly.substitute_u_one().is_zero();
        } else {
            PolyRing plain = PolyRing::plain(nx);
            int bound = id == TheoremId::RG_even_plus ? 2 * w : 2 * w + 1;
            MultiPoly full = bounded_schur_sum(plain, bound, SchurFilter{});
            equal = equal && (at1 == full * Int(2 * rhs.denominator));
        }
    }

    res.pass = equal;
    res.lhs_hash = lhs.canonical_hash();
    res.rhs_hash = rhs.poly.canonical_hash();
    // The row-refined identities hold for w >= 1; w = 0 runs are
    // informational only (the empty-determinant edge breaks them for k > 0).
    if (w == 0 && (id == TheoremId::G_odd_k || id == TheoremId::G_even_k ||
                   id == TheoremId::G2_odd || id == TheoremId::G2_even))
        res.asserted = false;
    return res;
}

std::vector<CheckResult> verify_identity_grid(TheoremId id, int n_max, int w_lo, int w_max) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= n_max; ++n) {
        for (int w = w_lo; w <= w_max; ++w) {
            if (theorem_has_k(id)) {
                auto [klo, khi] = theorem_k_range(id, n, w);
                for (int k = klo; k <= khi; ++k) out.push_back(verify_identity(id, n, w, k));
            } else {
                out.push_back(verify_identity(id, n, w, std::nullopt));
            }
        }
    }
    return out;
}

}  // namespace lwlab
