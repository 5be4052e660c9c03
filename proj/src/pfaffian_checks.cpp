#include <lwlab/pfaffian_checks.hpp>

#include <lwlab/partition.hpp>
#include <lwlab/symfunc.hpp>

#include <cstdlib>
#include <random>
#include <stdexcept>

namespace lwlab {

SkewSymbolPoly skew_symbol(const PolyRing& ring, int k) {
    if (k == 0) return MultiPoly(ring);
    MultiPoly z = MultiPoly::variable(ring, std::abs(k));
    return k > 0 ? z : -z;
}

CheckResult check_gordon(int w, int variant) {
    CheckResult res;
    res.name = "gordon_G" + std::to_string(variant);
    res.with("w", w);
    PolyRing ring = PolyRing::plain(2 * w - 1 > 0 ? 2 * w - 1 : 1);
    MultiPoly zero(ring);

    RingMatrix<MultiPoly> pf_m(2 * w, 2 * w, zero);
    for (int i = 1; i <= 2 * w; ++i)
        for (int j = 1; j <= 2 * w; ++j) pf_m.at(i - 1, j - 1) = skew_symbol(ring, j - i);
    MultiPoly lhs = pfaffian(pf_m);

    RingMatrix<MultiPoly> det_m(w, w, zero);
    Int scale = 1;
    for (int i = 1; i <= w; ++i) {
        for (int j = 1; j <= w; ++j) {
            MultiPoly entry(ring);
            switch (variant) {
                case 1:
                    // z_{i-j+1} + z_{i-j+3} + ... + z_{i+j-1}
                    for (int t = i - j + 1; t <= i + j - 1; t += 2)
                        entry += skew_symbol(ring, t);
                    break;
                case 2:
                    if (j == 1)
                        entry = skew_symbol(ring, i) - skew_symbol(ring, i - 2);
                    else
                        entry = skew_symbol(ring, i - j + 1) - skew_symbol(ring, i - j - 1) +
                                skew_symbol(ring, i + j - 1) - skew_symbol(ring, i + j - 3);
                    break;
                case 3:
                    for (int t = 1; t <= 2 * j - 1; ++t)
                        entry += skew_symbol(ring, i - j + t) + skew_symbol(ring, i - j + t - 1);
                    break;
                case 4:
                    for (int t = 1; t <= 2 * j - 1; ++t) {
                        MultiPoly d =
                            skew_symbol(ring, i - j + t) - skew_symbol(ring, i - j + t - 1);
                        entry = (t % 2 == 1) ? entry + d : entry - d;
                    }
                    break;
                default:
                    throw std::invalid_argument("gordon variant must be 1..4");
            }
            det_m.at(i - 1, j - 1) = entry;
        }
        if (variant == 2) scale = 2;
    }
    MultiPoly rhs = determinant(det_m);
    MultiPoly lhs_scaled = lhs * scale;  // G2 carries a global 1/2
    res.pass = (lhs_scaled == rhs);
    res.lhs_hash = lhs_scaled.canonical_hash();
    res.rhs_hash = rhs.canonical_hash();
    return res;
}

namespace {

RingMatrix<Int> random_int_matrix(int rows, int cols, std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    RingMatrix<Int> m(rows, cols, Int(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

RingMatrix<Int> random_skew_matrix(int n, std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    RingMatrix<Int> m(n, n, Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int v = dist(rng);
            m.at(i, j) = v;
            m.at(j, i) = -v;
        }
    return m;
}

void subsets_of_size(int p, int m, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> k(m);
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == m) {
            fn(k);
            return;
        }
        for (int v = next; v < p; ++v) {
            k[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

std::vector<CheckResult> check_minor_summation(int m, int p, int trials, uint64_t seed) {
    if (m % 2 != 0 || m > p) throw std::invalid_argument("minor summation wants even m <= p");
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        RingMatrix<Int> a = random_skew_matrix(p, rng, -9, 9);
        RingMatrix<Int> mm = random_int_matrix(m, p, rng, -9, 9);
        Int lhs = 0;
        std::vector<int> all_rows(m);
        for (int i = 0; i < m; ++i) all_rows[i] = i;
        subsets_of_size(p, m, [&](const std::vector<int>& k) {
            lhs += pfaffian(a.submatrix(k, k)) * determinant(mm.submatrix(all_rows, k));
        });
        Int rhs = pfaffian(mm * a * mm.transpose());
        CheckResult res;
        res.name = "minor_summation";
        res.with("m", m).with("p", p).with("trial", t).with("seed", (long long)seed);
        res.pass = (lhs == rhs);
        out.push_back(std::move(res));
    }
    return out;
}

std::vector<CheckResult> check_sum_det(int n_max, int trials, uint64_t seed) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int n = 1; n <= n_max; ++n) {
        for (int t = 0; t < trials; ++t) {
            std::vector<std::vector<Int>> v(n + 1, std::vector<Int>(n));
            for (auto& row : v)
                for (auto& x : row) x = dist(rng);
            std::vector<Int> beta(n + 1), gamma(n + 1);
            for (int i = 1; i <= n; ++i) {
                beta[i] = dist(rng);
                gamma[i] = dist(rng);
            }
            RingMatrix<Int> m(n, n, Int(0));
            for (int i = 1; i <= n; ++i)
                for (int j = 0; j < n; ++j)
                    m.at(i - 1, j) = beta[i] * v[i - 1][j] + gamma[i] * v[i][j];
            Int lhs = determinant(m);
            Int rhs = 0;
            for (int k = 0; k <= n; ++k) {
                Int c = 1;
                for (int i = 1; i <= k; ++i) c *= beta[i];
                for (int j = k + 1; j <= n; ++j) c *= gamma[j];
                RingMatrix<Int> vk(n, n, Int(0));
                int r = 0;
                for (int i = 0; i <= n; ++i) {
                    if (i == k) continue;
                    for (int j = 0; j < n; ++j) vk.at(r, j) = v[i][j];
                    ++r;
                }
                rhs += c * determinant(vk);
            }
            CheckResult res;
            res.name = "sum_det";
            res.with("n", n).with("trial", t).with("seed", (long long)seed);
            res.pass = (lhs == rhs);
            out.push_back(std::move(res));
        }
    }
    return out;
}

std::vector<CheckResult> check_pf_n(int n_max) {
    std::vector<CheckResult> out;
    for (int n = 2; n <= n_max; n += 2) {
        RingMatrix<Int> m(n, n, Int(0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int v = (j - i) % 2 == 1 ? 1 : 0;
                m.at(i, j) = v;
                m.at(j, i) = -v;
            }
        Int expect = 1;
        for (int i = 0; i < n / 2 - 1; ++i) expect *= 2;
        CheckResult res;
        res.name = "pf_N";
        res.with("n", n);
        res.pass = (pfaffian(m) == expect);
        out.push_back(std::move(res));
    }
    return out;
}

std::vector<CheckResult> check_pf_m(int n_max, int trials, uint64_t seed) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);
    for (int n = 2; n <= n_max; n += 2) {
        PolyRing ring = PolyRing::plain(n);
        MultiPoly zero(ring), one = MultiPoly::constant(ring, 1);
        for (int t = 0; t < trials; ++t) {
            std::vector<int> eps(n + 1);
            for (int i = 1; i <= n; ++i) eps[i] = rng() % 2 == 0 ? 1 : -1;
            RingMatrix<MultiPoly> m(n, n, zero);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    MultiPoly ui = MultiPoly::variable(ring, i);
                    MultiPoly uj = MultiPoly::variable(ring, j);
                    int parity = ((i + j) % 2 == 0) ? 1 : -1;
                    MultiPoly entry =
                        (eps[i] * eps[j] == -parity) ? one + ui * uj : ui + uj;
                    m.at(i - 1, j - 1) = entry;
                    m.at(j - 1, i - 1) = -entry;
                }
            MultiPoly plus = one, minus = one;
            for (int i = 1; i <= n; ++i) {
                if (eps[i] == 1)
                    plus *= MultiPoly::variable(ring, i);
                else
                    minus *= MultiPoly::variable(ring, i);
            }
            Int pw = 1;
            for (int i = 0; i < n / 2 - 1; ++i) pw *= 2;
            MultiPoly expect = (plus + minus) * pw;
            CheckResult res;
            res.name = "pf_M";
            res.with("n", n).with("trial", t).with("seed", (long long)seed);
            res.pass = (pfaffian(m) == expect);
            out.push_back(std::move(res));
        }
    }
    return out;
}

namespace {

// Entries of the skew-symmetric matrix over Z[u] indexed by 0 < 0' < 1 < 2 < ...
// Labels are encoded as 0 -> 0, 0' -> 1, k -> k+1.
MultiPoly sub_pf_entry(const PolyRing& ring, int a, int b) {
    if (a == b) return MultiPoly(ring);
    if (a > b) return -sub_pf_entry(ring, b, a);
    MultiPoly one = MultiPoly::constant(ring, 1);
    MultiPoly u = MultiPoly::u(ring);
    if (a == 0) {
        if (b == 1) return MultiPoly(ring);  // a_{0,0'} = 0
        return one + u;
    }
    if (a == 1) {
        int j = b - 1;
        MultiPoly v = one - u;
        return (j % 2 == 1) ? v : -v;
    }
    int i = a - 1, j = b - 1;
    if ((j - i) % 2 == 1) return one + u * u;
    return (u + u) * 1;
}

MultiPoly sub_pfaffian_of_labels(const PolyRing& ring, const std::vector<int>& labels) {
    RingMatrix<MultiPoly> m(static_cast<int>(labels.size()), static_cast<int>(labels.size()),
                            MultiPoly(ring));
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = 0; j < labels.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) =
                sub_pf_entry(ring, labels[i], labels[j]);
    return pfaffian(m);
}

MultiPoly u_binomial(const PolyRing& ring, Int scale, int e1, int e2, bool minus) {
    MultiPoly t = MultiPoly::u(ring).pow(e1);
    MultiPoly s = MultiPoly::u(ring).pow(e2);
    return (minus ? t - s : t + s) * scale;
}

}  // namespace

std::vector<CheckResult> check_sub_pfaffian(int mu_size_max, int h_max) {
    std::vector<CheckResult> out;
    PolyRing ring = PolyRing::with_extra_u(0);
    auto push = [&](const char* variant, const Partition& mu, int h, const MultiPoly& got,
                    const MultiPoly& expect) {
        CheckResult res;
        res.name = "sub_pfaffian";
        res.with("variant", variant).with("mu", mu.to_string()).with("h", h);
        res.pass = (got == expect);
        res.lhs_hash = got.canonical_hash();
        res.rhs_hash = expect.canonical_hash();
        out.push_back(std::move(res));
    };
    for (int h = 1; h <= h_max; ++h) {
        for (const Partition& mu : partitions_up_to(mu_size_max)) {
            Int two_hm1 = 1;
            for (int i = 0; i < h - 1; ++i) two_hm1 *= 2;
            if (mu.length() <= 2 * h) {
                int m = 2 * h;
                std::vector<int> labels;
                for (int v : index_sequence(mu, m)) labels.push_back(v + 1);
                int r = mu.odd_rows();
                push("even_plain", mu, h, sub_pfaffian_of_labels(ring, labels),
                     u_binomial(ring, two_hm1, r, 2 * h - r, false));

                std::vector<int> with00 = {0, 1};
                with00.insert(with00.end(), labels.begin(), labels.end());
                push("even_00", mu, h, sub_pfaffian_of_labels(ring, with00),
                     u_binomial(ring, two_hm1 * 2, r, 2 * h - r, true));
            }
            if (mu.length() <= 2 * h + 1) {
                int m = 2 * h + 1;
                std::vector<int> labels;
                for (int v : index_sequence(mu, m)) labels.push_back(v + 1);
                int r = mu.odd_rows();
                Int two_h = two_hm1 * 2;
                std::vector<int> with0 = {0};
                with0.insert(with0.end(), labels.begin(), labels.end());
                push("odd_0", mu, h, sub_pfaffian_of_labels(ring, with0),
                     u_binomial(ring, two_h, r, 2 * h + 1 - r, false));

                std::vector<int> with0p = {1};
                with0p.insert(with0p.end(), labels.begin(), labels.end());
                push("odd_0p", mu, h, sub_pfaffian_of_labels(ring, with0p),
                     u_binomial(ring, two_h, r, 2 * h + 1 - r, true));
            }
        }
    }
    return out;
}

std::vector<CheckResult> check_jt_minors(int m_max, int col_range, int nx) {
    std::vector<CheckResult> out;
    PolyRing ring = PolyRing::plain(nx);
    // T row labels: 0, 0', 1..m; column labels: 0, 0', 1, 2, ... (encoded +1 shift)
    auto t_entry = [&](int row_label, int col_label) -> MultiPoly {
        if (row_label <= 1 || col_label <= 1) {
            return row_label == col_label ? MultiPoly::constant(ring, 1) : MultiPoly(ring);
        }
        int i = row_label - 1, r = col_label - 1;
        return elementary(ring, r - i);
    };
    auto det_of = [&](const std::vector<int>& row_labels, const std::vector<int>& col_labels) {
        RingMatrix<MultiPoly> m(static_cast<int>(row_labels.size()),
                                static_cast<int>(col_labels.size()), MultiPoly(ring));
        for (size_t i = 0; i < row_labels.size(); ++i)
            for (size_t j = 0; j < col_labels.size(); ++j)
                m.at(static_cast<int>(i), static_cast<int>(j)) =
                    t_entry(row_labels[i], col_labels[j]);
        return determinant(m);
    };
    auto expected = [&](const std::vector<int>& positive_cols) -> MultiPoly {
        std::vector<int> seq;
        for (int c : positive_cols) seq.push_back(c - 1);
        auto mu = index_sequence_inverse(seq);
        if (!mu) return MultiPoly(ring);
        return schur(ring, mu->conjugate());
    };
    for (int m = 1; m <= m_max; ++m) {
        std::vector<int> base_rows;
        for (int i = 1; i <= m; ++i) base_rows.push_back(i + 1);

        // case (1): columns from 1,2,...
        subsets_of_size(col_range, m, [&](const std::vector<int>& pick) {
            std::vector<int> cols;
            for (int v : pick) cols.push_back(v + 2);  // positive labels 1..col_range
            CheckResult res;
            res.name = "jt_minor";
            res.with("case", 1).with("m", m);
            res.pass = (det_of(base_rows, cols) == expected(cols));
            out.push_back(std::move(res));
        });

        // cases (2),(3),(4): prefixes of 0/0' rows; columns may or may not
        // include the 0/0' columns, and the determinant must vanish when the
        // prefix columns are not matched.
        struct PrefixCase {
            int id;
            std::vector<int> rows_prefix;
        };
        for (const auto& pc : {PrefixCase{2, {0, 1}}, PrefixCase{3, {0}}, PrefixCase{4, {1}}}) {
            std::vector<int> rows = pc.rows_prefix;
            rows.insert(rows.end(), base_rows.begin(), base_rows.end());
            int extra = static_cast<int>(pc.rows_prefix.size());
            // choose columns: any increasing sequence of length m+extra from
            // the label alphabet {0, 0', 1..col_range}
            subsets_of_size(col_range + 2, m + extra, [&](const std::vector<int>& pick) {
                std::vector<int> cols(pick);  // labels already 0,1,2,... encoded
                for (int& v : cols) {
                    if (v >= 2) continue;  // 0 -> 0 label, 1 -> 0' label stay
                }
                MultiPoly expect(ring);
                // matched iff columns start with exactly the same prefix labels
                bool matched = true;
                for (int i = 0; i < extra; ++i)
                    if (i >= static_cast<int>(cols.size()) || cols[i] != pc.rows_prefix[i])
                        matched = false;
                for (int i = extra; i < static_cast<int>(cols.size()); ++i)
                    if (cols[i] < 2) matched = false;
                if (matched) {
                    std::vector<int> tail(cols.begin() + extra, cols.end());
                    expect = expected(tail);
                }
                CheckResult res;
                res.name = "jt_minor";
                res.with("case", pc.id).with("m", m);
                res.pass = (det_of(rows, cols) == expect);
                out.push_back(std::move(res));
            });
        }
    }
    return out;
}

std::vector<CheckResult> check_aux_lemmas(int n_max, int trials, uint64_t seed) {
    std::vector<CheckResult> out;
    auto add = [&](std::vector<CheckResult> rs) {
        for (auto& r : rs) out.push_back(std::move(r));
    };
    add(check_sum_det(n_max, trials, seed));
    add(check_pf_n(n_max));
    add(check_pf_m(std::min(n_max, 6), trials, seed + 1));
    add(check_sub_pfaffian(4, 2));
    add(check_jt_minors(3, 6, 2));
    return out;
}

}  // namespace lwlab
