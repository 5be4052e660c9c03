#include <lwlab/schur_ring.hpp>

#include <random>
#include <stdexcept>

namespace lwlab {

SchurExpansion SchurExpansion::single(int truncation, const Partition& p, Int c) {
    SchurExpansion s(truncation);
    if (p.size() <= truncation) s.add(p, c);
    return s;
}

void SchurExpansion::add(const Partition& p, const Int& c) {
    if (c == 0) return;
    auto it = c_.find(p);
    if (it == c_.end()) {
        c_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

Int SchurExpansion::coeff(const Partition& p) const {
    auto it = c_.find(p);
    return it == c_.end() ? Int(0) : it->second;
}

SchurExpansion SchurExpansion::operator+(const SchurExpansion& o) const {
    if (d_ != o.d_) throw std::invalid_argument("truncation mismatch");
    SchurExpansion r = *this;
    for (const auto& [p, c] : o.c_) r.add(p, c);
    return r;
}

SchurExpansion SchurExpansion::operator-(const SchurExpansion& o) const {
    if (d_ != o.d_) throw std::invalid_argument("truncation mismatch");
    SchurExpansion r = *this;
    for (const auto& [p, c] : o.c_) r.add(p, -c);
    return r;
}

SchurExpansion SchurExpansion::operator*(const Int& c) const {
    SchurExpansion r(d_);
    if (c == 0) return r;
    for (const auto& [p, co] : c_) r.c_.emplace(p, co * c);
    return r;
}

namespace {

// All mu >= lambda with mu/lambda a vertical strip of exactly k cells.
void vertical_strips(const Partition& lambda, int k,
                     const std::function<void(const Partition&)>& fn) {
    int rows = lambda.length() + k;  // at most k new rows below
    std::vector<int> mu(rows, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i > rows) {
            if (left == 0) fn(Partition(std::vector<int>(mu.begin(), mu.begin() + rows)));
            return;
        }
        // choose mu_i = lambda_i + b with b in {0,1}
        for (int b = 0; b <= 1 && b <= left; ++b) {
            int v = lambda.part(i) + b;
            if (i > 1 && v > mu[i - 2]) continue;  // keep weakly decreasing
            mu[i - 1] = v;
            // prune: remaining rows can absorb at most one cell each
            if (left - b <= rows - i) self(self, i + 1, left - b);
        }
    };
    rec(rec, 1, k);
}

}  // namespace

SchurExpansion SchurExpansion::pieri_e(int k) const {
    if (k < 0) throw std::invalid_argument("pieri_e wants k >= 0");
    if (k == 0) return *this;
    SchurExpansion r(d_);
    for (const auto& [lambda, c] : c_) {
        if (lambda.size() + k > d_) continue;
        vertical_strips(lambda, k, [&](const Partition& mu) { r.add(mu, c); });
    }
    return r;
}

SchurExpansion SchurExpansion::p1_perp() const {
    SchurExpansion r(d_);
    for (const auto& [lambda, c] : c_) {
        for (int i = 1; i <= lambda.length(); ++i) {
            if (lambda.part(i) > lambda.part(i + 1)) {
                std::vector<int> mu = lambda.parts();
                mu[i - 1] -= 1;
                r.add(Partition(std::move(mu)), c);
            }
        }
    }
    return r;
}

Int SchurExpansion::hall(const SchurExpansion& o) const {
    if (d_ != o.d_) throw std::invalid_argument("truncation mismatch");
    Int acc = 0;
    for (const auto& [p, c] : c_) {
        auto it = o.c_.find(p);
        if (it != o.c_.end()) acc += c * it->second;
    }
    return acc;
}

SchurExpansion SchurExpansion::truncate(int d) const {
    if (d > d_) throw std::invalid_argument("truncate cannot extend");
    SchurExpansion r(d);
    for (const auto& [p, c] : c_)
        if (p.size() <= d) r.c_.emplace(p, c);
    return r;
}

MultiPoly SchurExpansion::to_poly(const PolyRing& ring) const {
    MultiPoly acc(ring);
    for (const auto& [p, c] : c_) acc += schur(ring, p) * c;
    return acc;
}

SchurExpansion f_in_schur(int r, int truncation) {
    int a = r < 0 ? -r : r;
    SchurExpansion acc(truncation);
    for (int m = 0; 2 * m + a <= truncation; ++m)
        acc = acc + SchurExpansion::one(truncation).pieri_e(m).pieri_e(m + a);
    return acc;
}

SchurExpansion e_product_in_schur(const std::vector<int>& ks, int truncation) {
    SchurExpansion acc = SchurExpansion::one(truncation);
    for (int k : ks) acc = acc.pieri_e(k);
    return acc;
}

namespace {

SchurExpansion p1_perp_pow(const SchurExpansion& a, int j) {
    SchurExpansion r = a;
    for (int t = 0; t < j; ++t) r = r.p1_perp();
    return r;
}

SchurExpansion fcomb_in_schur(const FComb& c, int truncation) {
    SchurExpansion acc(truncation);
    for (const auto& [r, co] : c.coeffs()) acc = acc + f_in_schur(r, truncation) * co;
    return acc;
}

}  // namespace

std::vector<CheckResult> check_skew_lemmas(int truncation, int i_lo, int i_hi, int j_max,
                                           int trials, uint64_t seed) {
    std::vector<CheckResult> out;
    const int D = truncation;
    for (int i = i_lo; i <= i_hi; ++i) {
        for (int j = 0; j <= j_max; ++j) {
            // closed form for the j-th skew power of f_i
            {
                SchurExpansion lhs = p1_perp_pow(f_in_schur(i, D), j).truncate(D - j);
                SchurExpansion rhs = fcomb_in_schur(f_skew_power(j, i), D).truncate(D - j);
                CheckResult res;
                res.name = "skew_power_closed_form";
                res.with("D", D).with("i", i).with("j", j);
                res.pass = (lhs == rhs);
                out.push_back(std::move(res));
            }
            if (j == 0) continue;
            // column-operation forms: (p1-perp)^{j-1}(f_{i-1} +- f_{i+1}) and
            // (p1-perp)^{j-1}(f_{i-1} +- f_i)
            for (bool minus : {false, true}) {
                Int sgn = minus ? -1 : 1;
                SchurExpansion lhs_h =
                    p1_perp_pow(f_in_schur(i - 1, D) + f_in_schur(i + 1, D) * sgn, j - 1)
                        .truncate(D - (j - 1));
                FComb rhs_h = FComb::single(i - j) + FComb::single(i + j, sgn);
                for (int r = 1; r <= j - 1; ++r) {
                    Int b = binomial(j - 1, r);
                    rhs_h = rhs_h + FComb::single(i - (j - 2 * r), b) +
                            FComb::single(i + (j - 2 * r), sgn * b);
                }
                SchurExpansion lhs_p =
                    p1_perp_pow(f_in_schur(i - 1, D) + f_in_schur(i, D) * sgn, j - 1)
                        .truncate(D - (j - 1));
                FComb rhs_p = FComb::single(i - j) + FComb::single(i + j - 1, sgn);
                for (int r = 1; r <= j - 1; ++r) {
                    Int b = binomial(j - 1, r);
                    rhs_p = rhs_p + FComb::single(i - (j - 2 * r), b) +
                            FComb::single(i + (j - 2 * r) - 1, sgn * b);
                }
                CheckResult res;
                res.name = "skew_column_ops";
                res.with("D", D).with("i", i).with("j", j).with("sign", minus ? "-" : "+");
                res.pass = (lhs_h == fcomb_in_schur(rhs_h, D).truncate(D - (j - 1))) &&
                           (lhs_p == fcomb_in_schur(rhs_p, D).truncate(D - (j - 1)));
                out.push_back(std::move(res));
            }
        }
    }
    // derivation property p1_perp(fg) = (p1_perp f) g + f (p1_perp g) on
    // e-products small enough to avoid truncation loss
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, std::max(1, D / 4));
    for (int t = 0; t < trials; ++t) {
        std::vector<int> fa{pick(rng), pick(rng)};
        std::vector<int> ga{pick(rng)};
        long deg = fa[0] + fa[1] + ga[0];
        if (deg > D) continue;
        SchurExpansion f = e_product_in_schur(fa, D);
        SchurExpansion g = e_product_in_schur(ga, D);
        SchurExpansion prod = f;
        for (int k : ga) prod = prod.pieri_e(k);
        SchurExpansion lhs = prod.p1_perp();
        SchurExpansion left = f.p1_perp();
        for (int k : ga) left = left.pieri_e(k);
        SchurExpansion right = g.p1_perp();
        for (int k : fa) right = right.pieri_e(k);
        CheckResult res;
        res.name = "skew_derivation";
        res.with("D", D).with("trial", t).with("seed", (long long)seed);
        res.pass = (lhs == left + right);
        out.push_back(std::move(res));
    }
    return out;
}

namespace {

SchurExpansion random_expansion(int truncation, std::mt19937_64& rng,
                                const std::vector<Partition>& pool, int terms) {
    std::uniform_int_distribution<size_t> pi(0, pool.size() - 1);
    std::uniform_int_distribution<int> ci(-5, 5);
    SchurExpansion a(truncation);
    for (int t = 0; t < terms; ++t)
        a = a + SchurExpansion::single(truncation, pool[pi(rng)], ci(rng));
    return a;
}

}  // namespace

std::vector<CheckResult> check_adjointness(int truncation, int pairs, uint64_t seed) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);
    std::vector<Partition> pool = partitions_up_to(truncation);
    for (int t = 0; t < pairs; ++t) {
        SchurExpansion a = random_expansion(truncation, rng, pool, 5);
        SchurExpansion b = random_expansion(truncation, rng, pool, 5);
        CheckResult res;
        res.name = "hall_adjointness";
        res.with("D", truncation).with("pair", t).with("seed", (long long)seed);
        res.pass = (a.p1_perp().hall(b) == a.hall(b.times_s1()));
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace lwlab
