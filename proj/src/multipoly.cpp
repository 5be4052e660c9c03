#include <lwlab/multipoly.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lwlab {

bool GrevlexLess::operator()(const Mono& a, const Mono& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

void MultiPoly::insert_term(Mono m, Int c) {
    if (c == 0) return;
    if (!ring_.laurent) {
        for (int e : m)
            if (e < 0) throw std::domain_error("negative exponent in non-laurent ring");
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const PolyRing& MultiPoly::join(const PolyRing& a, const PolyRing& b) {
    if (a.untyped()) return b;
    if (b.untyped()) return a;
    if (!(a == b)) throw std::invalid_argument("MultiPoly ring mismatch");
    return a;
}

MultiPoly MultiPoly::constant(PolyRing ring, Int c) {
    MultiPoly p(ring);
    p.insert_term(Mono(ring.slots(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(PolyRing ring, int i, int power) {
    if (i < 1 || i > ring.nx) throw std::out_of_range("variable index");
    Mono m(ring.slots(), 0);
    m[i - 1] = ring.half ? 2 * power : power;
    return monomial(ring, std::move(m), 1);
}

MultiPoly MultiPoly::half_power(PolyRing ring, int i, int num) {
    if (!ring.half) throw std::domain_error("half_power requires a half-exponent ring");
    if (i < 1 || i > ring.nx) throw std::out_of_range("variable index");
    Mono m(ring.slots(), 0);
    m[i - 1] = num;
    return monomial(ring, std::move(m), 1);
}

MultiPoly MultiPoly::u(PolyRing ring, int power) {
    if (!ring.with_u) throw std::domain_error("ring has no u slot");
    Mono m(ring.slots(), 0);
    m.back() = ring.half ? 2 * power : power;
    return monomial(ring, std::move(m), 1);
}

MultiPoly MultiPoly::monomial(PolyRing ring, Mono m, Int c) {
    if (static_cast<int>(m.size()) != ring.slots())
        throw std::invalid_argument("monomial arity mismatch");
    MultiPoly p(ring);
    p.insert_term(std::move(m), std::move(c));
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r(join(ring_, o.ring_));
    r.terms_ = ring_.untyped() ? o.terms_ : terms_;
    if (ring_.untyped()) {
        for (const auto& [m, c] : terms_) r.insert_term(m, c);
    } else {
        for (const auto& [m, c] : o.terms_) r.insert_term(m, c);
    }
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(join(ring_, o.ring_));
    Mono m(r.ring_.slots(), 0);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.insert_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Int& c) const {
    if (c == 0) return MultiPoly(ring_);
    MultiPoly r(ring_);
    for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (!ring_.untyped() && !o.ring_.untyped() && !(ring_ == o.ring_)) return false;
    return terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("negative power");
    MultiPoly r = constant(ring_.untyped() ? PolyRing::plain(0) : ring_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Int MultiPoly::coefficient(const Mono& m) const {
    if (static_cast<int>(m.size()) != ring_.slots())
        throw std::invalid_argument("coefficient arity mismatch");
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

Int MultiPoly::coefficient_x(const std::vector<int>& whole) const {
    Mono m(ring_.slots(), 0);
    if (static_cast<int>(whole.size()) > ring_.nx)
        throw std::invalid_argument("coefficient arity mismatch");
    for (size_t i = 0; i < whole.size(); ++i) m[i] = ring_.half ? 2 * whole[i] : whole[i];
    return coefficient(m);
}

namespace {

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return 1;
    Rat b = base;
    if (e < 0) {
        if (b == 0) throw std::domain_error("zero to a negative exponent");
        b = Rat(denominator(b), numerator(b));
        e = -e;
    }
    Rat r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

Rat rat_sqrt_exact(const Rat& v) {
    using boost::multiprecision::sqrt;
    if (v < 0) throw std::domain_error("sqrt of negative value");
    Int n = numerator(v), d = denominator(v);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d)
        throw std::domain_error("half exponent needs a perfect-square coordinate");
    return Rat(sn, sd);
}

}  // namespace

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != ring_.slots())
        throw std::invalid_argument("evaluation arity mismatch");
    Rat acc = 0;
    for (const auto& [m, c] : terms_) {
        Rat t(c);
        for (size_t i = 0; i < m.size(); ++i) {
            int e = m[i];
            if (e == 0) continue;
            if (ring_.half) {
                if (e % 2 == 0) {
                    t *= rat_pow(point[i], e / 2);
                } else {
                    t *= rat_pow(rat_sqrt_exact(point[i]), e);
                }
            } else {
                t *= rat_pow(point[i], e);
            }
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_u_one() const {
    if (!ring_.with_u) throw std::domain_error("ring has no u slot");
    PolyRing target = ring_;
    target.with_u = false;
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
        Mono n(m.begin(), m.end() - 1);
        r.insert_term(std::move(n), c);
    }
    return r;
}

MultiPoly MultiPoly::coeff_of_u(int k) const {
    if (!ring_.with_u) throw std::domain_error("ring has no u slot");
    PolyRing target = ring_;
    target.with_u = false;
    int stored = ring_.half ? 2 * k : k;
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
        if (m.back() != stored) continue;
        Mono n(m.begin(), m.end() - 1);
        r.insert_term(std::move(n), c);
    }
    return r;
}

MultiPoly MultiPoly::convert_to(const PolyRing& target) const {
    if (ring_.untyped()) return MultiPoly(target);
    if (target.nx != ring_.nx || (ring_.with_u && !target.with_u))
        throw std::invalid_argument("convert_to: incompatible target ring");
    if ((ring_.laurent && !target.laurent) || (ring_.half && !target.half))
        throw std::invalid_argument("convert_to: narrowing conversion");
    int scale = (target.half && !ring_.half) ? 2 : 1;
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
        Mono n(target.slots(), 0);
        for (size_t i = 0; i < m.size(); ++i) n[i] = m[i] * scale;
        r.insert_term(std::move(n), c);
    }
    return r;
}

MultiPoly MultiPoly::divide_exact(const Int& d) const {
    MultiPoly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, lwlab::div_exact(c, d));
    return r;
}

long MultiPoly::total_degree_x2() const {
    long best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        long d = std::accumulate(m.begin(), m.end(), 0L);
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool leading = true;
    // highest term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Int a = c;
        if (leading) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        leading = false;
        bool any_var = false;
        std::ostringstream vars;
        for (size_t i = 0; i < m.size(); ++i) {
            int e = m[i];
            if (e == 0) continue;
            if (any_var) vars << '*';
            any_var = true;
            bool is_u = ring_.with_u && i + 1 == m.size();
            if (is_u) vars << 'u'; else vars << 'x' << (i + 1);
            int num = e, den = 1;
            if (ring_.half) {
                if (e % 2 == 0) num = e / 2; else den = 2;
            }
            if (!(num == 1 && den == 1)) {
                if (den == 1) vars << '^' << num;
                else vars << "^(" << num << '/' << den << ')';
            }
        }
        if (!any_var) {
            os << a;
        } else {
            if (a != 1) os << a << '*';
            os << vars.str();
        }
    }
    return os.str();
}

uint64_t MultiPoly::canonical_hash() const {
    std::string s = to_string();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace lwlab
