#include "qsig/ratfn.hpp"

#include <algorithm>
#include <sstream>

namespace qsig {

int Poly2::degree(int var) const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_)
            r.add_term({e1[0] + e2[0], e1[1] + e2[1]}, c1 * c2);
    return r;
}

Poly2 Poly2::mul_scalar(const Scalar& c) const {
    Poly2 r;
    if (c.is_zero()) return r;
    for (auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

Poly2 Poly2::divexact(const Poly2& o) const {
    if (o.is_zero()) throw error("Poly2::divexact by zero");
    Poly2 rem = *this, quot;
    while (!rem.is_zero()) {
        const auto& lr = rem.leading();
        const auto& lo = o.leading();
        Exp d{lr.first[0] - lo.first[0], lr.first[1] - lo.first[1]};
        if (d[0] < 0 || d[1] < 0) throw error("Poly2::divexact: not divisible");
        Scalar c = lr.second / lo.second;
        quot.add_term(d, c);
        rem -= o * monomial(d, c);
    }
    return quot;
}

Poly2 Poly2::coeff_of(int var, int k) const {
    Poly2 r;
    for (auto& [e, c] : terms_) {
        if (e[var] == k) {
            Exp e2 = e;
            e2[var] = 0;
            r.terms_[e2] = c;
        }
    }
    return r;
}

Poly2 Poly2::derive(int var) const {
    Poly2 r;
    for (auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exp e2 = e;
        e2[var] -= 1;
        r.add_term(e2, Scalar(e[var]) * c);
    }
    return r;
}

namespace {

int top_var2(const Poly2& p) {
    if (p.depends_on(1)) return 1;
    if (p.depends_on(0)) return 0;
    return -1;
}

Poly2 monic(const Poly2& p) {
    if (p.is_zero()) return p;
    Scalar lc = p.leading().second;
    return p.mul_scalar(lc.inverse());
}

Poly2 content_in2(const Poly2& p, int var) {
    Poly2 g;
    for (int k = 0; k <= p.degree(var); ++k) {
        Poly2 c = p.coeff_of(var, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : Poly2::gcd(g, c);
        if (g.is_constant()) break;
    }
    return g.is_zero() ? Poly2(1) : g;
}

Poly2 prem2(Poly2 a, const Poly2& b, int var) {
    int db = b.degree(var);
    Poly2 lb = b.coeff_of(var, db);
    while (!a.is_zero()) {
        int da = a.degree(var);
        if (da < db) break;
        Poly2 la = a.coeff_of(var, da);
        Poly2::Exp e{0, 0};
        e[var] = da - db;
        a = a * lb - b * la * Poly2::monomial(e, Scalar(1));
        if (!a.is_zero() && a.degree(var) == da)
            throw error("Poly2::prem: degree did not drop");
    }
    return a;
}

Poly2 monomial_gcd2(const Poly2::Exp& m, const Poly2& p) {
    Poly2::Exp g = m;
    for (auto& [e, c] : p.terms()) {
        g[0] = std::min(g[0], e[0]);
        g[1] = std::min(g[1], e[1]);
        if (g == Poly2::Exp{0, 0}) break;
    }
    return Poly2::monomial(g, Scalar(1));
}

// remainder in K[x]; coefficients live in the field, so plain long division
Poly2 field_rem(Poly2 a, const Poly2& b, int var) {
    int db = b.degree(var);
    Scalar lb = b.coeff_of(var, db).constant_value();
    while (!a.is_zero()) {
        int da = a.degree(var);
        if (da < db) break;
        Scalar la = a.coeff_of(var, da).constant_value();
        Poly2::Exp e{0, 0};
        e[var] = da - db;
        a -= b * Poly2::monomial(e, la / lb);
    }
    return a;
}

bool univariate_in(const Poly2& p, int var) {
    return !p.depends_on(1 - var);
}

Poly2 euclid_gcd_uni(Poly2 f, Poly2 g, int var) {
    while (!g.is_zero()) {
        Poly2 r = field_rem(f, g, var);
        f = g;
        g = r;
    }
    return monic(f);
}

}  // namespace

Poly2 Poly2::gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly2(1);
    if (a == b) return monic(a);
    if (a.terms().size() == 1) return monomial_gcd2(a.leading().first, b);
    if (b.terms().size() == 1) return monomial_gcd2(b.leading().first, a);

    int var = std::max(top_var2(a), top_var2(b));
    if (univariate_in(a, var) && univariate_in(b, var))
        return euclid_gcd_uni(a, b, var);
    if (!a.depends_on(var)) return gcd(a, content_in2(b, var));
    if (!b.depends_on(var)) return gcd(content_in2(a, var), b);

    Poly2 ca = content_in2(a, var), cb = content_in2(b, var);
    Poly2 f = a.divexact(ca), g = b.divexact(cb);
    Poly2 cont = gcd(ca, cb);

    if (f.degree(var) < g.degree(var)) std::swap(f, g);
    while (true) {
        Poly2 r = prem2(f, g, var);
        if (r.is_zero()) break;
        r = monic(r.divexact(content_in2(r, var)));
        f = g;
        g = r;
        if (g.degree(var) == 0) return monic(cont);
    }
    g = monic(g.divexact(content_in2(g, var)));
    return monic(cont * g);
}

std::string Poly2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        std::string mono;
        if (it->first[0]) {
            mono += "t";
            if (it->first[0] != 1) mono += "^" + std::to_string(it->first[0]);
        }
        if (it->first[1]) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (it->first[1] != 1) mono += "^" + std::to_string(it->first[1]);
        }
        if (mono.empty()) {
            os << "(" << it->second.str() << ")";
        } else if (it->second.is_one()) {
            os << mono;
        } else {
            os << "(" << it->second.str() << ")*" << mono;
        }
    }
    return os.str();
}

// --- RatFn ------------------------------------------------------------------

void RatFn::normalize() {
    if (den_.is_zero()) throw error("RatFn: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly2(1);
        return;
    }
    if (!den_.is_constant()) {
        Poly2 g = Poly2::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    Scalar lc = den_.leading().second;
    if (!lc.is_one()) {
        Scalar inv = lc.inverse();
        num_ = num_.mul_scalar(inv);
        den_ = den_.mul_scalar(inv);
    }
}

RatFn RatFn::operator-() const {
    RatFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
    if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
    if (den_ == o.den_) return RatFn(num_ - o.num_, den_);
    return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const {
    return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw error("RatFn: division by zero");
    return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw error("RatFn: inverse of zero");
    return RatFn(den_, num_);
}

RatFn RatFn::pow(int e) const {
    if (e == 0) return RatFn(1);
    if (e < 0) return inverse().pow(-e);
    RatFn acc(1), b = *this;
    int n = e;
    while (n) {
        if (n & 1) acc *= b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

RatFn RatFn::mul_scalar(const Scalar& c) const {
    if (c.is_zero()) return RatFn();
    RatFn r;
    r.num_ = num_.mul_scalar(c);
    r.den_ = den_;
    return r;
}

RatFn RatFn::derive(int var) const {
    // (n/d)' = (n' d - n d')/d^2
    return RatFn(num_.derive(var) * den_ - num_ * den_.derive(var),
                 den_ * den_);
}

std::string RatFn::str() const {
    if (den_ == Poly2(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qsig
