#include "qsig/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qsig {

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return 1;
    if (e < 0) {
        if (base == 0) throw error("rat_pow: zero base with negative exponent");
        return 1 / rat_pow(base, -e);
    }
    Rat acc = 1, b = base;
    long n = e;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

int MPoly::degree(int var) const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int MPoly::total_degree() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_)
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
}

MPoly MPoly::mul_rat(const Rat& c) const {
    MPoly r;
    if (c == 0) return r;
    for (auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

MPoly MPoly::mul_term(const Exp& e, const Rat& c) const {
    MPoly r;
    if (c == 0) return r;
    for (auto& [e1, v] : terms_)
        r.terms_[{e1[0] + e[0], e1[1] + e[1], e1[2] + e[2]}] = v * c;
    return r;
}

MPoly MPoly::coeff_of(int var, int k) const {
    MPoly r;
    for (auto& [e, c] : terms_) {
        if (e[var] == k) {
            Exp e2 = e;
            e2[var] = 0;
            r.terms_[e2] = c;
        }
    }
    return r;
}

MPoly MPoly::divexact(const MPoly& o) const {
    if (o.is_zero()) throw error("MPoly::divexact by zero");
    MPoly rem = *this, quot;
    while (!rem.is_zero()) {
        const auto& lr = rem.leading();
        const auto& lo = o.leading();
        Exp d{lr.first[0] - lo.first[0], lr.first[1] - lo.first[1],
              lr.first[2] - lo.first[2]};
        if (d[0] < 0 || d[1] < 0 || d[2] < 0)
            throw error("MPoly::divexact: not divisible");
        Rat c = lr.second / lo.second;
        quot.add_term(d, c);
        rem -= o.mul_term(d, c);
    }
    return quot;
}

Rat MPoly::eval(const Rat& q0, const Rat& s0, const Rat& l0) const {
    Rat acc = 0;
    for (auto& [e, c] : terms_)
        acc += c * rat_pow(q0, e[0]) * rat_pow(s0, e[1]) * rat_pow(l0, e[2]);
    return acc;
}

MPoly MPoly::subst_s_shift(int e, int* cleared) const {
    int min_q = 0;
    for (auto& [ex, c] : terms_) min_q = std::min(min_q, ex[0] + ex[1] * e);
    int k = -min_q;
    MPoly r;
    for (auto& [ex, c] : terms_)
        r.add_term({ex[0] + ex[1] * e + k, ex[1], ex[2]}, c);
    if (cleared) *cleared = k;
    return r;
}

namespace {

// univariate view helpers for the gcd routine

std::vector<MPoly> coeffs_in(const MPoly& p, int var) {
    std::vector<MPoly> cs(static_cast<size_t>(p.degree(var)) + 1);
    for (size_t k = 0; k < cs.size(); ++k) cs[k] = p.coeff_of(var, static_cast<int>(k));
    return cs;
}

int top_var(const MPoly& p) {
    for (int v = 2; v >= 0; --v)
        if (p.depends_on(v)) return v;
    return -1;
}

MPoly content_in(const MPoly& p, int var) {
    MPoly g;
    for (auto c : coeffs_in(p, var)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : MPoly::gcd(g, c);
        if (g.is_constant()) break;
    }
    return g.is_zero() ? MPoly(1) : g;
}

// pseudo-remainder of a by b in variable var (b != 0, deg_var(a) >= deg_var(b))
MPoly prem(MPoly a, const MPoly& b, int var) {
    int db = b.degree(var);
    MPoly lb = b.coeff_of(var, db);
    int da = a.degree(var);
    while (!a.is_zero() && (da = a.degree(var)) >= db && !a.is_zero()) {
        MPoly la = a.coeff_of(var, da);
        MPoly shift;
        MPoly::Exp e{0, 0, 0};
        e[var] = da - db;
        a = a * lb - b * la.mul_term(e, 1);
        if (a.is_zero()) break;
        if (a.degree(var) == da)
            throw error("MPoly::prem: degree did not drop");
    }
    return a;
}

// normalize so the leading rational coefficient is positive and the integer
// content is 1 (keeps PRS sizes small; final monic scaling happens in Scalar)
MPoly rational_normalize(const MPoly& p) {
    if (p.is_zero()) return p;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [e, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c.get_den().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    MPoly r = p.mul_rat(scale);
    if (r.leading().second < 0) r = r.mul_rat(-1);
    return r;
}

}  // namespace

namespace {

// gcd when one side is a single term: min exponents of the monomial against
// every term of the other polynomial
MPoly monomial_gcd(const MPoly::Exp& m, const MPoly& p) {
    MPoly::Exp g = m;
    for (auto& [e, c] : p.terms()) {
        g[0] = std::min(g[0], e[0]);
        g[1] = std::min(g[1], e[1]);
        g[2] = std::min(g[2], e[2]);
        if (g == MPoly::Exp{0, 0, 0}) break;
    }
    return MPoly(1).mul_term(g, 1);
}

}  // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return rational_normalize(b);
    if (b.is_zero()) return rational_normalize(a);
    if (a.is_constant() || b.is_constant()) return MPoly(1);
    if (a == b) return rational_normalize(a);
    if (a.terms().size() == 1) return monomial_gcd(a.leading().first, b);
    if (b.terms().size() == 1) return monomial_gcd(b.leading().first, a);

    int var = std::max(top_var(a), top_var(b));
    if (!a.depends_on(var)) return gcd(a, content_in(b, var));
    if (!b.depends_on(var)) return gcd(content_in(a, var), b);

    MPoly ca = content_in(a, var), cb = content_in(b, var);
    MPoly f = a.divexact(ca), g = b.divexact(cb);
    MPoly cont = gcd(ca, cb);

    if (f.degree(var) < g.degree(var)) std::swap(f, g);
    // primitive PRS
    while (true) {
        MPoly r = prem(f, g, var);
        if (r.is_zero()) break;
        r = rational_normalize(r.divexact(content_in(r, var)));
        f = g;
        g = r;
        if (g.degree(var) == 0) return rational_normalize(cont);
    }
    g = rational_normalize(g.divexact(content_in(g, var)));
    return rational_normalize(cont * g);
}

std::string exp_str(const MPoly::Exp& e) {
    static const char* names[3] = {"q", "s", "lam"};
    std::string out;
    for (int v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[v];
        if (e[v] != 1) out += "^" + std::to_string(e[v]);
    }
    return out;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        std::string mono = exp_str(it->first);
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mono.empty()) {
            os << ac;
        } else {
            if (ac != 1) os << ac << "*";
            os << mono;
        }
    }
    return os.str();
}

}  // namespace qsig
