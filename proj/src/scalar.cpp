#include "qsig/scalar.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qsig {

namespace {
thread_local const std::array<Rat, 3>* g_numeric_point = nullptr;
}

NumericPointGuard::NumericPointGuard(const Rat& q0, const Rat& s0,
                                     const Rat& l0) {
    if (g_numeric_point) throw error("nested NumericPointGuard");
    g_numeric_point = new std::array<Rat, 3>{q0, s0, l0};
}

NumericPointGuard::~NumericPointGuard() {
    delete g_numeric_point;
    g_numeric_point = nullptr;
}

const std::array<Rat, 3>* NumericPointGuard::active() {
    return g_numeric_point;
}

Scalar Scalar::q(int e) {
    if (e >= 0) return Scalar(MPoly::q(e));
    return Scalar(MPoly(1), MPoly::q(-e));
}
Scalar Scalar::s(int e) {
    if (e >= 0) return Scalar(MPoly::s(e));
    return Scalar(MPoly(1), MPoly::s(-e));
}
Scalar Scalar::lam(int e) {
    if (e >= 0) return Scalar(MPoly::lam(e));
    return Scalar(MPoly(1), MPoly::lam(-e));
}

void Scalar::collapse() {
    if (const auto* pt = NumericPointGuard::active()) {
        Rat dv = den_.eval((*pt)[0], (*pt)[1], (*pt)[2]);
        if (dv == 0)
            throw bad_sample_point("denominator vanishes at sample point");
        Rat nv = num_.eval((*pt)[0], (*pt)[1], (*pt)[2]);
        num_ = MPoly(nv / dv);
        den_ = MPoly(1);
    }
}

void Scalar::normalize() {
    if (den_.is_zero()) throw error("Scalar: zero denominator");
    if (NumericPointGuard::active()) {
        collapse();
        return;
    }
    if (num_.is_zero()) {
        den_ = MPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = MPoly::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    Rat lc = den_.leading().second;
    if (lc != 1) {
        Rat inv = 1 / lc;
        num_ = num_.mul_rat(inv);
        den_ = den_.mul_rat(inv);
    }
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (den_ == o.den_) return Scalar(num_ - o.num_, den_);
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw error("Scalar: division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("Scalar: inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
    if (e == 0) return Scalar(1);
    if (e < 0) return inverse().pow(-e);
    Scalar acc(1), b = *this;
    int n = e;
    while (n) {
        if (n & 1) acc *= b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

Rat Scalar::eval(const Rat& q0, const Rat& s0, const Rat& l0) const {
    Rat dv = den_.eval(q0, s0, l0);
    if (dv == 0) throw bad_sample_point("denominator vanishes at sample point");
    return num_.eval(q0, s0, l0) / dv;
}

Scalar Scalar::subst_s_shift(int e) const {
    int cn = 0, cd = 0;
    MPoly n2 = num_.subst_s_shift(e, &cn);
    MPoly d2 = den_.subst_s_shift(e, &cd);
    // true value: (n2 / q^cn) / (d2 / q^cd) = n2 q^cd / (d2 q^cn)
    if (cd >= cn)
        return Scalar(n2 * MPoly::q(cd - cn), d2);
    return Scalar(n2, d2 * MPoly::q(cn - cd));
}

std::string Scalar::str() const {
    if (den_ == MPoly(1)) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

// --- q-combinatorics -------------------------------------------------------

Scalar q_int(int n) {
    if (n < 0) throw error("q_int: negative argument");
    MPoly p;
    for (int i = 0; i < n; ++i) p += MPoly::q(i);
    return Scalar(p);
}

namespace {
std::mutex g_memo_mutex;
std::map<int, Scalar> g_fact_memo;
std::map<std::pair<int, int>, Scalar> g_binom_memo;
bool memo_enabled() { return NumericPointGuard::active() == nullptr; }
}  // namespace

Scalar q_factorial(int n) {
    if (n < 0) throw error("q_factorial: negative argument");
    if (memo_enabled()) {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_fact_memo.find(n);
        if (it != g_fact_memo.end()) return it->second;
    }
    Scalar r(1);
    for (int i = 1; i <= n; ++i) r *= q_int(i);
    if (memo_enabled()) {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        g_fact_memo.emplace(n, r);
    }
    return r;
}

Scalar q_binom(int m, int n) {
    if (m < 0 || n < 0) throw error("q_binom: negative argument");
    if (m < n) return Scalar(0);
    if (memo_enabled()) {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_binom_memo.find({m, n});
        if (it != g_binom_memo.end()) return it->second;
    }
    Scalar r = q_factorial(m) / (q_factorial(m - n) * q_factorial(n));
    if (memo_enabled()) {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        g_binom_memo.emplace(std::make_pair(m, n), r);
    }
    return r;
}

Scalar q_int_alpha(int e) {
    // [alpha + e]_q = (q^{alpha+e} - 1)/(q - 1), with q^{alpha+e} = s q^e
    return (Scalar::s() * Scalar::q(e) - Scalar(1)) /
           (Scalar::q() - Scalar(1));
}

Scalar q_binom_alpha(int n) {
    if (n < 0) throw error("q_binom_alpha: negative argument");
    Scalar r(1);
    for (int j = 0; j < n; ++j) r *= q_int_alpha(-j);
    return r / q_factorial(n);
}

bool qbinom_alpha_shift_identity(int l) {
    if (l < 1) throw error("qbinom_alpha_shift_identity: l must be >= 1");
    Scalar lhs = Scalar::q(l) * q_binom_alpha(l) + q_binom_alpha(l - 1);
    Scalar rhs = q_binom_alpha(l) +
                 Scalar::s() * Scalar::q(1 - l) * q_binom_alpha(l - 1);
    return lhs == rhs;
}

}  // namespace qsig
