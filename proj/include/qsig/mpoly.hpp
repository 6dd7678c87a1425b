#ifndef QSIG_MPOLY_HPP
#define QSIG_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qsig {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sample point rejected (denominator vanished at the requested rational point).
struct bad_sample_point : error {
    using error::error;
};

using Rat = mpq_class;

Rat rat_pow(const Rat& base, long e);

// Polynomials in the three generators q, s, lam with rational coefficients.
// s stands in for q^alpha, lam for log q; both are treated as independent
// transcendentals. Terms are kept in graded lex order with q < s < lam.
class MPoly {
  public:
    // exponents of (q, s, lam)
    using Exp = std::array<int, 3>;

    struct ExpLess {
        bool operator()(const Exp& a, const Exp& b) const {
            int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
            if (da != db) return da < db;
            if (a[2] != b[2]) return a[2] < b[2];
            if (a[1] != b[1]) return a[1] < b[1];
            return a[0] < b[0];
        }
    };

    using TermMap = std::map<Exp, Rat, ExpLess>;

    MPoly() = default;
    explicit MPoly(const Rat& c) {
        if (c != 0) terms_[{0, 0, 0}] = c;
    }
    explicit MPoly(long c) : MPoly(Rat(c)) {}

    static MPoly variable(int idx, int e = 1) {
        MPoly p;
        Exp ex{0, 0, 0};
        ex[idx] = e;
        p.terms_[ex] = 1;
        return p;
    }
    static MPoly q(int e = 1) { return variable(0, e); }
    static MPoly s(int e = 1) { return variable(1, e); }
    static MPoly lam(int e = 1) { return variable(2, e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0, 0});
    }
    Rat constant_value() const {
        if (terms_.empty()) return 0;
        auto it = terms_.find({0, 0, 0});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    const TermMap& terms() const { return terms_; }
    int degree(int var) const;
    int total_degree() const;
    bool depends_on(int var) const { return degree(var) > 0; }

    // leading term under the fixed order
    const std::pair<const Exp, Rat>& leading() const {
        if (terms_.empty()) throw error("MPoly::leading on zero polynomial");
        return *terms_.rbegin();
    }

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly mul_rat(const Rat& c) const;
    MPoly mul_term(const Exp& e, const Rat& c) const;

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // exact division; throws when o does not divide *this
    MPoly divexact(const MPoly& o) const;

    // view as univariate in `var`: coefficient of var^k
    MPoly coeff_of(int var, int k) const;

    Rat eval(const Rat& q0, const Rat& s0, const Rat& l0) const;

    // substitute s -> s * q^e (used for the alpha -> alpha+e shift).
    // The true value of the substitution is (returned poly) / q^(*cleared):
    // negative q-exponents are cleared to keep the result polynomial.
    MPoly subst_s_shift(int e, int* cleared) const;

    std::string str() const;

    static MPoly gcd(const MPoly& a, const MPoly& b);

  private:
    void add_term(const Exp& e, const Rat& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

std::string exp_str(const MPoly::Exp& e);

}  // namespace qsig

#endif
