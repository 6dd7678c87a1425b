#ifndef QSIG_RATFN_HPP
#define QSIG_RATFN_HPP

#include <array>
#include <map>

#include "qsig/scalar.hpp"

namespace qsig {

// Polynomials in t, y over the scalar field K = Q(q,s,lam).
class Poly2 {
  public:
    using Exp = std::array<int, 2>;  // exponents of (t, y)

    struct ExpLess {
        bool operator()(const Exp& a, const Exp& b) const {
            int da = a[0] + a[1], db = b[0] + b[1];
            if (da != db) return da < db;
            if (a[1] != b[1]) return a[1] < b[1];
            return a[0] < b[0];
        }
    };
    using TermMap = std::map<Exp, Scalar, ExpLess>;

    Poly2() = default;
    explicit Poly2(const Scalar& c) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }
    explicit Poly2(long c) : Poly2(Scalar(c)) {}

    static Poly2 t(int e = 1) { return monomial({e, 0}, Scalar(1)); }
    static Poly2 y(int e = 1) { return monomial({0, e}, Scalar(1)); }
    static Poly2 monomial(const Exp& e, const Scalar& c) {
        Poly2 p;
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
    }
    Scalar constant_value() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    const TermMap& terms() const { return terms_; }
    int degree(int var) const;
    bool depends_on(int var) const { return degree(var) > 0; }

    const std::pair<const Exp, Scalar>& leading() const {
        if (terms_.empty()) throw error("Poly2::leading on zero polynomial");
        return *terms_.rbegin();
    }

    Poly2 operator-() const;
    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2& operator+=(const Poly2& o) { return *this = *this + o; }
    Poly2& operator-=(const Poly2& o) { return *this = *this - o; }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

    Poly2 mul_scalar(const Scalar& c) const;
    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    Poly2 divexact(const Poly2& o) const;
    Poly2 coeff_of(int var, int k) const;
    Poly2 derive(int var) const;

    // ring morphism determined by images of t and y in an arbitrary
    // commutative ring; Ring needs +, *, scalar embedding
    template <class Ring, class EmbedScalar>
    Ring subst(const Ring& tv, const Ring& yv, EmbedScalar embed) const {
        Ring acc = embed(Scalar(0));
        for (auto& [e, c] : terms_) {
            Ring term = embed(c);
            for (int i = 0; i < e[0]; ++i) term = term * tv;
            for (int i = 0; i < e[1]; ++i) term = term * yv;
            acc = acc + term;
        }
        return acc;
    }

    std::string str() const;

    static Poly2 gcd(const Poly2& a, const Poly2& b);

  private:
    void add_term(const Exp& e, const Scalar& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    TermMap terms_;
};

// Element of K(t, y), reduced, with monic denominator.
class RatFn {
  public:
    RatFn() : num_(), den_(Poly2(1)) {}
    RatFn(long c) : num_(Poly2(c)), den_(Poly2(1)) {}
    explicit RatFn(const Scalar& c) : num_(Poly2(c)), den_(Poly2(1)) {}
    explicit RatFn(Poly2 n) : num_(std::move(n)), den_(Poly2(1)) {}
    RatFn(Poly2 n, Poly2 d) : num_(std::move(n)), den_(std::move(d)) {
        normalize();
    }

    static RatFn t() { return RatFn(Poly2::t()); }
    static RatFn y() { return RatFn(Poly2::y()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Scalar constant_value() const {
        if (!is_constant()) throw error("RatFn: not a constant");
        return num_.constant_value() / den_.constant_value();
    }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

    RatFn inverse() const;
    RatFn pow(int e) const;
    RatFn mul_scalar(const Scalar& c) const;

    bool operator==(const RatFn& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    RatFn derive(int var) const;  // 0 = d/dt, 1 = d/dy

    template <class Ring, class EmbedScalar>
    Ring subst(const Ring& tv, const Ring& yv, EmbedScalar embed) const {
        Ring n = num_.subst(tv, yv, embed);
        Ring d = den_.subst(tv, yv, embed);
        return n * d.inverse();
    }

    std::string str() const;

  private:
    void normalize();
    Poly2 num_, den_;
};

inline RatFn operator*(const Scalar& c, const RatFn& f) {
    return f.mul_scalar(c);
}

}  // namespace qsig

#endif
