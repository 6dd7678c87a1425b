#ifndef QSIG_SCALAR_HPP
#define QSIG_SCALAR_HPP

#include <optional>
#include <string>

#include "qsig/mpoly.hpp"

namespace qsig {

// Element of the fraction field Q(q, s, lam). Always kept reduced, with the
// denominator normalized so its leading coefficient is 1, so that equality
// of values is structural equality of (num, den).
class Scalar {
  public:
    Scalar() : num_(), den_(MPoly(1)) {}
    Scalar(long n) : num_(MPoly(n)), den_(MPoly(1)) { collapse(); }
    explicit Scalar(const Rat& r) : num_(MPoly(r)), den_(MPoly(1)) { collapse(); }
    Scalar(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) {
        normalize();
    }
    explicit Scalar(MPoly n) : num_(std::move(n)), den_(MPoly(1)) { collapse(); }

    static Scalar q(int e = 1);
    static Scalar s(int e = 1);
    static Scalar lam(int e = 1);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(int e) const;

    bool operator==(const Scalar& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // exact evaluation at a rational point; throws bad_sample_point when the
    // denominator vanishes there
    Rat eval(const Rat& q0, const Rat& s0, const Rat& l0) const;

    // s -> s * q^e, realizing alpha -> alpha + e on q^alpha
    Scalar subst_s_shift(int e) const;

    std::string str() const;

  private:
    void normalize();
    void collapse();  // numeric-mode reduction

    MPoly num_, den_;
};

inline Scalar operator*(long c, const Scalar& x) { return Scalar(c) * x; }

// While a guard is alive (per thread), every Scalar constructed collapses to
// its exact rational value at the given point: the fast smoke layer used by
// the numeric verification mode. Symbolic mode is the default and is
// authoritative.
class NumericPointGuard {
  public:
    NumericPointGuard(const Rat& q0, const Rat& s0, const Rat& l0);
    ~NumericPointGuard();
    NumericPointGuard(const NumericPointGuard&) = delete;
    NumericPointGuard& operator=(const NumericPointGuard&) = delete;

    static const std::array<Rat, 3>* active();
};

// --- q-combinatorics -------------------------------------------------------

// [n]_q = 1 + q + ... + q^{n-1}
Scalar q_int(int n);
// [n]_q!
Scalar q_factorial(int n);
// Gaussian binomial; zero when m < n
Scalar q_binom(int m, int n);
// binom(alpha, n)_q with q^alpha encoded as s
Scalar q_binom_alpha(int n);
// [alpha + e]_q = (s q^e - 1)/(q - 1)
Scalar q_int_alpha(int e);

// q^l binom(alpha,l) + binom(alpha,l-1) == binom(alpha,l) + q^{alpha-l+1} binom(alpha,l-1)
bool qbinom_alpha_shift_identity(int l);

}  // namespace qsig

#endif
