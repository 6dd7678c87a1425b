#ifndef QSIG_WSERIES_HPP
#define QSIG_WSERIES_HPP

#include <array>
#include <climits>

#include "qsig/nilalg.hpp"

namespace qsig {

// Truncated power series in the central variables W1, W2 with NilElement
// coefficients: total W-degree <= wdeg. Pure constants carry wdeg = INT_MAX
// and adopt the other operand's truncation on combination.
class WSeries {
  public:
    using WExp = std::array<int, 2>;

    WSeries() : wdeg_(INT_MAX) {}
    WSeries(long c) : wdeg_(INT_MAX) { set_const(NilElement(c)); }
    explicit WSeries(const NilElement& c, int wdeg = INT_MAX) : wdeg_(wdeg) {
        set_const(c);
    }
    explicit WSeries(const RatFn& c, int wdeg = INT_MAX) : wdeg_(wdeg) {
        set_const(NilElement(c));
    }

    static WSeries w(int which, int wdeg);  // which: 0 -> W1, 1 -> W2
    static WSeries monomial(const WExp& e, const NilElement& c, int wdeg);

    // Taylor expansion of f(t + W1, y + W2) to total degree wdeg
    static WSeries taylor_shift(const RatFn& f, int wdeg);

    int wdeg() const { return wdeg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<WExp, NilElement>& terms() const { return terms_; }
    NilElement coeff(int i, int j) const;
    NilElement const_term() const { return coeff(0, 0); }

    bool is_unit() const { return const_term().is_unit(); }
    // every coefficient nilpotent (the W-free one included)
    bool is_nilpotent() const;
    // x - 1 has all coefficients nilpotent
    bool is_one_plus_nilpotent() const {
        return (*this - WSeries(1)).is_nilpotent();
    }

    WSeries operator-() const;
    WSeries operator+(const WSeries& o) const;
    WSeries operator-(const WSeries& o) const;
    WSeries operator*(const WSeries& o) const;
    WSeries& operator+=(const WSeries& o) { return *this = *this + o; }
    WSeries& operator-=(const WSeries& o) { return *this = *this - o; }
    WSeries& operator*=(const WSeries& o) { return *this = *this * o; }

    WSeries mul_scalar(const Scalar& c) const;
    WSeries inverse() const;
    WSeries pow(int e) const;

    bool operator==(const WSeries& o) const { return terms_ == o.terms_; }
    bool operator!=(const WSeries& o) const { return !(*this == o); }

    // var: 0 = d/dt, 1 = d/dy, 2 = d/dW1, 3 = d/dW2
    WSeries derive(int var) const;

    // drop terms above a smaller total W-degree
    WSeries truncate(int wdeg) const;

    // substitute W1 -> arg; arg must have nilpotent W-free part
    WSeries subst_w1(const WSeries& arg) const;

    std::string str() const;

  private:
    void set_const(const NilElement& c) {
        terms_.clear();
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }
    void add_term(const WExp& e, const NilElement& c);

    int wdeg_;
    std::map<WExp, NilElement> terms_;
};

inline WSeries commutator(const WSeries& a, const WSeries& b) {
    return a * b - b * a;
}

inline WSeries operator*(const Scalar& c, const WSeries& x) {
    return x.mul_scalar(c);
}

}  // namespace qsig

#endif
