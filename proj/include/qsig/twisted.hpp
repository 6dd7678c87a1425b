#ifndef QSIG_TWISTED_HPP
#define QSIG_TWISTED_HPP

#include "qsig/seq.hpp"

namespace qsig {

// Truncated twisted power series sum_{i<=D} X^i a_i with a_i in F(N,R) and
// a X = X Sigma(a). Products are normal-ordered with X-powers on the left.
// `trusted` tracks how many leading X-degrees still carry full information
// (hat_theta discards the top l degrees).
template <class R>
class TwistedSeries {
  public:
    explicit TwistedSeries(int xdeg)
        : c_(xdeg + 1, Seq<R>::zero()), trusted_(xdeg) {}

    static TwistedSeries zero(int xdeg) { return TwistedSeries(xdeg); }
    static TwistedSeries one(int xdeg) {
        TwistedSeries r(xdeg);
        r.c_[0] = Seq<R>::one();
        return r;
    }
    static TwistedSeries x(int xdeg) {
        TwistedSeries r(xdeg);
        if (xdeg < 1) throw error("TwistedSeries: xdeg too small for X");
        r.c_[1] = Seq<R>::one();
        return r;
    }
    static TwistedSeries from_seq(const Seq<R>& s, int xdeg) {
        TwistedSeries r(xdeg);
        r.c_[0] = s;
        return r;
    }

    int xdeg() const { return (int)c_.size() - 1; }
    int trusted() const { return trusted_; }
    TwistedSeries with_trusted(int t) const {
        TwistedSeries r = *this;
        r.trusted_ = t;
        return r;
    }
    const Seq<R>& coeff(int i) const { return c_.at(i); }
    void set_coeff(int i, const Seq<R>& s) { c_.at(i) = s; }

    TwistedSeries operator-() const {
        TwistedSeries r = *this;
        for (auto& s : r.c_) s = -s;
        return r;
    }
    TwistedSeries operator+(const TwistedSeries& o) const {
        check_same(o);
        TwistedSeries r = *this;
        r.trusted_ = std::min(trusted_, o.trusted_);
        for (int i = 0; i <= xdeg(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    TwistedSeries operator-(const TwistedSeries& o) const {
        return *this + (-o);
    }
    // (X^i a)(X^j b) = X^{i+j} Sigma^j(a) b
    TwistedSeries operator*(const TwistedSeries& o) const {
        check_same(o);
        TwistedSeries r(xdeg());
        r.trusted_ = std::min(trusted_, o.trusted_);
        for (int i = 0; i <= xdeg(); ++i) {
            if (is_zero_seq(i)) continue;
            for (int j = 0; i + j <= xdeg(); ++j) {
                if (o.is_zero_seq(j)) continue;
                r.c_[i + j] = r.c_[i + j] + c_[i].shift(j) * o.c_[j];
            }
        }
        return r;
    }
    TwistedSeries& operator+=(const TwistedSeries& o) { return *this = *this + o; }
    TwistedSeries& operator-=(const TwistedSeries& o) { return *this = *this - o; }
    TwistedSeries& operator*=(const TwistedSeries& o) { return *this = *this * o; }

    TwistedSeries scalar_mul(const Scalar& k) const {
        TwistedSeries r = *this;
        for (auto& s : r.c_) s = s.scalar_mul(k);
        return r;
    }
    TwistedSeries seq_mul_left(const Seq<R>& s) const {
        // s * (X^j b) = X^j Sigma^j(s) b
        TwistedSeries r(xdeg());
        r.trusted_ = trusted_;
        for (int j = 0; j <= xdeg(); ++j) r.c_[j] = s.shift(j) * c_[j];
        return r;
    }
    TwistedSeries seq_mul_right(const Seq<R>& s) const {
        TwistedSeries r(xdeg());
        r.trusted_ = trusted_;
        for (int j = 0; j <= xdeg(); ++j) r.c_[j] = c_[j] * s;
        return r;
    }

    TwistedSeries pow(int e) const {
        if (e < 0) return invert().pow(-e);
        TwistedSeries acc = one(xdeg()), b = *this;
        int n = e;
        while (n) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        acc.trusted_ = e == 0 ? xdeg() : trusted_;
        return acc;
    }

    // hatSigma(sum X^i a_i) = sum X^i q^i Sigma(a_i)
    TwistedSeries hat_sigma() const {
        TwistedSeries r = *this;
        for (int i = 0; i <= xdeg(); ++i)
            r.c_[i] = c_[i].shift().scalar_mul(Scalar::q(i));
        return r;
    }
    // hatTheta^{(l)}(sum X^i a_i) = sum X^i binom(i+l,l)_q a_{i+l};
    // the top l degrees of information are lost
    TwistedSeries hat_theta(int l) const {
        if (l < 0) throw error("hat_theta: negative index");
        if (l == 0) return *this;
        TwistedSeries r(xdeg());
        for (int i = 0; i + l <= xdeg(); ++i)
            r.c_[i] = c_[i + l].scalar_mul(q_binom(i + l, l));
        r.trusted_ = std::min(trusted_, xdeg()) - l;
        return r;
    }
    // d/dX for the untwisted Taylor case
    TwistedSeries ddx() const {
        TwistedSeries r(xdeg());
        for (int i = 0; i + 1 <= xdeg(); ++i)
            r.c_[i] = c_[i + 1].scalar_mul(Scalar(i + 1));
        r.trusted_ = std::min(trusted_, xdeg()) - 1;
        return r;
    }

    TwistedSeries coeff_derive(Var v) const {
        TwistedSeries r = *this;
        for (auto& s : r.c_) s = s.derive(v);
        return r;
    }

    // Right inverse by degree recursion, then a two-sided check; requires the
    // degree-0 coefficient to be invertible pointwise up to `check_h`.
    TwistedSeries invert(int check_h = 8) const {
        TwistedSeries b(xdeg());
        b.trusted_ = trusted_;
        Seq<R> a0inv = c_[0].inverse();
        b.c_[0] = a0inv;
        for (int k = 1; k <= xdeg(); ++k) {
            // sum_{j<k} Sigma^j(a_{k-j}) b_j + Sigma^k(a_0) b_k = 0
            Seq<R> acc = Seq<R>::zero();
            for (int j = 0; j < k; ++j)
                acc = acc + c_[k - j].shift(j) * b.c_[j];
            b.c_[k] = -(c_[0].shift(k).inverse() * acc);
        }
        TwistedSeries lr = b * (*this);
        TwistedSeries id = one(xdeg());
        for (int i = 0; i <= xdeg(); ++i)
            if (!seq_eq_up_to(lr.c_[i], id.c_[i], check_h))
                throw error("TwistedSeries: one-sided inverse only");
        return b;
    }

    std::string str(int max_terms = 4) const {
        std::string out;
        int shown = 0;
        for (int i = 0; i <= xdeg() && shown < max_terms; ++i) {
            if (!out.empty()) out += " + ";
            out += "X^" + std::to_string(i) + "*[" + c_[i].str() + "]";
            ++shown;
        }
        return out;
    }

  private:
    void check_same(const TwistedSeries& o) const {
        if (o.xdeg() != xdeg())
            throw error("TwistedSeries: mismatched truncation");
    }
    bool is_zero_seq(int) const { return false; }  // cheap structural skip slot

    std::vector<Seq<R>> c_;
    int trusted_;
};

// horizon equality on the first min(trusted)+1 coefficients, or up to
// `max_xdeg` when given
template <class R>
bool ts_eq_up_to(const TwistedSeries<R>& a, const TwistedSeries<R>& b, int h,
                 int max_xdeg = -1, std::string* witness = nullptr) {
    int top = std::min(a.trusted(), b.trusted());
    if (max_xdeg >= 0) top = std::min(top, max_xdeg);
    if (top < 0) throw error("ts_eq_up_to: nothing trusted to compare");
    for (int i = 0; i <= top; ++i) {
        int wn = -1;
        if (!seq_eq_up_to(a.coeff(i), b.coeff(i), h, &wn)) {
            if (witness)
                *witness = "X^" + std::to_string(i) + " at n=" +
                           std::to_string(wn) + ": " +
                           SeqTraits<R>::str(a.coeff(i).eval(wn)) + " vs " +
                           SeqTraits<R>::str(b.coeff(i).eval(wn));
            return false;
        }
    }
    return true;
}

}  // namespace qsig

#endif
