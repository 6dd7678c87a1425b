#ifndef QSIG_MODELS_HPP
#define QSIG_MODELS_HPP

#include "qsig/twisted.hpp"

namespace qsig {

// Builders for the distinguished elements of F(N, R)[[X]]: the expansion
// morphisms and their printed closed forms.

// iota(a) = sum_i X^i u[theta^{(i)} a], u[b](n) = sigma^n(b).
// With `shifted` set the coefficients are Taylor-expanded at (t+W1, y+W2).
template <class R>
TwistedSeries<R> hopf_expand(const RatFn& a, const QSDStructure& st, int xdeg,
                             bool shifted = false, int wdeg = 0) {
    TwistedSeries<R> r(xdeg);
    for (int i = 0; i <= xdeg; ++i)
        r.set_coeff(i, Seq<R>::orbit(st.theta(i, a), st.id(), shifted, wdeg));
    return r;
}

// Taylor expansion sum_n delta^n(a)/n! X^n; the twist is trivial because all
// coefficients are constant sequences.
inline TwistedSeries<RatFn> taylor_expand(const RatFn& a,
                                          const DiffStructure& d, int xdeg) {
    TwistedSeries<RatFn> r(xdeg);
    RatFn dn = a;
    Rat fact = 1;
    for (int i = 0; i <= xdeg; ++i) {
        if (i > 0) {
            dn = d.delta(dn);
            fact *= i;
        }
        r.set_coeff(i, Seq<RatFn>::constant(Scalar(Rat(1) / fact) * dn));
    }
    return r;
}

template <class R>
Seq<R> seq_Q() {
    return Seq<R>::geom(1, 0);
}
template <class R>
Seq<R> seq_Qalpha() {
    return Seq<R>::geom(0, 1);
}
template <class R>
Seq<R> seq_N() {
    return Seq<R>::linear_n();
}
template <class R>
Seq<R> seq_ratfn(const RatFn& f, bool shifted = false, int wdeg = 0) {
    return Seq<R>::constant(SeqTraits<R>::embed(f, wdeg, shifted));
}

template <class R>
TwistedSeries<R> ts_Q(int xdeg) {
    return TwistedSeries<R>::from_seq(seq_Q<R>(), xdeg);
}

// iota(t) = t Q + X (coefficients shifted to (t+W1) Q + X when requested)
template <class R>
TwistedSeries<R> closed_iota_t(int xdeg, bool shifted = false, int wdeg = 0) {
    auto tq = seq_ratfn<R>(RatFn::t(), shifted, wdeg) * seq_Q<R>();
    return TwistedSeries<R>::from_seq(tq, xdeg) + TwistedSeries<R>::x(xdeg);
}

// Y0 = sum_n X^n binom(alpha,n)_q t^{-n} Q^{alpha-n}
template <class R>
TwistedSeries<R> closed_Y0(int xdeg, bool shifted = false, int wdeg = 0) {
    TwistedSeries<R> r(xdeg);
    for (int n = 0; n <= xdeg; ++n) {
        auto coeff = seq_ratfn<R>(RatFn::t().pow(-n), shifted, wdeg) *
                     Seq<R>::geom(-n, 1);
        r.set_coeff(n, coeff.scalar_mul(q_binom_alpha(n)));
    }
    return r;
}

// q-expansion of y = log t. The directly computed coefficient of X^n carries
// q^{-n(n-1)/2} (lam/(q-1)) (-1)^{n+1} / [n]_q; dropping the q-power gives the
// shape usually quoted for it, kept here for comparison.
template <class R>
TwistedSeries<R> closed_iota_y_logt(int xdeg, bool shifted = false,
                                    int wdeg = 0, bool printed_form = false) {
    TwistedSeries<R> r(xdeg);
    Scalar pref = Scalar::lam() / (Scalar::q() - 1);
    auto c0 = seq_ratfn<R>(RatFn::y(), shifted, wdeg) +
              seq_N<R>().scalar_mul(Scalar::lam());
    r.set_coeff(0, c0);
    for (int n = 1; n <= xdeg; ++n) {
        Scalar sign = (n % 2 == 1) ? Scalar(1) : Scalar(-1);
        Scalar coef = pref * sign / q_int(n);
        if (!printed_form) coef *= Scalar::q(-n * (n - 1) / 2);
        auto c = seq_ratfn<R>(RatFn::t().pow(-n), shifted, wdeg) *
                 Seq<R>::geom(-n, 0);
        r.set_coeff(n, c.scalar_mul(coef));
    }
    return r;
}

// differential expansions of section "log" example: iota(t) = t + X and
// iota(log t) = log t + sum_{n>=1} (-1)^{n+1} (X/t)^n / n
inline TwistedSeries<RatFn> closed_taylor_t(int xdeg) {
    return TwistedSeries<RatFn>::from_seq(
               Seq<RatFn>::constant(RatFn::t()), xdeg) +
           TwistedSeries<RatFn>::x(xdeg);
}

inline TwistedSeries<RatFn> closed_taylor_logt(int xdeg) {
    TwistedSeries<RatFn> r(xdeg);
    r.set_coeff(0, Seq<RatFn>::constant(RatFn::y()));
    for (int n = 1; n <= xdeg; ++n) {
        Rat c(1, n);
        if (n % 2 == 0) c = -c;
        r.set_coeff(n, Seq<RatFn>::constant(Scalar(c) * RatFn::t().pow(-n)));
    }
    return r;
}

// y exp(X) for the delta(y) = y example
inline TwistedSeries<RatFn> closed_y_exp_x(int xdeg) {
    TwistedSeries<RatFn> r(xdeg);
    Rat fact = 1;
    for (int n = 0; n <= xdeg; ++n) {
        if (n > 0) fact *= n;
        r.set_coeff(n, Seq<RatFn>::constant(Scalar(Rat(1) / fact) * RatFn::y()));
    }
    return r;
}

}  // namespace qsig

#endif
