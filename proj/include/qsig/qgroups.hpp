#ifndef QSIG_QGROUPS_HPP
#define QSIG_QGROUPS_HPP

#include "qsig/hq.hpp"
#include "qsig/wseries.hpp"

namespace qsig {

// Upper triangular [[e, f], [0, 1]] with entries in any of our rings.
template <class Ring>
struct UpperMatrix2 {
    Ring e, f;

    static UpperMatrix2 identity() { return {Ring(1), Ring(0)}; }

    UpperMatrix2 operator*(const UpperMatrix2& o) const {
        return {e * o.e, e * o.f + f};
    }
    // [[e^{-1}, -e^{-1} f], [0, 1]]
    UpperMatrix2 tilde_inverse() const {
        Ring ei = e.inverse();
        return {ei, -(ei * f)};
    }
    bool operator==(const UpperMatrix2& o) const {
        return e == o.e && f == o.f;
    }
    bool operator!=(const UpperMatrix2& o) const { return !(*this == o); }

    // membership in H_{qq}: qq * e * f == f * e
    bool in_hq(const Scalar& qq) const {
        return (e * f).mul_scalar(qq) == f * e;
    }
    std::string str() const { return "[[" + e.str() + ", " + f.str() + "], [0, 1]]"; }
};

// mutual commutativity of {e1,f1} and {e2,f2}
template <class Ring>
bool mutually_commutative(const UpperMatrix2<Ring>& a,
                          const UpperMatrix2<Ring>& b) {
    auto comm = [](const Ring& x, const Ring& y) {
        return (x * y - y * x) == Ring(0);
    };
    return comm(a.e, b.e) && comm(a.e, b.f) && comm(a.f, b.e) &&
           comm(a.f, b.f);
}

// W1 image used by every group law: g W1 + (g-1) t + h, computed from the
// affine t-motion t |-> g t + h rather than hard-coded
WSeries motion_w1_arg(const NilElement& g, const NilElement& h, int wdeg);

// checks [e (t+W1) + f, b] = 0
bool qg_constraint_ok(const NilElement& e, const NilElement& f,
                      const WSeries& b);

// ---------------------------------------------------------------------------
// Multiplicative-kernel group of pairs (e, b(W1)): unit (1, 1),
// (e1,b1) * (e2,b2) = (e1 e2, b1(e2 W1 + (e2-1) t) b2(W1)).
struct GIIElement {
    NilElement e;
    WSeries b;

    bool well_formed() const;  // e-1 nilpotent, b-1 nilpotent coefficients
};

GIIElement gII_mul(const GIIElement& x, const GIIElement& y);
GIIElement gII_inverse(const GIIElement& x);
GIIElement gII_unit(int wdeg);

// Additive-kernel group of pairs (e, b(W1)): unit (1, 0),
// (e1,b1) * (e2,b2) = (e1 e2, b1(e2 W1 + (e2-1) t) + b2(W1)).
struct GIIIElement {
    NilElement e;
    WSeries b;

    bool well_formed() const;  // e-1 nilpotent, b nilpotent coefficients
};

GIIIElement gIII_mul(const GIIIElement& x, const GIIIElement& y);
GIIIElement gIII_inverse(const GIIIElement& x);
GIIIElement gIII_unit(int wdeg);

// ---------------------------------------------------------------------------
// Matrix-extended variants: pairs (2x2 matrix, series) with the commutation
// constraint (3): [e(t+W1)+f, b(W1)] = 0.
struct QGIIElement {
    UpperMatrix2<NilElement> m;
    WSeries b;

    bool constraint_ok() const { return qg_constraint_ok(m.e, m.f, b); }
    // completion membership: e-1, f and coefficients of b-1 nilpotent
    bool hat_member() const;
};

struct QGIIIElement {
    UpperMatrix2<NilElement> m;
    WSeries b;

    bool constraint_ok() const { return qg_constraint_ok(m.e, m.f, b); }
    bool hat_member() const;  // e-1, f and coefficients of b nilpotent
};

// products require the two data sets to be mutually commutative
bool qg_mutually_commutative(const UpperMatrix2<NilElement>& a,
                             const WSeries& ba,
                             const UpperMatrix2<NilElement>& bmat,
                             const WSeries& bb);

QGIIElement qgII_star(const QGIIElement& x, const QGIIElement& y);
QGIIElement qgII_inverse(const QGIIElement& x);
QGIIElement qgII_unit(int wdeg);

QGIIIElement qgIII_star(const QGIIIElement& x, const QGIIIElement& y);
QGIIIElement qgIII_inverse(const QGIIIElement& x);
QGIIIElement qgIII_unit(int wdeg);

// the raw composition formulas, without the mutual-commutativity gate;
// an element and its own inverse never commute when f != 0, yet the
// inverse laws hold for the raw formulas
QGIIElement qgII_compose_raw(const QGIIElement& x, const QGIIElement& y);
QGIIIElement qgIII_compose_raw(const QGIIIElement& x, const QGIIIElement& y);

// Hopf-point action of Remark-style matrices on deformation parameter pairs:
// (psi_u, psi_v) . (e, f) = (psi_u e, psi_u f + psi_v)
UpperMatrix2<NilElement> hq_act(const UpperMatrix2<NilElement>& psi,
                                const UpperMatrix2<NilElement>& phi);

}  // namespace qsig

#endif
