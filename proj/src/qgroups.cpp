#include "qsig/qgroups.hpp"

namespace qsig {

WSeries motion_w1_arg(const NilElement& g, const NilElement& h, int wdeg) {
    // offset of the moved point from the old center:
    // (g (t + W1) + h) - t = g W1 + (g - 1) t + h
    WSeries tpw = WSeries(NilElement(RatFn::t()), wdeg) + WSeries::w(0, wdeg);
    WSeries moved = WSeries(g, wdeg) * tpw + WSeries(h, wdeg);
    return moved - WSeries(NilElement(RatFn::t()), wdeg);
}

bool qg_constraint_ok(const NilElement& e, const NilElement& f,
                      const WSeries& b) {
    int wdeg = b.wdeg();
    WSeries tpw = WSeries(NilElement(RatFn::t()), wdeg) + WSeries::w(0, wdeg);
    WSeries c = WSeries(e, wdeg) * tpw + WSeries(f, wdeg);
    return commutator(c, b).is_zero();
}

bool GIIElement::well_formed() const {
    return (e - NilElement(1)).is_nilpotent() && b.is_one_plus_nilpotent();
}

GIIElement gII_mul(const GIIElement& x, const GIIElement& y) {
    WSeries arg = motion_w1_arg(y.e, NilElement(), x.b.wdeg());
    return {x.e * y.e, x.b.subst_w1(arg) * y.b};
}

GIIElement gII_unit(int wdeg) {
    return {NilElement(1), WSeries(NilElement(1), wdeg)};
}

GIIElement gII_inverse(const GIIElement& x) {
    // solve x * y = unit: y.e = e^{-1}, then b(arg(y.e)) y.b = 1
    NilElement ei = x.e.inverse();
    WSeries arg = motion_w1_arg(ei, NilElement(), x.b.wdeg());
    return {ei, x.b.subst_w1(arg).inverse()};
}

bool GIIIElement::well_formed() const {
    return (e - NilElement(1)).is_nilpotent() && b.is_nilpotent();
}

GIIIElement gIII_mul(const GIIIElement& x, const GIIIElement& y) {
    WSeries arg = motion_w1_arg(y.e, NilElement(), x.b.wdeg());
    return {x.e * y.e, x.b.subst_w1(arg) + y.b};
}

GIIIElement gIII_unit(int wdeg) {
    return {NilElement(1), WSeries(NilElement(), wdeg)};
}

GIIIElement gIII_inverse(const GIIIElement& x) {
    NilElement ei = x.e.inverse();
    WSeries arg = motion_w1_arg(ei, NilElement(), x.b.wdeg());
    return {ei, -x.b.subst_w1(arg)};
}

bool QGIIElement::hat_member() const {
    return (m.e - NilElement(1)).is_nilpotent() && m.f.is_nilpotent() &&
           b.is_one_plus_nilpotent() && constraint_ok();
}

bool QGIIIElement::hat_member() const {
    return (m.e - NilElement(1)).is_nilpotent() && m.f.is_nilpotent() &&
           b.is_nilpotent() && constraint_ok();
}

bool qg_mutually_commutative(const UpperMatrix2<NilElement>& a,
                             const WSeries& ba,
                             const UpperMatrix2<NilElement>& bmat,
                             const WSeries& bb) {
    auto cz = [](const NilElement& x, const NilElement& y) {
        return commutator(x, y).is_zero();
    };
    if (!mutually_commutative(a, bmat)) return false;
    for (auto& [eb, cb] : bb.terms())
        if (!cz(a.e, cb) || !cz(a.f, cb)) return false;
    for (auto& [ea, ca] : ba.terms())
        if (!cz(bmat.e, ca) || !cz(bmat.f, ca)) return false;
    for (auto& [ea, ca] : ba.terms())
        for (auto& [eb, cb] : bb.terms())
            if (!cz(ca, cb)) return false;
    return true;
}

namespace {
void require_commuting(const UpperMatrix2<NilElement>& a, const WSeries& ba,
                       const UpperMatrix2<NilElement>& b, const WSeries& bb) {
    if (!qg_mutually_commutative(a, ba, b, bb))
        throw error("qg product: data sets are not mutually commutative");
}
}  // namespace

QGIIElement qgII_compose_raw(const QGIIElement& x, const QGIIElement& y) {
    WSeries arg = motion_w1_arg(y.m.e, y.m.f, x.b.wdeg());
    return {x.m * y.m, x.b.subst_w1(arg) * y.b};
}

QGIIElement qgII_star(const QGIIElement& x, const QGIIElement& y) {
    require_commuting(x.m, x.b, y.m, y.b);
    return qgII_compose_raw(x, y);
}

QGIIElement qgII_unit(int wdeg) {
    return {UpperMatrix2<NilElement>::identity(), WSeries(NilElement(1), wdeg)};
}

QGIIElement qgII_inverse(const QGIIElement& x) {
    UpperMatrix2<NilElement> mi = x.m.tilde_inverse();
    WSeries arg = motion_w1_arg(mi.e, mi.f, x.b.wdeg());
    return {mi, x.b.subst_w1(arg).inverse()};
}

QGIIIElement qgIII_compose_raw(const QGIIIElement& x, const QGIIIElement& y) {
    WSeries arg = motion_w1_arg(y.m.e, y.m.f, x.b.wdeg());
    return {x.m * y.m, x.b.subst_w1(arg) + y.b};
}

QGIIIElement qgIII_star(const QGIIIElement& x, const QGIIIElement& y) {
    require_commuting(x.m, x.b, y.m, y.b);
    return qgIII_compose_raw(x, y);
}

QGIIIElement qgIII_unit(int wdeg) {
    return {UpperMatrix2<NilElement>::identity(), WSeries(NilElement(), wdeg)};
}

QGIIIElement qgIII_inverse(const QGIIIElement& x) {
    UpperMatrix2<NilElement> mi = x.m.tilde_inverse();
    WSeries arg = motion_w1_arg(mi.e, mi.f, x.b.wdeg());
    return {mi, -x.b.subst_w1(arg)};
}

UpperMatrix2<NilElement> hq_act(const UpperMatrix2<NilElement>& psi,
                                const UpperMatrix2<NilElement>& phi) {
    if (!mutually_commutative(psi, phi))
        throw error("hq_act: parameter sets are not mutually commutative");
    return psi * phi;
}

}  // namespace qsig
