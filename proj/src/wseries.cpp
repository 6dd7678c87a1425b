#include "qsig/wseries.hpp"

#include <sstream>

namespace qsig {

WSeries WSeries::w(int which, int wdeg) {
    return monomial(which == 0 ? WExp{1, 0} : WExp{0, 1}, NilElement(1), wdeg);
}

WSeries WSeries::monomial(const WExp& e, const NilElement& c, int wdeg) {
    WSeries r;
    r.wdeg_ = wdeg;
    if (!c.is_zero() && e[0] + e[1] <= wdeg) r.terms_[e] = c;
    return r;
}

WSeries WSeries::taylor_shift(const RatFn& f, int wdeg) {
    WSeries r;
    r.wdeg_ = wdeg;
    // (d_t^i d_y^j f)/(i! j!) W1^i W2^j
    RatFn di = f;
    Rat ifact = 1;
    for (int i = 0; i <= wdeg; ++i) {
        if (i > 0) {
            di = di.derive(0);
            ifact *= i;
        }
        RatFn dij = di;
        Rat jfact = 1;
        for (int j = 0; i + j <= wdeg; ++j) {
            if (j > 0) {
                dij = dij.derive(1);
                jfact *= j;
            }
            RatFn c = Scalar(Rat(1) / (ifact * jfact)) * dij;
            if (!c.is_zero()) r.terms_[{i, j}] = NilElement(c);
        }
    }
    return r;
}

NilElement WSeries::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? NilElement() : it->second;
}

bool WSeries::is_nilpotent() const {
    for (auto& [e, c] : terms_)
        if (!c.is_nilpotent()) return false;
    return true;
}

void WSeries::add_term(const WExp& e, const NilElement& c) {
    if (e[0] + e[1] > wdeg_) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WSeries WSeries::operator-() const {
    WSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

WSeries WSeries::operator+(const WSeries& o) const {
    WSeries r = *this;
    r.wdeg_ = std::min(wdeg_, o.wdeg_);
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    // re-truncate in case our own terms exceed the merged bound
    if (r.wdeg_ < wdeg_) {
        for (auto it = r.terms_.begin(); it != r.terms_.end();)
            it = (it->first[0] + it->first[1] > r.wdeg_) ? r.terms_.erase(it)
                                                         : std::next(it);
    }
    return r;
}

WSeries WSeries::operator-(const WSeries& o) const { return *this + (-o); }

WSeries WSeries::operator*(const WSeries& o) const {
    WSeries r;
    r.wdeg_ = std::min(wdeg_, o.wdeg_);
    for (auto& [e1, c1] : terms_) {
        for (auto& [e2, c2] : o.terms_) {
            WExp e{e1[0] + e2[0], e1[1] + e2[1]};
            if (e[0] + e[1] > r.wdeg_) continue;
            NilElement c = c1 * c2;
            if (!c.is_zero()) r.add_term(e, c);
        }
    }
    return r;
}

WSeries WSeries::mul_scalar(const Scalar& c) const {
    WSeries r;
    r.wdeg_ = wdeg_;
    if (c.is_zero()) return r;
    for (auto& [e, v] : terms_) r.terms_[e] = v.mul_scalar(c);
    return r;
}

WSeries WSeries::inverse() const {
    NilElement c0 = const_term();
    if (!c0.is_unit()) throw error("WSeries: not a unit");
    // x = c0 (1 + m), m = c0^{-1} (x - c0) has no invertible part;
    // its W-free coefficient is nilpotent, so the Neumann series stops
    NilElement c0inv = c0.inverse();
    WSeries m = (WSeries(c0inv, wdeg_) * (*this - WSeries(c0, wdeg_)));
    WSeries acc(NilElement(1), wdeg_), p(NilElement(1), wdeg_), t = -m;
    const int cap = 200;
    int k = 0;
    for (; k < cap; ++k) {
        p = p * t;
        if (p.is_zero()) break;
        acc += p;
    }
    if (k == cap) throw error("WSeries: Neumann series did not terminate");
    WSeries r = acc * WSeries(c0inv, wdeg_);
    // two-sided check at truncation
    if (r * (*this) != WSeries(NilElement(1), wdeg_) ||
        (*this) * r != WSeries(NilElement(1), wdeg_))
        throw error("WSeries: inverse verification failed");
    return r;
}

WSeries WSeries::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    WSeries acc(NilElement(1), wdeg_), b = *this;
    int n = e;
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

WSeries WSeries::derive(int var) const {
    WSeries r;
    r.wdeg_ = wdeg_;
    for (auto& [e, c] : terms_) {
        if (var <= 1) {
            NilElement d = c.derive(var);
            if (!d.is_zero()) r.add_term(e, d);
        } else {
            int wi = var - 2;
            if (e[wi] == 0) continue;
            WExp e2 = e;
            e2[wi] -= 1;
            r.add_term(e2, c.mul_scalar(Scalar(e[wi])));
        }
    }
    return r;
}

WSeries WSeries::truncate(int wdeg) const {
    WSeries r;
    r.wdeg_ = wdeg;
    for (auto& [e, c] : terms_)
        if (e[0] + e[1] <= wdeg) r.terms_[e] = c;
    return r;
}

WSeries WSeries::subst_w1(const WSeries& arg) const {
    if (!arg.coeff(0, 0).is_nilpotent())
        throw error("WSeries::subst_w1: argument has non-nilpotent constant term");
    int wd = std::min(wdeg_, arg.wdeg_);
    // powers of arg up to the W1-degree present
    int dmax = 0;
    for (auto& [e, c] : terms_) dmax = std::max(dmax, e[0]);
    std::vector<WSeries> argpow{WSeries(NilElement(1), wd)};
    for (int k = 1; k <= dmax; ++k) argpow.push_back(argpow.back() * arg);
    WSeries r;
    r.wdeg_ = wd;
    for (auto& [e, c] : terms_) {
        WSeries term = WSeries::monomial({0, e[1]}, c, wd) * argpow[e[0]];
        r += term;
    }
    return r;
}

std::string WSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e[0]) os << "*W1" << (e[0] > 1 ? "^" + std::to_string(e[0]) : "");
        if (e[1]) os << "*W2" << (e[1] > 1 ? "^" + std::to_string(e[1]) : "");
    }
    return os.str();
}

}  // namespace qsig
