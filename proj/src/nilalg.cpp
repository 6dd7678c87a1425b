#include "qsig/nilalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qsig {

NilAlgebraPtr NilAlgebra::custom(int ngen, int nildeg,
                                 std::map<std::pair<int, int>, Scalar> rules) {
    if (ngen < 1 || nildeg < 2) throw error("NilAlgebra: bad parameters");
    auto a = std::shared_ptr<NilAlgebra>(new NilAlgebra(ngen, nildeg));
    a->c_.assign(ngen, std::vector<Scalar>(ngen, Scalar(1)));
    for (auto& [ij, c] : rules) {
        auto [i, j] = ij;
        if (i < 0 || j <= i || j >= ngen) throw error("NilAlgebra: bad rule");
        if (c.is_zero()) throw error("NilAlgebra: zero commutation scalar");
        a->c_[i][j] = c;
    }
    return a;
}

NilAlgebraPtr NilAlgebra::commutative(int ngen, int nildeg) {
    return custom(ngen, nildeg, {});
}

NilAlgebraPtr NilAlgebra::qplane(int nildeg) {
    return custom(2, nildeg, {{{0, 1}, Scalar::q()}});
}

NilAlgebraPtr NilAlgebra::qplane_pairs(int npairs, int nildeg) {
    std::map<std::pair<int, int>, Scalar> rules;
    for (int p = 0; p < npairs; ++p)
        rules[{2 * p, 2 * p + 1}] = Scalar::q();
    return custom(2 * npairs, nildeg, rules);
}

NilAlgebraPtr NilAlgebra::qplane_pairs_with_center(int npairs, int ncentral,
                                                   int nildeg) {
    std::map<std::pair<int, int>, Scalar> rules;
    for (int p = 0; p < npairs; ++p)
        rules[{ncentral + 2 * p, ncentral + 2 * p + 1}] = Scalar::q();
    return custom(ncentral + 2 * npairs, nildeg, rules);
}

std::vector<std::vector<int>> NilAlgebra::nilpotent_basis() const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(ngen_, 0);
    std::function<void(int, int)> rec = [&](int idx, int deg) {
        if (idx == ngen_) {
            if (deg >= 1) out.push_back(cur);
            return;
        }
        for (int e = 0; deg + e < nildeg_; ++e) {
            cur[idx] = e;
            rec(idx + 1, deg + e);
        }
        cur[idx] = 0;
    };
    rec(0, 0);
    return out;
}

bool NilAlgebra::same(const NilAlgebraPtr& o) const {
    if (!o) return false;
    if (o.get() == this) return true;
    return ngen_ == o->ngen_ && nildeg_ == o->nildeg_ && c_ == o->c_;
}

// --- NilElement --------------------------------------------------------------

NilElement NilElement::gen(const NilAlgebraPtr& alg, int i, int e) {
    Mono m(alg->ngen(), 0);
    m[i] = e;
    return monomial(alg, m, RatFn(1));
}

NilElement NilElement::monomial(const NilAlgebraPtr& alg, const Mono& m,
                                const RatFn& c) {
    if (!alg) throw error("NilElement::monomial: null algebra");
    NilElement x;
    x.alg_ = alg;
    int deg = 0;
    for (int e : m) deg += e;
    if ((int)m.size() != alg->ngen()) throw error("NilElement: bad monomial");
    if (deg < alg->nildeg() && !c.is_zero())
        x.terms_[deg == 0 ? Mono{} : m] = c;
    return x;
}

RatFn NilElement::unital_part() const {
    auto it = terms_.find({});
    return it == terms_.end() ? RatFn() : it->second;
}

NilElement NilElement::nil_part() const {
    NilElement x = *this;
    x.terms_.erase(Mono{});
    return x;
}

void NilElement::add_term(const Mono& m, const RatFn& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {
NilAlgebraPtr merge_alg(const NilAlgebraPtr& a, const NilAlgebraPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (!a->same(b)) throw error("NilElement: mixed algebras");
    return a;
}
}  // namespace

NilElement NilElement::operator-() const {
    NilElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

NilElement NilElement::operator+(const NilElement& o) const {
    NilElement r = *this;
    r.alg_ = merge_alg(alg_, o.alg_);
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

NilElement NilElement::operator-(const NilElement& o) const {
    NilElement r = *this;
    r.alg_ = merge_alg(alg_, o.alg_);
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

NilElement NilElement::operator*(const NilElement& o) const {
    NilElement r;
    r.alg_ = merge_alg(alg_, o.alg_);
    int nd = r.alg_ ? r.alg_->nildeg() : 2;
    for (auto& [m1, c1] : terms_) {
        for (auto& [m2, c2] : o.terms_) {
            if (m1.empty() && m2.empty()) {
                r.add_term({}, c1 * c2);
                continue;
            }
            int ng = r.alg_->ngen();
            Mono m(ng, 0);
            int deg = 0;
            for (int i = 0; i < ng; ++i) {
                int e1 = m1.empty() ? 0 : m1[i];
                int e2 = m2.empty() ? 0 : m2[i];
                m[i] = e1 + e2;
                deg += m[i];
            }
            if (deg >= nd) continue;
            // normal ordering: move every eps_i power of m2 left past the
            // eps_j powers of m1 with j > i
            Scalar factor(1);
            for (int i = 0; i < ng; ++i) {
                int e2 = m2.empty() ? 0 : m2[i];
                if (e2 == 0) continue;
                for (int j = i + 1; j < ng; ++j) {
                    int e1 = m1.empty() ? 0 : m1[j];
                    if (e1 == 0) continue;
                    const Scalar& cf = r.alg_->swap_factor(i, j);
                    if (!cf.is_one()) factor *= cf.pow(e1 * e2);
                }
            }
            RatFn coef = c1 * c2;
            if (!factor.is_one()) coef = factor * coef;
            r.add_term(deg == 0 ? Mono{} : m, coef);
        }
    }
    return r;
}

NilElement NilElement::mul_ratfn(const RatFn& c) const {
    NilElement r;
    r.alg_ = alg_;
    if (c.is_zero()) return r;
    for (auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

NilElement NilElement::inverse() const {
    RatFn u = unital_part();
    if (u.is_zero()) throw error("NilElement: not a unit");
    // (u + n)^{-1} = u^{-1} sum_k (-n u^{-1})^k
    NilElement n = nil_part();
    if (n.is_zero()) return NilElement(u.inverse());
    NilElement uinv(u.inverse());
    NilElement t = -(n * uinv);
    NilElement acc(1), p(1);
    int nd = alg_ ? alg_->nildeg() : 2;
    for (int k = 1; k < nd; ++k) {
        p = p * t;
        if (p.is_zero()) break;
        acc += p;
    }
    return uinv * acc;
}

NilElement NilElement::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    NilElement acc(1), b = *this;
    int n = e;
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    if (alg_ && !acc.alg_) acc.alg_ = alg_;
    return acc;
}

bool NilElement::operator==(const NilElement& o) const {
    return terms_ == o.terms_;
}

NilElement NilElement::derive(int var) const {
    NilElement r;
    r.alg_ = alg_;
    for (auto& [m, c] : terms_) {
        RatFn d = c.derive(var);
        if (!d.is_zero()) r.terms_[m] = d;
    }
    return r;
}

std::string NilElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "e" + std::to_string(i + 1);
            if (m[i] != 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            os << "(" << c.str() << ")";
        else
            os << "(" << c.str() << ")*" << mono;
    }
    return os.str();
}

}  // namespace qsig
