#include "qsig/hq.hpp"

#include <random>
#include <sstream>

namespace qsig {

void HqElement::add_term(const Mono& m, const Scalar& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HqElement HqElement::operator-() const {
    HqElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

HqElement HqElement::operator+(const HqElement& o) const {
    HqElement r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

HqElement HqElement::operator-(const HqElement& o) const {
    HqElement r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

HqElement HqElement::operator*(const HqElement& o) const {
    // (u^{a1} v^{b1})(u^{a2} v^{b2}) = q^{b1 a2} u^{a1+a2} v^{b1+b2}
    HqElement r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            Scalar f = Scalar::q(m1.second * m2.first);
            r.add_term({m1.first + m2.first, m1.second + m2.second},
                       f * c1 * c2);
        }
    return r;
}

HqElement HqElement::mul_scalar(const Scalar& c) const {
    HqElement r;
    if (c.is_zero()) return r;
    for (auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

HqElement HqElement::inverse() const {
    if (terms_.size() != 1 || terms_.begin()->first.second != 0)
        throw error("HqElement: inverse only for scalar u-powers");
    auto& [m, c] = *terms_.begin();
    return monomial({-m.first, 0}, c.inverse());
}

HqElement HqElement::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    HqElement acc(1), b = *this;
    int n = e;
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

Scalar HqElement::counit() const {
    // epsilon(u^{a} v^{b}) = 0 unless b = 0
    Scalar r(0);
    for (auto& [m, c] : terms_)
        if (m.second == 0) r += c;
    return r;
}

HqElement HqElement::antipode() const {
    // anti-morphism with i(u) = u^{-1}, i(v) = -u^{-1} v:
    // i(u^a v^b) = i(v)^b i(u)^a = (-u^{-1} v)^b u^{-a}
    HqElement r;
    HqElement iv = -(u(-1) * v());
    for (auto& [m, c] : terms_) {
        HqElement term = iv.pow(m.second) * u(-m.first);
        r += term.mul_scalar(c);
    }
    return r;
}

std::string HqElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (m.first) os << "*u^" << m.first;
        if (m.second) os << "*v^" << m.second;
    }
    return os.str();
}

// --- tensor square -----------------------------------------------------------

void HqTensor::add_term(const Key& k, const Scalar& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[k] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HqTensor HqTensor::of(const HqElement& a, const HqElement& b) {
    HqTensor r;
    for (auto& [m1, c1] : a.terms())
        for (auto& [m2, c2] : b.terms()) r.add_term({m1, m2}, c1 * c2);
    return r;
}

HqTensor HqTensor::operator-() const {
    HqTensor r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

HqTensor HqTensor::operator+(const HqTensor& o) const {
    HqTensor r = *this;
    for (auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

HqTensor HqTensor::operator-(const HqTensor& o) const {
    return *this + (-o);
}

HqTensor HqTensor::operator*(const HqTensor& o) const {
    HqTensor r;
    for (auto& [k1, c1] : terms_)
        for (auto& [k2, c2] : o.terms_) {
            // componentwise products pick up the q-powers of each leg
            Scalar f = Scalar::q(k1.first.second * k2.first.first) *
                       Scalar::q(k1.second.second * k2.second.first);
            Key k{{k1.first.first + k2.first.first,
                   k1.first.second + k2.first.second},
                  {k1.second.first + k2.second.first,
                   k1.second.second + k2.second.second}};
            r.add_term(k, f * c1 * c2);
        }
    return r;
}

HqTensor HqTensor::mul_scalar(const Scalar& c) const {
    HqTensor r;
    if (c.is_zero()) return r;
    for (auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

HqElement HqTensor::collapse() const {
    HqElement r;
    for (auto& [k, c] : terms_) {
        HqElement prod = HqElement::monomial(k.first, c) *
                         HqElement::monomial(k.second, Scalar(1));
        r += prod;
    }
    return r;
}

std::string HqTensor::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*"
           << HqElement::monomial(k.first, Scalar(1)).str() << " (x) "
           << HqElement::monomial(k.second, Scalar(1)).str();
    }
    return os.str();
}

// --- coproduct ---------------------------------------------------------------

HqTensor hq_delta(const HqElement& x) {
    // Delta(u^a v^b) = (u (x) u)^a (u (x) v + v (x) 1)^b
    HqTensor r;
    HqTensor dv = HqTensor::of(HqElement::u(), HqElement::v()) +
                  HqTensor::of(HqElement::v(), HqElement(1));
    for (auto& [m, c] : x.terms()) {
        HqTensor du = HqTensor::of(HqElement::u(m.first),
                                   HqElement::u(m.first));
        HqTensor term = du;
        for (int i = 0; i < m.second; ++i) term = term * dv;
        r = r + term.mul_scalar(c);
    }
    return r;
}

namespace {

void add3(std::map<HqMono3, Scalar>& acc, const HqMono3& k, const Scalar& c) {
    auto it = acc.find(k);
    if (it == acc.end()) {
        if (!c.is_zero()) acc[k] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

}  // namespace

std::map<HqMono3, Scalar> hq_delta_then_left(const HqElement& x) {
    // (Delta (x) id) Delta
    std::map<HqMono3, Scalar> r;
    HqTensor d = hq_delta(x);
    for (auto& [k, c] : d.terms()) {
        HqTensor inner = hq_delta(HqElement::monomial(k.first, Scalar(1)));
        for (auto& [ki, ci] : inner.terms())
            add3(r, {ki.first, ki.second, k.second}, c * ci);
    }
    return r;
}

std::map<HqMono3, Scalar> hq_delta_then_right(const HqElement& x) {
    // (id (x) Delta) Delta
    std::map<HqMono3, Scalar> r;
    HqTensor d = hq_delta(x);
    for (auto& [k, c] : d.terms()) {
        HqTensor inner = hq_delta(HqElement::monomial(k.second, Scalar(1)));
        for (auto& [ki, ci] : inner.terms())
            add3(r, {k.first, ki.first, ki.second}, c * ci);
    }
    return r;
}

Report hq_verify_hopf(int depth, int random_pairs, uint64_t seed) {
    Report rep;
    std::vector<HqElement> monos;
    for (int a = -depth; a <= depth; ++a)
        for (int b = 0; b <= depth; ++b)
            monos.push_back(HqElement::monomial({a, b}, Scalar(1)));

    // defining relation: u v = q^{-1} v u, u u^{-1} = 1
    {
        bool ok = HqElement::u() * HqElement::v() ==
                  (HqElement::v() * HqElement::u()).mul_scalar(
                      Scalar::q(-1));
        ok = ok && HqElement::u() * HqElement::u(-1) == HqElement(1) &&
             HqElement::u(-1) * HqElement::u() == HqElement(1) &&
             HqElement::u(-1) * HqElement::v() ==
                 (HqElement::v() * HqElement::u(-1)).mul_scalar(Scalar::q());
        rep.add("hopf-algebra/defining-relations", ok);
    }

    // coassociativity
    {
        bool ok = true;
        std::string wit;
        for (auto& m : monos)
            if (hq_delta_then_left(m) != hq_delta_then_right(m)) {
                ok = false;
                wit = m.str();
                break;
            }
        rep.add("hopf-algebra/coassociativity", ok, "", wit);
    }

    // counit laws
    {
        bool ok = true;
        std::string wit;
        for (auto& m : monos) {
            HqElement left, right;
            HqTensor dm = hq_delta(m);
            for (auto& [k, c] : dm.terms()) {
                left += HqElement::monomial(k.second, Scalar(1))
                            .mul_scalar(
                                c * HqElement::monomial(k.first, Scalar(1))
                                        .counit());
                right += HqElement::monomial(k.first, Scalar(1))
                             .mul_scalar(
                                 c * HqElement::monomial(k.second, Scalar(1))
                                         .counit());
            }
            if (left != m || right != m) {
                ok = false;
                wit = m.str();
                break;
            }
        }
        rep.add("hopf-algebra/counit-laws", ok, "", wit);
    }

    // antipode laws: m(i (x) id) Delta = eta eps = m(id (x) i) Delta
    {
        bool ok = true;
        std::string wit;
        for (auto& m : monos) {
            HqTensor d = hq_delta(m);
            HqElement left =
                d.map_leg(0, [](const HqElement& x) { return x.antipode(); })
                    .collapse();
            HqElement right =
                d.map_leg(1, [](const HqElement& x) { return x.antipode(); })
                    .collapse();
            HqElement target = HqElement(1).mul_scalar(m.counit());
            if (left != target || right != target) {
                ok = false;
                wit = m.str();
                break;
            }
        }
        rep.add("hopf-algebra/antipode-laws", ok, "", wit);
    }

    // Delta respects the defining relation
    {
        HqTensor du = hq_delta(HqElement::u());
        HqTensor dv = hq_delta(HqElement::v());
        bool ok = du * dv == (dv * du).mul_scalar(Scalar::q(-1));
        rep.add("hopf-algebra/coproduct-respects-relation", ok);
    }

    // antipode is an anti-morphism on random pairs
    {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> ai(-depth, depth), bi(0, depth),
            ci(-3, 3);
        bool ok = true;
        std::string wit;
        for (int it = 0; it < random_pairs && ok; ++it) {
            HqElement x = HqElement::monomial({ai(rng), bi(rng)},
                                              Scalar(ci(rng))) +
                          HqElement::monomial({ai(rng), bi(rng)}, Scalar(1));
            HqElement y = HqElement::monomial({ai(rng), bi(rng)},
                                              Scalar(ci(rng))) +
                          HqElement(ci(rng));
            if ((x * y).antipode() != y.antipode() * x.antipode()) {
                ok = false;
                wit = x.str() + " ; " + y.str();
            }
        }
        ok = ok && HqElement(1).antipode() == HqElement(1);
        rep.add("hopf-algebra/antipode-anti-morphism", ok, "", wit);
    }

    return rep;
}

}  // namespace qsig
