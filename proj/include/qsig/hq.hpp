#ifndef QSIG_HQ_HPP
#define QSIG_HQ_HPP

#include <map>

#include "qsig/report.hpp"
#include "qsig/scalar.hpp"

namespace qsig {

// The Hopf algebra <u, u^{-1}, v> / (uv - q^{-1} vu): normal form keeps
// u-powers (any sign) left of v-powers, with v u = q u v.
class HqElement {
  public:
    using Mono = std::pair<int, int>;  // (u exponent, v exponent >= 0)

    HqElement() = default;
    HqElement(long c) {
        if (c) terms_[{0, 0}] = Scalar(c);
    }
    explicit HqElement(const Scalar& c) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }

    static HqElement u(int e = 1) { return monomial({e, 0}, Scalar(1)); }
    static HqElement v(int e = 1) { return monomial({0, e}, Scalar(1)); }
    static HqElement monomial(const Mono& m, const Scalar& c) {
        HqElement x;
        if (m.second < 0) throw error("HqElement: negative v exponent");
        if (!c.is_zero()) x.terms_[m] = c;
        return x;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Scalar>& terms() const { return terms_; }

    HqElement operator-() const;
    HqElement operator+(const HqElement& o) const;
    HqElement operator-(const HqElement& o) const;
    HqElement operator*(const HqElement& o) const;
    HqElement& operator+=(const HqElement& o) { return *this = *this + o; }
    HqElement& operator-=(const HqElement& o) { return *this = *this - o; }
    HqElement& operator*=(const HqElement& o) { return *this = *this * o; }

    HqElement mul_scalar(const Scalar& c) const;
    HqElement inverse() const;  // defined for scalar multiples of u^a
    HqElement pow(int e) const;

    bool operator==(const HqElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const HqElement& o) const { return !(*this == o); }

    Scalar counit() const;
    HqElement antipode() const;

    std::string str() const;

  private:
    void add_term(const Mono& m, const Scalar& c);
    std::map<Mono, Scalar> terms_;
};

inline HqElement operator*(const Scalar& c, const HqElement& x) {
    return x.mul_scalar(c);
}

// Tensor square with componentwise multiplication.
class HqTensor {
  public:
    using Mono = HqElement::Mono;
    using Key = std::pair<Mono, Mono>;

    HqTensor() = default;
    static HqTensor of(const HqElement& a, const HqElement& b);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    HqTensor operator-() const;
    HqTensor operator+(const HqTensor& o) const;
    HqTensor operator-(const HqTensor& o) const;
    HqTensor operator*(const HqTensor& o) const;
    HqTensor mul_scalar(const Scalar& c) const;

    bool operator==(const HqTensor& o) const { return terms_ == o.terms_; }
    bool operator!=(const HqTensor& o) const { return !(*this == o); }

    // multiply the two legs together (m: H (x) H -> H)
    HqElement collapse() const;
    // apply a map to one leg
    template <class F>
    HqTensor map_leg(int leg, F f) const {
        HqTensor r;
        for (auto& [k, c] : terms_) {
            HqElement img = f(HqElement::monomial(leg == 0 ? k.first : k.second,
                                                  Scalar(1)));
            HqElement other = HqElement::monomial(
                leg == 0 ? k.second : k.first, Scalar(1));
            for (auto& [mi, ci] : img.terms()) {
                Key key = leg == 0 ? Key{mi, k.second} : Key{k.first, mi};
                (void)other;
                r.add_term(key, c * ci);
            }
        }
        return r;
    }

    std::string str() const;

    void add_term(const Key& k, const Scalar& c);

  private:
    std::map<Key, Scalar> terms_;
};

// coproduct: Delta(u) = u (x) u, Delta(v) = u (x) v + v (x) 1
HqTensor hq_delta(const HqElement& x);

// triple tensor for the coassociativity check
using HqMono3 = std::array<HqElement::Mono, 3>;
std::map<HqMono3, Scalar> hq_delta_then_left(const HqElement& x);
std::map<HqMono3, Scalar> hq_delta_then_right(const HqElement& x);

// full axiom battery on monomials u^a v^b with |a|, b <= depth
Report hq_verify_hopf(int depth, int random_pairs = 20, uint64_t seed = 0);

}  // namespace qsig

#endif
