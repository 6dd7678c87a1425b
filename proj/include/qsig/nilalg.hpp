#ifndef QSIG_NILALG_HPP
#define QSIG_NILALG_HPP

#include <map>
#include <memory>
#include <vector>

#include "qsig/ratfn.hpp"

namespace qsig {

class NilAlgebra;
using NilAlgebraPtr = std::shared_ptr<const NilAlgebra>;

// Finite-dimensional nilpotent algebra over the function field: generators
// eps_1..eps_m with scalar commutation rules eps_j eps_i = c_{ij} eps_i eps_j
// (i < j) and all monomials of total degree >= nildeg equal to zero. The
// function field (and K) is central.
class NilAlgebra {
  public:
    static NilAlgebraPtr commutative(int ngen, int nildeg);
    // two generators with eps2 eps1 = q eps1 eps2
    static NilAlgebraPtr qplane(int nildeg);
    // pairs (eps1,eps2), (eps3,eps4): q-commuting inside each pair,
    // commuting across pairs
    static NilAlgebraPtr qplane_pairs(int npairs, int nildeg);
    // same, preceded by `ncentral` generators commuting with everything
    static NilAlgebraPtr qplane_pairs_with_center(int npairs, int ncentral,
                                                  int nildeg);
    static NilAlgebraPtr custom(int ngen, int nildeg,
                                std::map<std::pair<int, int>, Scalar> rules);

    int ngen() const { return ngen_; }
    int nildeg() const { return nildeg_; }
    // factor picked up when eps_j moves left past eps_i, for i < j
    const Scalar& swap_factor(int i, int j) const { return c_[i][j]; }

    // all basis monomials of degree 1 .. nildeg-1, by exponent vector
    std::vector<std::vector<int>> nilpotent_basis() const;

    bool same(const NilAlgebraPtr& o) const;

  private:
    NilAlgebra(int ngen, int nildeg) : ngen_(ngen), nildeg_(nildeg) {}
    int ngen_, nildeg_;
    std::vector<std::vector<Scalar>> c_;
};

// Element of a NilAlgebra with RatFn coefficients. The algebra pointer may be
// null for pure scalar elements; they coerce against any algebra on use.
class NilElement {
  public:
    using Mono = std::vector<int>;  // generator exponents

    NilElement() = default;
    NilElement(long c) { set_unital(RatFn(c)); }
    explicit NilElement(const RatFn& c) { set_unital(c); }
    explicit NilElement(const Scalar& c) { set_unital(RatFn(c)); }

    static NilElement gen(const NilAlgebraPtr& alg, int i, int e = 1);
    static NilElement monomial(const NilAlgebraPtr& alg, const Mono& m,
                               const RatFn& c);

    const NilAlgebraPtr& algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    RatFn unital_part() const;
    NilElement nil_part() const;
    bool is_nilpotent() const { return unital_part().is_zero(); }
    bool is_unit() const { return !unital_part().is_zero(); }

    const std::map<Mono, RatFn>& terms() const { return terms_; }

    NilElement operator-() const;
    NilElement operator+(const NilElement& o) const;
    NilElement operator-(const NilElement& o) const;
    NilElement operator*(const NilElement& o) const;
    NilElement& operator+=(const NilElement& o) { return *this = *this + o; }
    NilElement& operator-=(const NilElement& o) { return *this = *this - o; }
    NilElement& operator*=(const NilElement& o) { return *this = *this * o; }

    NilElement mul_ratfn(const RatFn& c) const;
    NilElement mul_scalar(const Scalar& c) const { return mul_ratfn(RatFn(c)); }
    NilElement inverse() const;
    NilElement pow(int e) const;

    bool operator==(const NilElement& o) const;
    bool operator!=(const NilElement& o) const { return !(*this == o); }

    NilElement derive(int var) const;  // 0 = d/dt, 1 = d/dy on coefficients

    std::string str() const;

  private:
    void set_unital(const RatFn& c) {
        terms_.clear();
        if (!c.is_zero()) terms_[{}] = c;
    }
    void add_term(const Mono& m, const RatFn& c);
    static Mono normal_mono(const Mono& m, int ngen);

    NilAlgebraPtr alg_;
    // monomials stored with exponent vectors of length alg_->ngen();
    // the empty vector is the unital component
    std::map<Mono, RatFn> terms_;
};

inline NilElement commutator(const NilElement& a, const NilElement& b) {
    return a * b - b * a;
}

inline NilElement operator*(const Scalar& c, const NilElement& x) {
    return x.mul_scalar(c);
}
inline NilElement operator*(const RatFn& c, const NilElement& x) {
    return x.mul_ratfn(c);
}

}  // namespace qsig

#endif
