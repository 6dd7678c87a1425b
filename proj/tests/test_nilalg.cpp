#include <doctest.h>

#include <random>

#include "qsig/wseries.hpp"

using namespace qsig;

namespace {
const RatFn T = RatFn::t();
const Scalar Q = Scalar::q();

NilElement random_elem(const NilAlgebraPtr& alg, std::mt19937_64& rng,
                       bool unit) {
    std::uniform_int_distribution<int> coef(-3, 3);
    NilElement x(unit ? coef(rng) * 2 + 1 : 0);
    for (auto& m : alg->nilpotent_basis()) {
        int c = coef(rng);
        if (c) x += NilElement::monomial(alg, m, RatFn(c));
    }
    return x;
}
}  // namespace

TEST_CASE("normal ordering in the q-plane algebra") {
    auto aq = NilAlgebra::qplane(4);
    NilElement e1 = NilElement::gen(aq, 0), e2 = NilElement::gen(aq, 1);
    // eps2 eps1 = q eps1 eps2
    CHECK(e2 * e1 == Q * (e1 * e2));
    CHECK(commutator(e1, e2) == (Scalar(1) - Q) * (e1 * e2));
}

TEST_CASE("nilpotency truncation") {
    auto a2 = NilAlgebra::commutative(1, 2);
    NilElement e = NilElement::gen(a2, 0);
    CHECK((e * e).is_zero());

    auto a3 = NilAlgebra::commutative(1, 3);
    NilElement f = NilElement::gen(a3, 0);
    NilElement lhs = (NilElement(1) + f) * (NilElement(1) - f);
    CHECK(lhs == NilElement(1) - f * f);
}

TEST_CASE("inverses") {
    auto a3 = NilAlgebra::commutative(1, 3);
    NilElement e = NilElement::gen(a3, 0);
    CHECK((NilElement(1) + e).inverse() ==
          NilElement(1) - e + e * e);
    CHECK(NilElement(Scalar(7)).inverse() == NilElement(Scalar(Rat(1, 7))));
    CHECK_THROWS_AS(e.inverse(), error);

    std::mt19937_64 rng(3);
    for (auto alg : {NilAlgebra::commutative(2, 4), NilAlgebra::qplane(4)}) {
        for (int i = 0; i < 8; ++i) {
            NilElement x = random_elem(alg, rng, true);
            CHECK(x.inverse() * x == NilElement(1));
            CHECK(x * x.inverse() == NilElement(1));
        }
    }
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(9);
    for (auto alg : {NilAlgebra::commutative(2, 4), NilAlgebra::qplane(4)}) {
        for (int i = 0; i < 10; ++i) {
            NilElement a = random_elem(alg, rng, i % 2);
            NilElement b = random_elem(alg, rng, (i + 1) % 2);
            NilElement c = random_elem(alg, rng, false);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("nilpotent part is an ideal") {
    std::mt19937_64 rng(17);
    auto aq = NilAlgebra::qplane(4);
    for (int i = 0; i < 6; ++i) {
        NilElement n = random_elem(aq, rng, false);
        NilElement x = random_elem(aq, rng, true);
        CHECK((n * x).unital_part().is_zero());
        CHECK((x * n).unital_part().is_zero());
    }
}

TEST_CASE("base field is central") {
    auto aq = NilAlgebra::qplane(4);
    NilElement e1 = NilElement::gen(aq, 0);
    NilElement tt(T);
    CHECK(commutator(tt, e1).is_zero());
    CHECK(commutator(NilElement(Scalar::s()), e1).is_zero());
}

TEST_CASE("wseries basics") {
    const int nw = 4;
    auto aq = NilAlgebra::qplane(4);
    NilElement e1 = NilElement::gen(aq, 0);
    WSeries w1 = WSeries::w(0, nw);

    CHECK(commutator(w1, WSeries(e1, nw)).is_zero());
    CHECK((w1 * w1 * w1 * w1 * w1).is_zero());  // degree 5 > 4

    WSeries x = WSeries(e1, nw) + w1;
    CHECK(x.coeff(0, 0) == e1);
    CHECK(x.coeff(1, 0) == NilElement(1));
}

TEST_CASE("wseries substitution") {
    const int nw = 4;
    auto ac = NilAlgebra::commutative(2, 4);
    NilElement eps = NilElement::gen(ac, 0), h = NilElement::gen(ac, 1);
    NilElement g = NilElement(1) + eps;
    WSeries w1 = WSeries::w(0, nw);

    // W1 -> W1 + eps
    CHECK(w1.subst_w1(w1 + WSeries(eps, nw)) == w1 + WSeries(eps, nw));

    // W1^2 -> g^2 W1^2 with u = 0
    WSeries w1sq = w1 * w1;
    WSeries garg = WSeries(NilElement(), nw) + WSeries::monomial({1, 0}, g, nw);
    CHECK(w1sq.subst_w1(garg) == WSeries::monomial({2, 0}, g * g, nw));

    // linear case: 1 + eps W1 -> 1 + eps (g W1 + (g-1) t + h)
    WSeries b = WSeries(NilElement(1), nw) + WSeries::monomial({1, 0}, eps, nw);
    NilElement u = (g - NilElement(1)) * NilElement(T) + h;
    WSeries arg = WSeries(u, nw) + WSeries::monomial({1, 0}, g, nw);
    WSeries expect = WSeries(NilElement(1) + eps * u, nw) +
                     WSeries::monomial({1, 0}, eps * g, nw);
    CHECK(b.subst_w1(arg) == expect);

    // substitution with non-nilpotent constant term is rejected
    CHECK_THROWS_AS(b.subst_w1(WSeries(NilElement(1), nw)), error);

    // multiplicativity when coefficients commute with the data
    std::mt19937_64 rng(5);
    for (int i = 0; i < 5; ++i) {
        WSeries p = WSeries(random_elem(ac, rng, true), nw) +
                    WSeries::monomial({1, 0}, random_elem(ac, rng, false), nw) +
                    WSeries::monomial({2, 0}, random_elem(ac, rng, false), nw);
        WSeries r = WSeries(random_elem(ac, rng, false), nw) +
                    WSeries::monomial({1, 0}, random_elem(ac, rng, true), nw);
        CHECK((p * r).subst_w1(arg) == p.subst_w1(arg) * r.subst_w1(arg));
    }
}

TEST_CASE("wseries inverse") {
    const int nw = 3;
    auto aq = NilAlgebra::qplane(4);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 5; ++i) {
        WSeries x = WSeries(random_elem(aq, rng, true), nw) +
                    WSeries::monomial({1, 0}, random_elem(aq, rng, false), nw) +
                    WSeries::monomial({0, 1}, random_elem(aq, rng, false), nw);
        WSeries xi = x.inverse();
        CHECK(xi * x == WSeries(NilElement(1), nw));
        CHECK(x * xi == WSeries(NilElement(1), nw));
    }
}

TEST_CASE("derivations on wseries") {
    const int nw = 3;
    WSeries x = WSeries::taylor_shift(T * T, nw);
    // d/dW1 of f(t+W1) equals d/dt of it
    CHECK(x.derive(2) == x.derive(0));
    CHECK(x.derive(2).coeff(0, 0) == NilElement(2 * T));
}
