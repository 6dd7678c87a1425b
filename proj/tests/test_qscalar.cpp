#include <doctest.h>

#include <random>
#include <vector>

#include "qsig/scalar.hpp"

using namespace qsig;

namespace {

// independent oracle for the Gaussian binomial: the q-Pascal recurrence
// B(m,n) = B(m-1,n-1) + q^n B(m-1,n)
Scalar pascal_qbinom(int m, int n) {
    static std::vector<std::vector<Scalar>> table;
    if (n > m) return Scalar(0);
    for (int mm = (int)table.size(); mm <= m; ++mm) {
        std::vector<Scalar> row(mm + 1);
        row[0] = Scalar(1);
        row[mm] = Scalar(1);
        for (int nn = 1; nn < mm; ++nn)
            row[nn] = table[mm - 1][nn - 1] + Scalar::q(nn) * table[mm - 1][nn];
        table.push_back(row);
    }
    return table[m][n];
}

Scalar random_scalar(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> coef(-4, 4), ex(0, 2), nterms(1, 3);
    for (;;) {
        MPoly p;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            MPoly::Exp e{ex(rng), ex(rng), 0};
            p += MPoly(Rat(coef(rng))).mul_term(e, 1);
        }
        MPoly d;
        int kd = nterms(rng);
        for (int i = 0; i < kd; ++i) {
            MPoly::Exp e{ex(rng), ex(rng), 0};
            d += MPoly(Rat(coef(rng))).mul_term(e, 1);
        }
        if (d.is_zero()) continue;
        Scalar s(p, d);
        if (nonzero && s.is_zero()) continue;
        return s;
    }
}

}  // namespace

TEST_CASE("scalar ring identities") {
    Scalar q = Scalar::q(), s = Scalar::s(), one(1);

    CHECK((q - one) + one == q);
    CHECK((s - one) / (q - one) * (q - one) == s - one);
    // (q^2-1)/(q-1) reduces to q+1
    CHECK(Scalar(MPoly::q(2) - MPoly(1), MPoly::q() - MPoly(1)) == q + one);
    CHECK((q * q - one) / (q - one) == q + one);
}

TEST_CASE("scalar division by zero") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), error);
    CHECK_THROWS_AS(Scalar(0).inverse(), error);
}

TEST_CASE("q_int basics") {
    CHECK(q_int(0) == Scalar(0));
    CHECK(q_int(2) == Scalar(1) + Scalar::q());
    Scalar five = Scalar(1) + Scalar::q(1) + Scalar::q(2) + Scalar::q(3) +
                  Scalar::q(4);
    CHECK(q_int(5) == five);
}

TEST_CASE("q_binom against q-Pascal oracle") {
    CHECK(q_binom(3, 5) == Scalar(0));
    for (int m = 0; m <= 12; ++m) CHECK(q_binom(m, 0) == Scalar(1));

    // frozen expansion, cross-checked with the recurrence
    Scalar expect42 = Scalar(1) + Scalar::q(1) + 2 * Scalar::q(2) +
                      Scalar::q(3) + Scalar::q(4);
    CHECK(q_binom(4, 2) == expect42);
    CHECK(pascal_qbinom(4, 2) == expect42);

    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= m; ++n) CHECK(q_binom(m, n) == pascal_qbinom(m, n));
}

TEST_CASE("q_binom specializes to the ordinary binomial at q=1") {
    for (int m = 0; m <= 12; ++m) {
        Rat c = 1;
        for (int n = 0; n <= m; ++n) {
            CHECK(q_binom(m, n).eval(1, 1, 1) == c);
            c = c * (m - n) / (n + 1);
        }
    }
}

TEST_CASE("q_binom_alpha") {
    CHECK(q_binom_alpha(0) == Scalar(1));
    CHECK(q_binom_alpha(1) == (Scalar::s() - 1) / (Scalar::q() - 1));

    Scalar s = Scalar::s(), q = Scalar::q();
    Scalar expect2 = (s - 1) * (s - q) /
                     (q * (q - 1) * (q * q - 1));
    CHECK(q_binom_alpha(2) == expect2);
}

TEST_CASE("generalized q-Pascal for q_binom_alpha") {
    // binom(a,n) = binom(a-1,n-1) + q^n binom(a-1,n); a-1 realized by s -> s/q
    for (int n = 1; n <= 8; ++n) {
        Scalar lhs = q_binom_alpha(n);
        Scalar rhs = q_binom_alpha(n - 1).subst_s_shift(-1) +
                     Scalar::q(n) * q_binom_alpha(n).subst_s_shift(-1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("alpha-shift identity") {
    // l = 1: both sides reduce to (qs-1)/(q-1)
    Scalar both = (Scalar::q() * Scalar::s() - 1) / (Scalar::q() - 1);
    CHECK(Scalar::q(1) * q_binom_alpha(1) + q_binom_alpha(0) == both);
    CHECK(q_binom_alpha(1) + Scalar::s() * q_binom_alpha(0) == both);
    for (int l = 1; l <= 10; ++l) CHECK(qbinom_alpha_shift_identity(l));
}

TEST_CASE("numeric evaluation") {
    CHECK(q_int(2).eval(2, 1, 1) == 3);
    CHECK(q_binom(4, 2).eval(2, 1, 1) == 35);
    Scalar x = (Scalar::s() - 1) / (Scalar::q() - 1);
    CHECK(x.eval(2, 8, 1) == 7);
    CHECK_THROWS_AS(x.eval(1, 5, 1), bad_sample_point);
}

TEST_CASE("numeric point guard collapses scalars") {
    NumericPointGuard guard(Rat(2), Rat(8), Rat(3));
    Scalar x = (Scalar::s() - 1) / (Scalar::q() - 1);
    CHECK(x == Scalar(Rat(7)));
    CHECK(q_binom(4, 2) == Scalar(Rat(35)));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(0);
    for (int it = 0; it < 40; ++it) {
        Scalar a = random_scalar(rng), b = random_scalar(rng),
               c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        Scalar d = random_scalar(rng, true);
        CHECK(a / d * d == a);
    }
}

TEST_CASE("subst_s_shift round trip") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 20; ++it) {
        Scalar a = random_scalar(rng);
        CHECK(a.subst_s_shift(1).subst_s_shift(-1) == a);
        CHECK(a.subst_s_shift(-2).subst_s_shift(2) == a);
    }
}
