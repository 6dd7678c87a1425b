#include <doctest.h>

#include <random>

#include "qsig/models.hpp"

using namespace qsig;

namespace {
using TS = TwistedSeries<RatFn>;
using SeqR = Seq<RatFn>;
const RatFn T = RatFn::t();
const RatFn Y = RatFn::y();

TS random_series(std::mt19937_64& rng, int xdeg, ExampleId ex) {
    std::uniform_int_distribution<int> pick(0, 3), small(-2, 2);
    TS r(xdeg);
    for (int i = 0; i <= xdeg; ++i) {
        SeqR s = SeqR::zero();
        int parts = 1 + (rng() % 2);
        for (int p = 0; p < parts; ++p) {
            switch (pick(rng)) {
                case 0: s = s + SeqR::constant(RatFn(small(rng))); break;
                case 1: s = s + SeqR::geom(small(rng), 0); break;
                case 2:
                    s = s + SeqR::orbit(Y / T, ex).scalar_mul(
                                Scalar(small(rng)));
                    break;
                default: s = s + SeqR::constant(T).scalar_mul(Scalar(small(rng)));
            }
        }
        r.set_coeff(i, s);
    }
    return r;
}
}  // namespace

TEST_CASE("quantum plane relation QX = qXQ") {
    const int D = 4;
    TS Qs = ts_Q<RatFn>(D), X = TS::x(D);
    CHECK(ts_eq_up_to(Qs * X, (X * Qs).scalar_mul(Scalar::q()), 10));
}

TEST_CASE("basic normal ordering") {
    const int D = 5;
    auto a = SeqR::orbit(Y, ExampleId::C_T_TALPHA);
    auto b = SeqR::orbit(Y / T, ExampleId::C_T_TALPHA);
    TS Xa = TS::x(D).seq_mul_right(a), Xb = TS::x(D).seq_mul_right(b);
    // (X a)(X b) = X^2 Sigma(a) b
    TS expect(D);
    expect.set_coeff(2, a.shift() * b);
    CHECK(ts_eq_up_to(Xa * Xb, expect, 8));

    TS one = TS::one(D);
    TS x = random_series(*(new std::mt19937_64(4)), D, ExampleId::C_T_TALPHA);
    CHECK(ts_eq_up_to(one * x, x, 8));
    CHECK(ts_eq_up_to(x * one, x, 8));
}

TEST_CASE("hat operators on X and Q") {
    const int D = 5;
    TS Qs = ts_Q<RatFn>(D), X = TS::x(D);
    CHECK(ts_eq_up_to(X.hat_sigma(), X.scalar_mul(Scalar::q()), 10));
    CHECK(ts_eq_up_to(Qs.hat_sigma(), Qs.scalar_mul(Scalar::q()), 10));

    auto c = TS::from_seq(SeqR::constant(RatFn(Scalar::s() + 2)), D);
    CHECK(ts_eq_up_to(c.hat_sigma(), c, 10));

    CHECK(ts_eq_up_to(X.hat_theta(1), TS::one(D), 10));
    for (int i = 2; i <= 4; ++i)
        CHECK(ts_eq_up_to(X.hat_theta(i), TS::zero(D), 10));
    CHECK(ts_eq_up_to(Qs.hat_theta(1), TS::zero(D), 10));
}

TEST_CASE("series inversion") {
    const int D = 6;
    // Q^{-1}
    TS Qs = ts_Q<RatFn>(D);
    CHECK(ts_eq_up_to(Qs.invert(),
                      TS::from_seq(SeqR::geom(-1, 0), D), 10));

    // (1+X)^{-1} = sum (-1)^n X^n
    TS onepx = TS::one(D) + TS::x(D);
    TS geo(D);
    for (int n = 0; n <= D; ++n)
        geo.set_coeff(n, SeqR::one().scalar_mul(Scalar(n % 2 ? -1 : 1)));
    CHECK(ts_eq_up_to(onepx.invert(), geo, 10));

    // (tQ + X)^{-1} has X^0 coefficient t^{-1} Q^{-1}
    TS it = closed_iota_t<RatFn>(D);
    TS inv = it.invert();
    CHECK(seq_eq_up_to(inv.coeff(0),
                       SeqR::constant(T.inverse()) * SeqR::geom(-1, 0), 10));
    CHECK(ts_eq_up_to(inv * it, TS::one(D), 10));
    CHECK(ts_eq_up_to(it * inv, TS::one(D), 10));
}

TEST_CASE("ring axioms at truncation on random triples") {
    std::mt19937_64 rng(11);
    const int D = 6, H = 10;
    for (int rep = 0; rep < 3; ++rep) {
        TS a = random_series(rng, D, ExampleId::C_T_TALPHA);
        TS b = random_series(rng, D, ExampleId::C_T_TALPHA);
        TS c = random_series(rng, D, ExampleId::C_T_TALPHA);
        CHECK(ts_eq_up_to((a * b) * c, a * (b * c), H));
        CHECK(ts_eq_up_to(a * (b + c), a * b + a * c, H));
        CHECK(ts_eq_up_to((a + b) * c, a * c + b * c, H));
    }
}

TEST_CASE("hat operators satisfy the defining axioms on random series") {
    std::mt19937_64 rng(23);
    const int D = 8, H = 10;
    for (int rep = 0; rep < 2; ++rep) {
        TS x = random_series(rng, D, ExampleId::C_T_TALPHA);
        TS y = random_series(rng, D, ExampleId::C_T_TALPHA);

        // theta-sigma twist
        for (int i = 1; i <= 3; ++i) {
            TS lhs = x.hat_sigma().hat_theta(i);
            TS rhs = x.hat_theta(i).hat_sigma().scalar_mul(Scalar::q(i));
            CHECK(ts_eq_up_to(lhs, rhs, H));
        }

        // Leibniz: hatTheta^{(i)}(xy) = sum hatSigma^m(hatTheta^{(l)} x) hatTheta^{(m)} y
        for (int i = 1; i <= 3; ++i) {
            TS lhs = (x * y).hat_theta(i);
            TS rhs(D);
            rhs = rhs.with_trusted(D - i);
            for (int l = 0; l <= i; ++l) {
                int m = i - l;
                TS term = x.hat_theta(l);
                for (int k = 0; k < m; ++k) term = term.hat_sigma();
                rhs += term * y.hat_theta(m);
            }
            CHECK(ts_eq_up_to(lhs, rhs, H));
        }

        // iterativity
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                TS lhs = x.hat_theta(j).hat_theta(i);
                TS rhs = x.hat_theta(i + j).scalar_mul(q_binom(i + j, i));
                CHECK(ts_eq_up_to(lhs, rhs.with_trusted(lhs.trusted()), H));
            }
    }
}

TEST_CASE("trusted degree bookkeeping") {
    const int D = 6;
    TS x = closed_Y0<RatFn>(D);
    CHECK(x.trusted() == D);
    CHECK(x.hat_theta(2).trusted() == D - 2);
    CHECK((x.hat_theta(1) * x).trusted() == D - 1);
    CHECK_THROWS_AS(ts_eq_up_to(x.hat_theta(D + 1), x, 4), error);
}

TEST_CASE("universal expansion is a morphism intertwining the operators") {
    const int D = 6, H = 10;
    for (auto id : {ExampleId::C_T, ExampleId::C_T_TALPHA, ExampleId::C_T_LOGT}) {
        QSDStructure st(id);
        std::vector<RatFn> samples{T, T.inverse()};
        if (st.has_y()) {
            samples.push_back(Y);
            samples.push_back(Y / T);
        } else {
            samples.push_back(T * T + RatFn(1));
        }
        for (auto& a : samples) {
            TS ia = hopf_expand<RatFn>(a, st, D);
            // sigma / hatSigma
            CHECK(ts_eq_up_to(hopf_expand<RatFn>(st.sigma(a), st, D),
                              ia.hat_sigma(), H));
            // theta^{(i)} / hatTheta^{(i)}
            for (int i = 1; i <= 4; ++i)
                CHECK(ts_eq_up_to(hopf_expand<RatFn>(st.theta(i, a), st, D),
                                  ia.hat_theta(i), H));
            for (auto& b : samples) {
                TS ib = hopf_expand<RatFn>(b, st, D);
                CHECK(ts_eq_up_to(hopf_expand<RatFn>(a * b, st, D), ia * ib, H));
            }
        }
    }
}

TEST_CASE("structural closed forms") {
    const int D = 8, H = 12;
    // iota(t) = tQ + X in every example
    for (auto id : {ExampleId::C_T, ExampleId::C_T_TALPHA, ExampleId::C_T_LOGT}) {
        QSDStructure st(id);
        CHECK(ts_eq_up_to(hopf_expand<RatFn>(T, st, D), closed_iota_t<RatFn>(D),
                          H));
    }
    // iota(y) = Y0 y
    QSDStructure ta(ExampleId::C_T_TALPHA);
    TS iy = hopf_expand<RatFn>(Y, ta, D);
    TS y0y = closed_Y0<RatFn>(D).seq_mul_right(SeqR::constant(Y));
    CHECK(ts_eq_up_to(iy, y0y, H));

    // log example: computed expansion matches the corrected closed form ...
    QSDStructure lg(ExampleId::C_T_LOGT);
    TS iyl = hopf_expand<RatFn>(Y, lg, D);
    CHECK(ts_eq_up_to(iyl, closed_iota_y_logt<RatFn>(D), H));
    // ... and differs from the shape printed without the q-power factor
    std::string wit;
    CHECK_FALSE(ts_eq_up_to(iyl, closed_iota_y_logt<RatFn>(D, false, 0, true),
                            H, -1, &wit));
    CHECK(!wit.empty());
}

TEST_CASE("taylor expansions") {
    const int D = 7;
    DiffStructure dy{DiffStructure::Kind::d_dy_exp};
    TS Yexp = taylor_expand(Y, dy, D);
    CHECK(ts_eq_up_to(Yexp, closed_y_exp_x(D), 6));
    // y dY/dy = Y
    CHECK(ts_eq_up_to(Yexp.coeff_derive(Var::y).seq_mul_left(
                          SeqR::constant(Y)),
                      Yexp, 6));
    // morphism: iota(y^2) = iota(y)^2
    DiffStructure dl{DiffStructure::Kind::d_dt_logt};
    CHECK(ts_eq_up_to(taylor_expand(T, dl, D), closed_taylor_t(D), 6));
    CHECK(ts_eq_up_to(taylor_expand(Y, dl, D), closed_taylor_logt(D), 6));
    CHECK(ts_eq_up_to(taylor_expand(T * Y, dl, D),
                      taylor_expand(T, dl, D) * taylor_expand(Y, dl, D), 6));
    // d/dX intertwines with delta
    CHECK(ts_eq_up_to(taylor_expand(Y, dl, D).ddx(),
                      taylor_expand(dl.delta(Y), dl, D)
                          .with_trusted(D - 1),
                      6));
}

TEST_CASE("coefficientwise derivations") {
    const int D = 5;
    TS it = closed_iota_t<RatFn>(D);
    CHECK(ts_eq_up_to(it.coeff_derive(Var::t), ts_Q<RatFn>(D), 10));
    CHECK(ts_eq_up_to(closed_Y0<RatFn>(D).coeff_derive(Var::y), TS::zero(D),
                      10));
    CHECK(ts_eq_up_to(TS::x(D).coeff_derive(Var::t), TS::zero(D), 10));
}

TEST_CASE("hull closure identities for the t^alpha example") {
    const int D = 6, H = 9;
    TS y0 = closed_Y0<RatFn>(D);
    TS it = closed_iota_t<RatFn>(D);
    Scalar s = Scalar::s(), q = Scalar::q();

    TS dny0 = y0;
    for (int n = 0; n <= 3; ++n) {
        if (n > 0) dny0 = dny0.coeff_derive(Var::t);
        // hatSigma(d^n Y0/dt^n) = q^alpha d^n Y0/dt^n
        CHECK(ts_eq_up_to(dny0.hat_sigma(), dny0.scalar_mul(s), H));
    }

    // hatTheta^{(1)}(d^n Y0/dt^n) = d^n/dt^n ((q^alpha - 1) Y0 ((q-1)(tQ+X))^{-1})
    TS rhs0 = y0.scalar_mul(s - 1) * it.scalar_mul(q - 1).invert();
    TS lhs = y0, rhs = rhs0;
    for (int n = 0; n <= 3; ++n) {
        if (n > 0) {
            lhs = lhs.coeff_derive(Var::t);
            rhs = rhs.coeff_derive(Var::t);
        }
        CHECK(ts_eq_up_to(lhs.hat_theta(1), rhs, H));
    }
}
