#include "qsig/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qsig/deform.hpp"
#include "qsig/linsolve.hpp"

namespace qsig {

namespace {

using nlohmann::json;
using TS = TwistedSeries<RatFn>;
using SeqR = Seq<RatFn>;
using SeqW = Seq<WSeries>;

std::vector<ExampleId> selected_examples(const RunConfig& cfg) {
    if (cfg.example == "c_t") return {ExampleId::C_T};
    if (cfg.example == "c_t_talpha") return {ExampleId::C_T_TALPHA};
    if (cfg.example == "c_t_logt") return {ExampleId::C_T_LOGT};
    return {ExampleId::C_T, ExampleId::C_T_TALPHA, ExampleId::C_T_LOGT};
}

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// A task produces a batch of checks; tasks run in parallel and the merged
// report is sorted by check name, so output is order-stable.
struct TaskRunner {
    const RunConfig& cfg;
    std::vector<std::pair<std::string, std::function<Report()>>> tasks;

    void add(const std::string& name, std::function<Report()> fn) {
        tasks.emplace_back(name, std::move(fn));
    }

    Report run() {
        auto wrap = [this](const std::pair<std::string,
                                           std::function<Report()>>& t) {
            double t0 = now_ms();
            Report rep;
            try {
                if (cfg.qmode == "numeric") {
                    NumericPointGuard guard(cfg.q_num, cfg.s_num, cfg.lam_num);
                    rep = t.second();
                } else {
                    rep = t.second();
                }
            } catch (const bad_sample_point& e) {
                rep.add(t.first + "/numeric-sample", false, "",
                        std::string("sample point rejected: ") + e.what() +
                            "; rerun with a different numeric point");
            } catch (const std::exception& e) {
                rep.add(t.first + "/execution", false, "", e.what());
            }
            double elapsed = now_ms() - t0;
            for (auto& c : rep.checks)
                if (c.elapsed_ms == 0.0)
                    c.elapsed_ms =
                        std::round(elapsed / rep.checks.size() * 1000.0) /
                        1000.0;
            return rep;
        };

        std::vector<std::future<Report>> futs;
        for (auto& t : tasks)
            futs.push_back(std::async(std::launch::async, wrap, std::cref(t)));
        Report merged;
        for (auto& f : futs) merged.merge(f.get());
        std::stable_sort(
            merged.checks.begin(), merged.checks.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
        return merged;
    }
};

// ---------------------------------------------------------------------------
// suite bodies

Report suite_lemmas(const RunConfig& cfg) {
    TaskRunner tr{cfg, {}};

    tr.add("qcomb", [] {
        Report rep;
        // q-Pascal oracle against the factorial formula
        bool ok = true;
        std::string wit;
        std::vector<std::vector<Scalar>> table;
        for (int m = 0; m <= 12 && ok; ++m) {
            std::vector<Scalar> row(m + 1, Scalar(1));
            for (int n = 1; n < m; ++n)
                row[n] = table[m - 1][n - 1] + Scalar::q(n) * table[m - 1][n];
            table.push_back(row);
            for (int n = 0; n <= m && ok; ++n)
                if (q_binom(m, n) != table[m][n]) {
                    ok = false;
                    wit = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                }
        }
        rep.add("lemmas/qbinom-pascal-oracle", ok, "m,n<=12", wit);

        bool okspec = true;
        for (int m = 0; m <= 12 && okspec; ++m) {
            Rat c = 1;
            for (int n = 0; n <= m && okspec; ++n) {
                okspec = q_binom(m, n).eval(1, 1, 1) == c;
                c = c * (m - n) / (n + 1);
            }
        }
        rep.add("lemmas/qbinom-specializes-at-1", okspec, "m,n<=12");

        bool okgp = true;
        for (int n = 1; n <= 8 && okgp; ++n)
            okgp = q_binom_alpha(n) ==
                   q_binom_alpha(n - 1).subst_s_shift(-1) +
                       Scalar::q(n) * q_binom_alpha(n).subst_s_shift(-1);
        rep.add("lemmas/qbinom-alpha-pascal", okgp, "n<=8");
        return rep;
    });

    tr.add("alpha-shift", [] {
        Report rep;
        bool ok = true;
        std::string wit;
        for (int l = 1; l <= 10 && ok; ++l)
            if (!qbinom_alpha_shift_identity(l)) {
                ok = false;
                wit = "l=" + std::to_string(l);
            }
        rep.add("lemmas/qbinom-alpha-shift-identity", ok, "l=1..10", wit);
        return rep;
    });

    tr.add("log-coefficients", [&cfg] {
        Report rep;
        // computed q-expansion of log t versus the shape printed without the
        // q^{-n(n-1)/2} factor; the difference is flagged, not adopted
        QSDStructure lg(ExampleId::C_T_LOGT);
        int D = std::min(cfg.xdeg, 8);
        TS iy = hopf_expand<RatFn>(RatFn::y(), lg, D);
        bool match_true = ts_eq_up_to(iy, closed_iota_y_logt<RatFn>(D), 8);
        rep.add("lemmas/log-expansion-computed-form", match_true,
                "term-by-term to X^" + std::to_string(D));
        std::string wit;
        bool match_printed = ts_eq_up_to(
            iy, closed_iota_y_logt<RatFn>(D, false, 0, true), 8, -1, &wit);
        Check flag;
        flag.name = "lemmas/log-expansion-printed-form-flag";
        flag.params = "1/[n]_q shape without the q-power factor";
        flag.status = match_printed ? Status::fail : Status::evidence;
        flag.witness = match_printed
                           ? "printed and computed forms agree unexpectedly"
                           : "first divergence " + wit;
        rep.add(flag);
        return rep;
    });

    return tr.run();
}

Report suite_axioms(const RunConfig& cfg) {
    TaskRunner tr{cfg, {}};
    for (auto ex : selected_examples(cfg)) {
        tr.add(std::string("axioms-") + example_str(ex), [ex] {
            QSDStructure st(ex);
            return st.check_axioms(st.default_samples(), 5);
        });
    }
    tr.add("axioms-twisted-ring", [&cfg] {
        Report rep;
        std::mt19937_64 rng(cfg.seed + 17);
        const int D = cfg.xdeg, H = std::min(cfg.horizon, 10);
        auto rnd_series = [&](ExampleId ex) {
            std::uniform_int_distribution<int> small(-2, 2);
            TS r(D);
            for (int i = 0; i <= D; ++i) {
                SeqR s = SeqR::constant(RatFn(small(rng)));
                if (i % 2 == 0) s = s + SeqR::geom(small(rng), 0);
                if (i % 3 == 0)
                    s = s + SeqR::orbit(RatFn::y() / RatFn::t(), ex)
                                .scalar_mul(Scalar(small(rng)));
                r.set_coeff(i, s);
            }
            return r;
        };
        bool twist_ok = true, leib_ok = true, iter_ok = true;
        std::string wit;
        for (int rep_i = 0; rep_i < 2; ++rep_i) {
            TS x = rnd_series(ExampleId::C_T_TALPHA);
            TS y = rnd_series(ExampleId::C_T_TALPHA);
            for (int i = 1; i <= 3; ++i) {
                twist_ok = twist_ok &&
                           ts_eq_up_to(x.hat_sigma().hat_theta(i),
                                       x.hat_theta(i).hat_sigma().scalar_mul(
                                           Scalar::q(i)),
                                       H, -1, &wit);
                TS rhs(D);
                rhs = rhs.with_trusted(D - i);
                for (int l = 0; l <= i; ++l) {
                    TS term = x.hat_theta(l);
                    for (int k = 0; k < i - l; ++k) term = term.hat_sigma();
                    rhs += term * y.hat_theta(i - l);
                }
                leib_ok = leib_ok &&
                          ts_eq_up_to((x * y).hat_theta(i), rhs, H, -1, &wit);
            }
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j) {
                    TS lhs = x.hat_theta(j).hat_theta(i);
                    iter_ok = iter_ok &&
                              ts_eq_up_to(lhs,
                                          x.hat_theta(i + j)
                                              .scalar_mul(q_binom(i + j, i))
                                              .with_trusted(lhs.trusted()),
                                          H, -1, &wit);
                }
        }
        rep.add("axioms/twisted-ring/theta-sigma-twist", twist_ok, "", wit);
        rep.add("axioms/twisted-ring/theta-leibniz", leib_ok, "", wit);
        rep.add("axioms/twisted-ring/theta-iterativity", iter_ok, "", wit);
        return rep;
    });
    return tr.run();
}

Report suite_hopf_morphism(const RunConfig& cfg) {
    TaskRunner tr{cfg, {}};
    const int D = cfg.xdeg, H = cfg.horizon;

    for (auto ex : selected_examples(cfg)) {
        tr.add(std::string("hopf-morphism-") + example_str(ex), [ex, D, H] {
            Report rep;
            QSDStructure st(ex);
            std::string tag = std::string("hopf-morphism/") + example_str(ex);
            std::vector<RatFn> samples{RatFn::t(), RatFn::t().inverse()};
            if (st.has_y()) {
                samples.push_back(RatFn::y());
                samples.push_back(RatFn::y() / RatFn::t());
            } else {
                samples.push_back(RatFn::t() * RatFn::t() + RatFn(1));
            }

            bool mult_ok = true, sig_ok = true, th_ok = true;
            std::string wit;
            std::vector<TS> images;
            for (auto& a : samples) images.push_back(hopf_expand<RatFn>(a, st, D));
            for (size_t i = 0; i < samples.size(); ++i) {
                sig_ok = sig_ok &&
                         ts_eq_up_to(hopf_expand<RatFn>(st.sigma(samples[i]),
                                                        st, D),
                                     images[i].hat_sigma(), H, -1, &wit);
                for (int k = 1; k <= 4; ++k)
                    th_ok = th_ok &&
                            ts_eq_up_to(
                                hopf_expand<RatFn>(st.theta(k, samples[i]), st,
                                                   D),
                                images[i].hat_theta(k), H, -1, &wit);
                for (size_t j = 0; j < samples.size(); ++j)
                    mult_ok =
                        mult_ok &&
                        ts_eq_up_to(
                            hopf_expand<RatFn>(samples[i] * samples[j], st, D),
                            images[i] * images[j], H, -1, &wit);
            }
            rep.add(tag + "/multiplicative", mult_ok, "", wit);
            rep.add(tag + "/intertwines-sigma", sig_ok, "", wit);
            rep.add(tag + "/intertwines-theta-1-to-4", th_ok, "", wit);

            // structural closed forms
            std::string witc;
            rep.add(tag + "/iota-t-is-tQ-plus-X",
                    ts_eq_up_to(hopf_expand<RatFn>(RatFn::t(), st, D),
                                closed_iota_t<RatFn>(D), H, -1, &witc),
                    "", witc);
            if (ex == ExampleId::C_T_TALPHA) {
                TS y0y = closed_Y0<RatFn>(D).seq_mul_right(
                    SeqR::constant(RatFn::y()));
                rep.add(tag + "/iota-y-is-Y0-y",
                        ts_eq_up_to(hopf_expand<RatFn>(RatFn::y(), st, D), y0y,
                                    H, -1, &witc),
                        "", witc);
            }
            if (ex == ExampleId::C_T_LOGT) {
                TS iy = hopf_expand<RatFn>(RatFn::y(), st, D);
                rep.add(tag + "/iota-y-log-series",
                        ts_eq_up_to(iy, closed_iota_y_logt<RatFn>(D), H, -1,
                                    &witc),
                        "includes the lam*N term", witc);
                // the lam N term alone
                bool nterm =
                    seq_eq_up_to(iy.coeff(0),
                                 SeqR::constant(RatFn::y()) +
                                     seq_N<RatFn>().scalar_mul(Scalar::lam()),
                                 H);
                rep.add(tag + "/log-series-linear-term", nterm);
            }
            return rep;
        });
    }

    tr.add("taylor-expansions", [D] {
        Report rep;
        DiffStructure dy{DiffStructure::Kind::d_dy_exp};
        TS Yexp = taylor_expand(RatFn::y(), dy, D);
        rep.add("hopf-morphism/taylor/y-exp-x",
                ts_eq_up_to(Yexp, closed_y_exp_x(D), 6));
        rep.add("hopf-morphism/taylor/y-dY-dy-is-Y",
                ts_eq_up_to(Yexp.coeff_derive(Var::y).seq_mul_left(
                                SeqR::constant(RatFn::y())),
                            Yexp, 6));
        DiffStructure dl{DiffStructure::Kind::d_dt_logt};
        rep.add("hopf-morphism/taylor/t-plus-x",
                ts_eq_up_to(taylor_expand(RatFn::t(), dl, D),
                            closed_taylor_t(D), 6));
        rep.add("hopf-morphism/taylor/log-series",
                ts_eq_up_to(taylor_expand(RatFn::y(), dl, D),
                            closed_taylor_logt(D), 6));
        rep.add("hopf-morphism/taylor/multiplicative",
                ts_eq_up_to(taylor_expand(RatFn::t() * RatFn::y(), dl, D),
                            taylor_expand(RatFn::t(), dl, D) *
                                taylor_expand(RatFn::y(), dl, D),
                            6));
        return rep;
    });

    return tr.run();
}

Report suite_hopf_algebra(const RunConfig& cfg) {
    TaskRunner tr{cfg, {}};
    tr.add("hopf-algebra", [&cfg] { return hq_verify_hopf(4, 20, cfg.seed); });
    return tr.run();
}

Report suite_quantum_groups(const RunConfig& cfg) {
    TaskRunner tr{cfg, {}};
    const int NW = cfg.wdeg, ND = cfg.nildeg;
    const uint64_t seed = cfg.seed;

    for (auto ex : selected_examples(cfg)) {
        tr.add(std::string("hull-") + example_str(ex), [ex, &cfg] {
            return hull_generators(ex, std::min(cfg.xdeg, 6),
                                   std::min(cfg.horizon, 9))
                .closure;
        });
    }

    tr.add("pair-groups", [NW, ND, seed] {
        Report rep;
        std::mt19937_64 rng(seed + 5);
        std::uniform_int_distribution<int> coef(-2, 2);
        auto alg = NilAlgebra::commutative(3, ND);
        auto rnd_nil = [&] {
            NilElement x;
            for (auto& m : alg->nilpotent_basis()) {
                int c = coef(rng);
                if (c) x += NilElement::monomial(alg, m, RatFn(c));
            }
            return x;
        };
        auto rnd_series = [&](bool oneplus) {
            WSeries b(NilElement(oneplus ? 1 : 0), NW);
            for (int k = 0; k <= 2; ++k)
                b += WSeries::monomial({k, 0}, rnd_nil(), NW);
            return b;
        };

        bool unit_ok = true, inv_ok = true, assoc_ok = true, kern_ok = true;
        for (int it = 0; it < 10; ++it) {
            GIIElement x{NilElement(1) + rnd_nil(), rnd_series(true)};
            GIIElement u = gII_unit(NW);
            unit_ok = unit_ok && gII_mul(u, x).b == x.b &&
                      gII_mul(x, u).b == x.b && x.well_formed();
            GIIElement xi = gII_inverse(x);
            GIIElement p1 = gII_mul(x, xi), p2 = gII_mul(xi, x);
            inv_ok = inv_ok && p1.e == NilElement(1) &&
                     p1.b == WSeries(NilElement(1), NW) &&
                     p2.e == NilElement(1) &&
                     p2.b == WSeries(NilElement(1), NW);

            GIIIElement y{NilElement(1) + rnd_nil(), rnd_series(false)};
            GIIIElement v = gIII_unit(NW);
            unit_ok = unit_ok && gIII_mul(v, y).b == y.b &&
                      gIII_mul(y, v).b == y.b && y.well_formed();
            GIIIElement yi = gIII_inverse(y);
            inv_ok = inv_ok && gIII_mul(y, yi).b.is_zero() &&
                     gIII_mul(yi, y).b.is_zero();

            GIIElement a{NilElement(1) + rnd_nil(), rnd_series(true)};
            GIIElement b{NilElement(1) + rnd_nil(), rnd_series(true)};
            GIIElement c{NilElement(1) + rnd_nil(), rnd_series(true)};
            GIIElement l = gII_mul(gII_mul(a, b), c);
            GIIElement r = gII_mul(a, gII_mul(b, c));
            assoc_ok = assoc_ok && l.e == r.e && l.b == r.b;
            GIIIElement a3{NilElement(1) + rnd_nil(), rnd_series(false)};
            GIIIElement b3{NilElement(1) + rnd_nil(), rnd_series(false)};
            GIIIElement c3{NilElement(1) + rnd_nil(), rnd_series(false)};
            GIIIElement l3 = gIII_mul(gIII_mul(a3, b3), c3);
            GIIIElement r3 = gIII_mul(a3, gIII_mul(b3, c3));
            assoc_ok = assoc_ok && l3.e == r3.e && l3.b == r3.b;

            // kernel of the projection: multiplicative resp. additive
            WSeries k1 = rnd_series(true), k2 = rnd_series(true);
            kern_ok = kern_ok &&
                      gII_mul({NilElement(1), k1}, {NilElement(1), k2}).b ==
                          k1 * k2;
            WSeries m1 = rnd_series(false), m2 = rnd_series(false);
            kern_ok = kern_ok &&
                      gIII_mul({NilElement(1), m1}, {NilElement(1), m2}).b ==
                          m1 + m2;
            kern_ok = kern_ok && gII_mul(x, a).e == x.e * a.e &&
                      gIII_mul(y, a3).e == y.e * a3.e;
        }
        rep.add("quantum-groups/pair-groups/unit-laws", unit_ok);
        rep.add("quantum-groups/pair-groups/inverse-laws", inv_ok);
        rep.add("quantum-groups/pair-groups/associativity", assoc_ok);
        rep.add("quantum-groups/pair-groups/kernel-structure", kern_ok,
                "multiplicative resp. additive series kernels");
        return rep;
    });

    tr.add("matrix-star-groups", [NW, ND, seed] {
        Report rep;
        std::mt19937_64 rng(seed + 6);
        std::uniform_int_distribution<int> coef(-2, 2);
        // two central legs plus two q-commuting pairs
        auto alg = NilAlgebra::qplane_pairs_with_center(2, 2, ND);
        auto central = [&](int k) { return NilElement::gen(alg, k); };
        auto rnd_central_series = [&](bool oneplus) {
            WSeries b(NilElement(oneplus ? 1 : 0), NW);
            for (int k = 0; k <= 2; ++k) {
                NilElement c = central(0).mul_scalar(Scalar(coef(rng))) +
                               (central(0) * central(1))
                                   .mul_scalar(Scalar(coef(rng)));
                b += WSeries::monomial({k, 0}, c, NW);
            }
            return b;
        };
        using M = UpperMatrix2<NilElement>;
        M m1{NilElement(1) + NilElement::gen(alg, 2), NilElement::gen(alg, 3)};
        M m2{NilElement(1) + NilElement::gen(alg, 4), NilElement::gen(alg, 5)};

        bool closure_ok = true, unit_ok = true, inv_ok = true,
             constraint_ok = true, matrix_ok = true;
        for (int it = 0; it < 10; ++it) {
            QGIIIElement x{m1, rnd_central_series(false)};
            QGIIIElement y{m2, rnd_central_series(false)};
            constraint_ok = constraint_ok && x.constraint_ok() &&
                            x.hat_member() && y.constraint_ok();
            QGIIIElement p = qgIII_star(x, y);
            closure_ok = closure_ok && p.constraint_ok() && p.m == m1 * m2;
            QGIIIElement u = qgIII_unit(NW);
            unit_ok = unit_ok && qgIII_star(u, x).b == x.b &&
                      qgIII_star(x, u).b == x.b;
            QGIIIElement xi = qgIII_inverse(x);
            inv_ok = inv_ok &&
                     qgIII_compose_raw(x, xi).m == M::identity() &&
                     qgIII_compose_raw(x, xi).b.is_zero() &&
                     qgIII_compose_raw(xi, x).b.is_zero();

            QGIIElement x2{m1, rnd_central_series(true)};
            QGIIElement y2{m2, rnd_central_series(true)};
            QGIIElement p2 = qgII_star(x2, y2);
            closure_ok = closure_ok && p2.constraint_ok();
            inv_ok = inv_ok && qgII_compose_raw(x2, qgII_inverse(x2)).b ==
                                   WSeries(NilElement(1), NW);

            // matrix closure under mutual commutativity
            M w1{NilElement::gen(alg, 2), NilElement::gen(alg, 3)};
            M w2{NilElement::gen(alg, 4), NilElement::gen(alg, 5)};
            matrix_ok = matrix_ok && w1.in_hq(Scalar::q()) &&
                        (w1 * w2).in_hq(Scalar::q());
        }
        // tilde inverse with honest q-commuting entries
        UpperMatrix2<HqElement> huv{HqElement::u(), HqElement::v()};
        auto hti = huv.tilde_inverse();
        matrix_ok = matrix_ok && hti.in_hq(Scalar::q(-1)) &&
                    !hti.in_hq(Scalar::q()) &&
                    hti * huv == UpperMatrix2<HqElement>::identity() &&
                    huv * hti == UpperMatrix2<HqElement>::identity();

        rep.add("quantum-groups/star/constraint-membership", constraint_ok);
        rep.add("quantum-groups/star/closure-of-constraint", closure_ok);
        rep.add("quantum-groups/star/unit-laws", unit_ok);
        rep.add("quantum-groups/star/inverse-laws", inv_ok);
        rep.add("quantum-groups/matrix/closure-and-tilde", matrix_ok);
        return rep;
    });

    tr.add("action", [ND, seed] {
        Report rep;
        std::mt19937_64 rng(seed + 7);
        std::uniform_int_distribution<int> coef(-2, 2);
        auto alg = NilAlgebra::qplane_pairs_with_center(3, 0, ND);
        using M = UpperMatrix2<NilElement>;
        auto pair_at = [&](int p) {
            return M{NilElement(1) +
                         NilElement::gen(alg, 2 * p)
                             .mul_scalar(Scalar(1 + (int)(rng() % 3))),
                     NilElement::gen(alg, 2 * p + 1)
                         .mul_scalar(Scalar(coef(rng)))};
        };
        bool display_ok = true, assoc_ok = true, unit_ok = true;
        for (int it = 0; it < 6; ++it) {
            M phi = pair_at(0), psi = pair_at(1), psi2 = pair_at(2);
            M acted = hq_act(psi, phi);
            display_ok = display_ok && acted.e == psi.e * phi.e &&
                         acted.f == psi.e * phi.f + psi.f;
            assoc_ok = assoc_ok && hq_act(hq_act(psi2, psi), phi) ==
                                       hq_act(psi2, hq_act(psi, phi));
            unit_ok = unit_ok && hq_act(M::identity(), phi) == phi;
        }
        rep.add("quantum-groups/action/display", display_ok);
        rep.add("quantum-groups/action/associativity", assoc_ok);
        rep.add("quantum-groups/action/identity", unit_ok);
        return rep;
    });

    return tr.run();
}

Report suite_deformations(const RunConfig& cfg) {
    TaskRunner tr{cfg, {}};
    Trunc t{cfg.xdeg, cfg.horizon, cfg.wdeg};
    const int ND = cfg.nildeg;
    const uint64_t seed = cfg.seed;

    for (auto ex : selected_examples(cfg)) {
        tr.add(std::string("deformation-identity-") + example_str(ex),
               [ex, t] { return verify_deformation(identity_deformation(ex, t)); });
    }

    tr.add("deformation-parametric", [t, ND] {
        Report rep;
        auto ac = NilAlgebra::commutative(2, ND);
        NilElement e = NilElement(1) + NilElement::gen(ac, 0);
        // first example, one-parameter direction
        {
            Deformation d =
                build_deformation(ExampleId::C_T, t, e, NilElement());
            Report r = verify_deformation(d);
            rep.merge(r);
        }
        // second example with a series direction
        {
            Trunc ts = t;
            ts.xdeg = std::min(t.xdeg, 5);
            WSeries b = WSeries(NilElement(1) + NilElement::gen(ac, 0), t.wdeg) +
                        WSeries::monomial({1, 0}, NilElement::gen(ac, 1),
                                          t.wdeg);
            Deformation d = build_deformation(ExampleId::C_T_TALPHA, ts, e,
                                              NilElement(), b);
            rep.merge(verify_deformation(d));
            // the parameter tuple lands in the completed matrix-pair set
            QGIIElement memb{{d.e, d.f}, *d.b};
            rep.add("deformation/c_t_talpha/tuple-in-hat-qgII",
                    memb.hat_member());
        }
        // third example with an additive series direction
        {
            Trunc ts = t;
            ts.xdeg = std::min(t.xdeg, 5);
            WSeries b = WSeries::monomial({1, 0}, NilElement::gen(ac, 1),
                                          t.wdeg);
            Deformation d = build_deformation(ExampleId::C_T_LOGT, ts, e,
                                              NilElement(), b);
            rep.merge(verify_deformation(d));
            QGIIIElement memb{{d.e, d.f}, *d.b};
            rep.add("deformation/c_t_logt/tuple-in-hat-qgIII",
                    memb.hat_member());
        }
        return rep;
    });

    tr.add("deformation-shift-mechanism", [t, ND] {
        Report rep;
        // the residual of the plane relation is exactly (ef - qfe) Q^2, and a
        // nonzero shift therefore cannot satisfy it over either carrier
        auto ac = NilAlgebra::commutative(2, ND);
        auto aq = NilAlgebra::qplane(ND);
        bool resid_ok = true, fails_ok = true;
        for (auto alg : {ac, aq}) {
            Deformation d = build_deformation(
                ExampleId::C_T, t, NilElement(1) + NilElement::gen(alg, 0),
                NilElement::gen(alg, 1));
            resid_ok = resid_ok && residual_matches_parameter_form(d);
            Report r = verify_deformation(d);
            for (auto& c : r.checks)
                if (c.name.find("plane-relation") != std::string::npos)
                    fails_ok = fails_ok && c.status == Status::fail;
        }
        rep.add("deformation/residual-is-ef-minus-qfe", resid_ok);
        rep.add("deformation/nonzero-shift-breaks-relation", fails_ok,
                "(1-q) e f mechanism over the commutative carrier");
        // only the image X + f Q satisfies the shift eigenvalue equation
        // among the candidate forms X + f and f X + Q
        auto alg = ac;
        NilElement f = NilElement::gen(alg, 1);
        const int D = t.xdeg;
        TSW xf = TSW::x(D) + TSW::from_seq(SeqW::constant(WSeries(f, t.wdeg)), D);
        bool variant1 = !ts_eq_up_to(xf.hat_sigma(),
                                     xf.scalar_mul(Scalar::q()), 6);
        TSW fxq = TSW::x(D).seq_mul_right(SeqW::constant(WSeries(f, t.wdeg))) +
                  TSW::from_seq(seq_Q<WSeries>(), D);
        bool variant2 = !ts_eq_up_to(fxq.hat_theta(1), TSW::one(D), 6);
        rep.add("deformation/x-image-variant-resolution", variant1 && variant2,
                "X + f and f X + Q fail the operator profile; X + f Q holds");
        return rep;
    });

    tr.add("classification", [t, ND] {
        Report rep;
        for (auto alg :
             {NilAlgebra::commutative(2, ND), NilAlgebra::qplane(ND)}) {
            Trunc tc = t;
            tc.xdeg = std::min(t.xdeg, 5);
            tc.horizon = std::min(t.horizon, 8);
            SolutionSet sol = classify_deformations(alg, tc);
            rep.merge(sol.evidence);
            std::string tag = alg->swap_factor(0, 1).is_one()
                                  ? "classify/comm"
                                  : "classify/qplane";
            rep.add(tag + "/one-free-direction-per-image",
                    sol.operator_nullity_x == 1 && sol.operator_nullity_q == 1);
            rep.add(tag + "/shift-part-zero", sol.shift_part_forced_zero);
            bool roundtrip = true;
            for (size_t k = 0; k < sol.basis_solutions.size();
                 k += std::max<size_t>(1, sol.basis_solutions.size() / 2))
                roundtrip = roundtrip &&
                            verify_deformation(sol.basis_solutions[k])
                                .all_passed();
            rep.add(tag + "/solutions-verify", roundtrip);
        }
        // exhaustive small-instance search: nothing outside the family
        {
            Trunc small{4, 6, 3};
            SolutionSet sol =
                classify_deformations(NilAlgebra::qplane(3), small);
            rep.add("classify/exhaustive-small-no-extra-solutions",
                    sol.operator_nullity_x == 1 &&
                        sol.operator_nullity_q == 1 &&
                        sol.shift_part_forced_zero,
                    "full coefficient space, slotwise linear solve");
        }
        return rep;
    });

    tr.add("taylor-diff-families", [ND] {
        Report rep;
        auto a1 = NilAlgebra::commutative(1, std::min(ND, 3));
        TaylorSolutionSet sol = taylor_example_deformations(a1, 5, 3);
        rep.merge(sol.evidence);
        rep.add("classify/taylor-multiplier-family",
                sol.operator_nullity == 1);
        rep.merge(ex3_differential_report(
            NilAlgebra::commutative(2, std::min(ND, 4)), 5, 3));
        return rep;
    });

    tr.add("biconditional", [t, ND, seed] {
        Report rep;
        std::mt19937_64 rng(seed + 9);
        std::uniform_int_distribution<int> coef(-2, 2);
        auto aq = NilAlgebra::qplane(ND);
        Trunc tb = t;
        tb.xdeg = std::min(t.xdeg, 8);
        // coefficients depend on the index through invertible geometric
        // factors only, so a short horizon loses no information here
        tb.horizon = std::min(t.horizon, 4);
        int equal_count = 0, checked = 0;
        bool violating_seen = false, all_equivalent = true;
        for (int it = 0; it < 10; ++it) {
            NilElement e = NilElement(1) +
                           NilElement::gen(aq, 0).mul_scalar(Scalar(coef(rng)));
            NilElement f = NilElement::gen(aq, 0).mul_scalar(
                Scalar(coef(rng)));  // commutes with e
            WSeries b(NilElement(coef(rng)), tb.wdeg);
            if (it % 3 == 2) {
                // violating instance: coefficient from the other generator
                b += WSeries::monomial({1, 0}, NilElement::gen(aq, 1), tb.wdeg);
            } else {
                b += WSeries::monomial(
                    {1, 0}, NilElement::gen(aq, 0).mul_scalar(Scalar(coef(rng))),
                    tb.wdeg);
            }
            auto r = commutation_biconditional(e, f, b, tb);
            ++checked;
            all_equivalent = all_equivalent && r.equivalent();
            if (!r.parameter_commutes) violating_seen = true;
            if (r.parameter_commutes) ++equal_count;
        }
        rep.add("deformation/commutation-biconditional", all_equivalent,
                std::to_string(checked) + " instances");
        rep.add("deformation/biconditional-violating-instance",
                violating_seen, "both sides fail together");
        return rep;
    });

    tr.add("series-closed-form", [t, ND, seed] {
        Report rep;
        std::mt19937_64 rng(seed + 11);
        std::uniform_int_distribution<int> coef(-2, 2);
        auto ac = NilAlgebra::commutative(2, ND);
        bool ok = true;
        for (int it = 0; it < 3 && ok; ++it) {
            NilElement e = NilElement(1) +
                           NilElement::gen(ac, 0).mul_scalar(Scalar(coef(rng)));
            WSeries b0 = WSeries(NilElement(1) + NilElement::gen(ac, 1), t.wdeg);
            Trunc tc = t;
            tc.xdeg = std::min(t.xdeg, 6);
            ok = series_recurrence_matches_closed_form(e, NilElement(), b0, tc);
        }
        rep.add("deformation/series-recurrence-equals-closed-form", ok);
        return rep;
    });

    tr.add("composition-oracle", [t, ND, seed] {
        Report rep;
        Trunc tc = t;
        tc.xdeg = std::min(t.xdeg, 4);
        tc.horizon = std::min(t.horizon, 6);
        auto ac = NilAlgebra::commutative(2, std::min(ND, 4));
        rep.merge(composition_oracle_report(ExampleId::C_T_TALPHA, tc, ac, 5,
                                            seed + 13));
        rep.merge(composition_oracle_report(ExampleId::C_T_LOGT, tc, ac, 5,
                                            seed + 14));
        return rep;
    });

    return tr.run();
}

}  // namespace

void RunConfig::validate() const {
    if (example != "all" && example != "c_t" && example != "c_t_talpha" &&
        example != "c_t_logt")
        throw config_error("unknown example: " + example);
    if (xdeg < 2) throw config_error("xdeg must be >= 2");
    if (horizon < xdeg) throw config_error("horizon must be >= xdeg");
    if (wdeg < 2) throw config_error("wdeg must be >= 2");
    if (nildeg < 2) throw config_error("nildeg must be >= 2");
    if (qmode != "symbolic" && qmode != "numeric")
        throw config_error("qmode must be symbolic or numeric");
    if (format != "text" && format != "json")
        throw config_error("format must be text or json");
    if (qmode == "numeric") {
        if (q_num == 0 || q_num == 1 || q_num == -1)
            throw config_error("numeric q must avoid 0, 1, -1");
        if (s_num == 0 || lam_num == 0)
            throw config_error("numeric s and lam must be nonzero");
    }
}

Report run_suite(const RunConfig& cfg, const std::string& suite) {
    cfg.validate();
    if (suite == "axioms") return suite_axioms(cfg);
    if (suite == "hopf-morphism") return suite_hopf_morphism(cfg);
    if (suite == "hopf-algebra") return suite_hopf_algebra(cfg);
    if (suite == "quantum-groups") return suite_quantum_groups(cfg);
    if (suite == "deformations") return suite_deformations(cfg);
    if (suite == "lemmas") return suite_lemmas(cfg);
    if (suite == "all") {
        Report rep;
        for (const char* s : {"lemmas", "axioms", "hopf-morphism",
                              "hopf-algebra", "quantum-groups", "deformations"})
            rep.merge(run_suite(cfg, s));
        std::stable_sort(
            rep.checks.begin(), rep.checks.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
        return rep;
    }
    throw config_error("unknown suite: " + suite);
}

Report run_classify(const RunConfig& cfg, const std::string& algebra) {
    cfg.validate();
    Report rep;
    Trunc t{std::min(cfg.xdeg, 5), std::min(cfg.horizon, 8), cfg.wdeg};
    if (algebra == "comm" || algebra == "qplane") {
        auto alg = algebra == "comm" ? NilAlgebra::commutative(2, cfg.nildeg)
                                     : NilAlgebra::qplane(cfg.nildeg);
        SolutionSet sol = classify_deformations(alg, t);
        rep.merge(sol.evidence);
        Check c;
        c.name = "classify/" + algebra + "/family";
        c.status = Status::pass;
        c.params = algebra == "comm" ? "family {e}, f = 0"
                                     : "family {(e,f): f e = q e f}, exact "
                                       "solutions have f = 0";
        c.witness = sol.description;
        rep.add(c);
    } else if (algebra == "taylor-diff") {
        auto alg = NilAlgebra::commutative(1, std::min(cfg.nildeg, 3));
        TaylorSolutionSet sol = taylor_example_deformations(alg, 5, 3);
        rep.merge(sol.evidence);
        rep.merge(ex3_differential_report(
            NilAlgebra::commutative(2, std::min(cfg.nildeg, 4)), 5, 3));
        Check c;
        c.name = "classify/taylor-diff/family";
        c.status = Status::pass;
        c.params = "families {c : c - 1 nilpotent} and {(a, b) nilpotent}";
        c.witness = sol.description;
        rep.add(c);
    } else {
        throw config_error("unknown algebra: " + algebra);
    }
    return rep;
}

std::string render_text(const RunConfig& cfg, const Report& rep) {
    std::ostringstream os;
    os << "config: example=" << cfg.example << " xdeg=" << cfg.xdeg
       << " horizon=" << cfg.horizon << " wdeg=" << cfg.wdeg
       << " nildeg=" << cfg.nildeg << " seed=" << cfg.seed
       << " qmode=" << cfg.qmode << "\n";
    for (auto& c : rep.checks) {
        os << "[" << status_str(c.status) << "] " << c.name;
        if (!c.params.empty()) os << " (" << c.params << ")";
        os << " [" << c.elapsed_ms << " ms]";
        if (!c.witness.empty()) os << "\n    witness: " << c.witness;
        os << "\n";
    }
    os << "summary: passed=" << rep.passed() << " failed=" << rep.failed()
       << " evidence=" << rep.evidence() << "\n";
    return os.str();
}

std::string render_json(const RunConfig& cfg, const Report& rep) {
    json j;
    j["config"] = {{"example", cfg.example}, {"xdeg", cfg.xdeg},
                   {"horizon", cfg.horizon}, {"wdeg", cfg.wdeg},
                   {"nildeg", cfg.nildeg},   {"seed", cfg.seed},
                   {"qmode", cfg.qmode},     {"format", cfg.format}};
    if (cfg.qmode == "numeric") {
        j["config"]["q_num"] = cfg.q_num.get_str();
        j["config"]["s_num"] = cfg.s_num.get_str();
        j["config"]["lam_num"] = cfg.lam_num.get_str();
    }
    j["checks"] = json::array();
    for (auto& c : rep.checks) {
        json cj = {{"name", c.name},
                   {"params", c.params},
                   {"status", status_str(c.status)},
                   {"witness", c.witness},
                   {"elapsed_ms", c.elapsed_ms}};
        j["checks"].push_back(cj);
    }
    j["summary"] = {{"passed", rep.passed()},
                    {"failed", rep.failed()},
                    {"evidence", rep.evidence()}};
    return j.dump(2);
}

Report parse_json_checks(const std::string& json_text) {
    json j = json::parse(json_text);
    Report rep;
    for (auto& cj : j.at("checks")) {
        Check c;
        c.name = cj.at("name").get<std::string>();
        c.params = cj.at("params").get<std::string>();
        std::string st = cj.at("status").get<std::string>();
        c.status = st == "pass" ? Status::pass
                                : (st == "fail" ? Status::fail
                                                : Status::evidence);
        c.witness = cj.at("witness").get<std::string>();
        c.elapsed_ms = cj.at("elapsed_ms").get<double>();
        rep.add(c);
    }
    return rep;
}

}  // namespace qsig
