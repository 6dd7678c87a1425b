#include <doctest.h>

#include "qsig/verify.hpp"

using namespace qsig;

TEST_CASE("config validation") {
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.example = "c_x";
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg.example = "c_t";
    cfg.horizon = 3;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg.horizon = 12;
    cfg.qmode = "numeric";
    cfg.q_num = Rat(1);
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg.q_num = Rat(3, 2);
    CHECK_NOTHROW(cfg.validate());
    CHECK_THROWS_AS(run_suite(cfg, "no-such-suite"), config_error);
    CHECK_THROWS_AS(run_classify(cfg, "no-such-algebra"), config_error);
}

TEST_CASE("json report round trip") {
    RunConfig cfg;
    cfg.xdeg = 4;
    cfg.horizon = 8;
    Report rep = run_suite(cfg, "lemmas");
    std::string js = render_json(cfg, rep);
    Report back = parse_json_checks(js);
    REQUIRE(back.checks.size() == rep.checks.size());
    for (size_t i = 0; i < rep.checks.size(); ++i) {
        CHECK(back.checks[i].name == rep.checks[i].name);
        CHECK(back.checks[i].params == rep.checks[i].params);
        CHECK(back.checks[i].status == rep.checks[i].status);
        CHECK(back.checks[i].witness == rep.checks[i].witness);
        CHECK(back.checks[i].elapsed_ms ==
              doctest::Approx(rep.checks[i].elapsed_ms));
    }
}

TEST_CASE("deterministic given seed and config") {
    RunConfig cfg;
    cfg.xdeg = 4;
    cfg.horizon = 8;
    cfg.seed = 7;
    Report a = run_suite(cfg, "hopf-algebra");
    Report b = run_suite(cfg, "hopf-algebra");
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].status == b.checks[i].status);
        CHECK(a.checks[i].witness == b.checks[i].witness);
    }
}

TEST_CASE("numeric smoke mode") {
    RunConfig cfg;
    cfg.qmode = "numeric";
    cfg.q_num = Rat(2);
    cfg.s_num = Rat(3);
    cfg.lam_num = Rat(5);
    cfg.xdeg = 4;
    cfg.horizon = 8;
    Report rep = run_suite(cfg, "axioms");
    CHECK(rep.failed() == 0);
    CHECK(rep.passed() > 0);
}

TEST_CASE("classify entry points") {
    RunConfig cfg;
    cfg.xdeg = 4;
    cfg.horizon = 6;
    cfg.nildeg = 3;
    for (auto alg : {"comm", "qplane", "taylor-diff"}) {
        Report rep = run_classify(cfg, alg);
        INFO(alg);
        CHECK(rep.failed() == 0);
    }
}
