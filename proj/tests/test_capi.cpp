#include <doctest.h>

#include <cstring>
#include <string>

#include "qsig.h"

TEST_CASE("config lifecycle and errors") {
    qsig_config* cfg = qsig_config_new();
    REQUIRE(cfg != nullptr);
    CHECK(qsig_config_set_int(cfg, "xdeg", 4) == QSIG_OK);
    CHECK(qsig_config_set_int(cfg, "horizon", 8) == QSIG_OK);
    CHECK(qsig_config_set_int(cfg, "bogus", 1) == QSIG_ERR_INVALID_ARGUMENT);
    CHECK(std::string(qsig_last_error()).find("bogus") != std::string::npos);
    CHECK(qsig_config_set_str(cfg, "example", "c_t") == QSIG_OK);
    CHECK(qsig_config_set_rational(cfg, "q-num", "3/2") == QSIG_OK);
    CHECK(qsig_config_set_rational(cfg, "q-num", "not-a-number") ==
          QSIG_ERR_INVALID_ARGUMENT);

    // config errors surface as QSIG_ERR_CONFIG at run time
    qsig_report* rep = nullptr;
    CHECK(qsig_config_set_int(cfg, "horizon", 1) == QSIG_OK);
    CHECK(qsig_run_verify(cfg, "lemmas", &rep) == QSIG_ERR_CONFIG);
    CHECK(qsig_config_set_int(cfg, "horizon", 8) == QSIG_OK);
    CHECK(qsig_run_verify(cfg, "no-such-suite", &rep) == QSIG_ERR_CONFIG);
    qsig_config_free(cfg);
}

TEST_CASE("run a suite through the C surface") {
    qsig_config* cfg = qsig_config_new();
    qsig_config_set_int(cfg, "xdeg", 4);
    qsig_config_set_int(cfg, "horizon", 8);
    qsig_report* rep = nullptr;
    REQUIRE(qsig_run_verify(cfg, "lemmas", &rep) == QSIG_OK);
    REQUIRE(rep != nullptr);

    int passed = 0, failed = 0, evidence = 0;
    CHECK(qsig_report_counts(rep, &passed, &failed, &evidence) == QSIG_OK);
    CHECK(passed > 0);
    CHECK(failed == 0);
    CHECK(evidence >= 1);  // the printed-form flag

    size_t n = qsig_report_size(rep);
    REQUIRE(n == (size_t)(passed + failed + evidence));
    bool saw_pascal = false;
    for (size_t i = 0; i < n; ++i) {
        std::string name = qsig_report_check_name(rep, i);
        std::string st = qsig_report_check_status(rep, i);
        if (name.find("pascal-oracle") != std::string::npos &&
            st == "pass")
            saw_pascal = true;
    }
    CHECK(saw_pascal);
    CHECK(qsig_report_check_name(rep, n) == nullptr);

    char* text = nullptr;
    REQUIRE(qsig_report_render(rep, "json", &text) == QSIG_OK);
    CHECK(std::strstr(text, "\"summary\"") != nullptr);
    CHECK(std::strstr(text, "\"checks\"") != nullptr);
    qsig_string_free(text);

    qsig_report_free(rep);
    qsig_config_free(cfg);
}

TEST_CASE("classify through the C surface") {
    qsig_config* cfg = qsig_config_new();
    qsig_config_set_int(cfg, "xdeg", 4);
    qsig_config_set_int(cfg, "horizon", 6);
    qsig_config_set_int(cfg, "nildeg", 3);
    qsig_report* rep = nullptr;
    REQUIRE(qsig_run_classify(cfg, "comm", &rep) == QSIG_OK);
    int passed = 0, failed = 0, evidence = 0;
    qsig_report_counts(rep, &passed, &failed, &evidence);
    CHECK(failed == 0);
    qsig_report_free(rep);
    qsig_config_free(cfg);
}
