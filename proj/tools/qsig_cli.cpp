// Verification CLI; talks to the library through the C interface only.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "qsig.h"

namespace {

struct Options {
    std::string example = "all";
    int xdeg = 8, horizon = 12, wdeg = 4, nildeg = 4;
    int64_t seed = 0;
    std::string qmode = "symbolic";
    std::string q_num = "2", s_num = "3", lam_num = "5";
    std::string format = "text";
    std::string suite = "all";
    std::string algebra = "comm";
};

void add_common(CLI::App* app, Options& o) {
    app->add_option("--example", o.example,
                    "c_t, c_t_talpha, c_t_logt or all");
    app->add_option("--xdeg", o.xdeg, "X-adic truncation order");
    app->add_option("--horizon", o.horizon, "sequence evaluation horizon");
    app->add_option("--wdeg", o.wdeg, "W-adic truncation order");
    app->add_option("--nildeg", o.nildeg, "nilpotency order of test algebras");
    app->add_option("--seed", o.seed, "seed for randomized sampling");
    app->add_option("--qmode", o.qmode, "symbolic or numeric");
    app->add_option("--q-num", o.q_num, "rational value of q in numeric mode");
    app->add_option("--s-num", o.s_num, "rational value of s in numeric mode");
    app->add_option("--lam-num", o.lam_num,
                    "rational value of lam in numeric mode");
    app->add_option("--format", o.format, "text or json");
}

int configure(qsig_config* cfg, const Options& o) {
    if (qsig_config_set_str(cfg, "example", o.example.c_str()) ||
        qsig_config_set_int(cfg, "xdeg", o.xdeg) ||
        qsig_config_set_int(cfg, "horizon", o.horizon) ||
        qsig_config_set_int(cfg, "wdeg", o.wdeg) ||
        qsig_config_set_int(cfg, "nildeg", o.nildeg) ||
        qsig_config_set_int(cfg, "seed", o.seed) ||
        qsig_config_set_str(cfg, "qmode", o.qmode.c_str()) ||
        qsig_config_set_rational(cfg, "q-num", o.q_num.c_str()) ||
        qsig_config_set_rational(cfg, "s-num", o.s_num.c_str()) ||
        qsig_config_set_rational(cfg, "lam-num", o.lam_num.c_str()) ||
        qsig_config_set_str(cfg, "format", o.format.c_str())) {
        std::fprintf(stderr, "config error: %s\n", qsig_last_error());
        return 2;
    }
    return 0;
}

int finish(qsig_report* rep, const Options& o) {
    char* text = nullptr;
    if (qsig_report_render(rep, o.format.c_str(), &text) != QSIG_OK) {
        std::fprintf(stderr, "render error: %s\n", qsig_last_error());
        qsig_report_free(rep);
        return 2;
    }
    std::fputs(text, stdout);
    qsig_string_free(text);
    int passed = 0, failed = 0, evidence = 0;
    qsig_report_counts(rep, &passed, &failed, &evidence);
    qsig_report_free(rep);
    return failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of q-skew iterative sigma-differential "
                 "identities, expansions and deformation families"};
    app.require_subcommand(1);

    Options vo, co;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, vo);
    verify->add_option(
        "--suite", vo.suite,
        "axioms, hopf-morphism, hopf-algebra, quantum-groups, deformations, "
        "lemmas or all");

    CLI::App* classify =
        app.add_subcommand("classify", "classify deformation families");
    add_common(classify, co);
    classify->add_option("--algebra", co.algebra,
                         "comm, qplane or taylor-diff");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    qsig_config* cfg = qsig_config_new();
    int rc = 0;
    qsig_report* rep = nullptr;
    if (verify->parsed()) {
        rc = configure(cfg, vo);
        if (rc == 0 &&
            qsig_run_verify(cfg, vo.suite.c_str(), &rep) != QSIG_OK) {
            std::fprintf(stderr, "error: %s\n", qsig_last_error());
            rc = 2;
        }
        if (rc == 0) rc = finish(rep, vo);
    } else {
        rc = configure(cfg, co);
        if (rc == 0 &&
            qsig_run_classify(cfg, co.algebra.c_str(), &rep) != QSIG_OK) {
            std::fprintf(stderr, "error: %s\n", qsig_last_error());
            rc = 2;
        }
        if (rc == 0) rc = finish(rep, co);
    }
    qsig_config_free(cfg);
    return rc;
}
