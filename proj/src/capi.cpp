#include "qsig.h"

#include <cstring>
#include <string>

#include "qsig/verify.hpp"

using namespace qsig;

struct qsig_config {
    RunConfig cfg;
};

struct qsig_report {
    RunConfig cfg;
    Report rep;
};

namespace {

thread_local std::string g_last_error;

qsig_status fail(qsig_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <class F>
qsig_status guarded(F&& f) {
    try {
        return f();
    } catch (const config_error& e) {
        return fail(QSIG_ERR_CONFIG, e.what());
    } catch (const std::exception& e) {
        return fail(QSIG_ERR_RUNTIME, e.what());
    }
}

bool parse_rat(const char* text, Rat& out) {
    try {
        out = Rat(text);
        out.canonicalize();
        return true;
    } catch (...) {
        return false;
    }
}

}  // namespace

extern "C" {

const char* qsig_last_error(void) { return g_last_error.c_str(); }

qsig_config* qsig_config_new(void) { return new qsig_config(); }

void qsig_config_free(qsig_config* cfg) { delete cfg; }

qsig_status qsig_config_set_int(qsig_config* cfg, const char* key,
                                int64_t value) {
    if (!cfg || !key) return fail(QSIG_ERR_INVALID_ARGUMENT, "null argument");
    std::string k = key;
    if (k == "xdeg")
        cfg->cfg.xdeg = (int)value;
    else if (k == "horizon")
        cfg->cfg.horizon = (int)value;
    else if (k == "wdeg")
        cfg->cfg.wdeg = (int)value;
    else if (k == "nildeg")
        cfg->cfg.nildeg = (int)value;
    else if (k == "seed")
        cfg->cfg.seed = (uint64_t)value;
    else
        return fail(QSIG_ERR_INVALID_ARGUMENT, "unknown integer key: " + k);
    return QSIG_OK;
}

qsig_status qsig_config_set_str(qsig_config* cfg, const char* key,
                                const char* value) {
    if (!cfg || !key || !value)
        return fail(QSIG_ERR_INVALID_ARGUMENT, "null argument");
    std::string k = key;
    if (k == "example")
        cfg->cfg.example = value;
    else if (k == "qmode")
        cfg->cfg.qmode = value;
    else if (k == "format")
        cfg->cfg.format = value;
    else
        return fail(QSIG_ERR_INVALID_ARGUMENT, "unknown string key: " + k);
    return QSIG_OK;
}

qsig_status qsig_config_set_rational(qsig_config* cfg, const char* key,
                                     const char* value) {
    if (!cfg || !key || !value)
        return fail(QSIG_ERR_INVALID_ARGUMENT, "null argument");
    Rat r;
    if (!parse_rat(value, r))
        return fail(QSIG_ERR_INVALID_ARGUMENT,
                    std::string("bad rational literal: ") + value);
    std::string k = key;
    if (k == "q-num")
        cfg->cfg.q_num = r;
    else if (k == "s-num")
        cfg->cfg.s_num = r;
    else if (k == "lam-num")
        cfg->cfg.lam_num = r;
    else
        return fail(QSIG_ERR_INVALID_ARGUMENT, "unknown rational key: " + k);
    return QSIG_OK;
}

qsig_status qsig_run_verify(const qsig_config* cfg, const char* suite,
                            qsig_report** out) {
    if (!cfg || !suite || !out)
        return fail(QSIG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto* rep = new qsig_report{cfg->cfg, run_suite(cfg->cfg, suite)};
        *out = rep;
        return QSIG_OK;
    });
}

qsig_status qsig_run_classify(const qsig_config* cfg, const char* algebra,
                              qsig_report** out) {
    if (!cfg || !algebra || !out)
        return fail(QSIG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto* rep = new qsig_report{cfg->cfg, run_classify(cfg->cfg, algebra)};
        *out = rep;
        return QSIG_OK;
    });
}

void qsig_report_free(qsig_report* rep) { delete rep; }

qsig_status qsig_report_counts(const qsig_report* rep, int* passed,
                               int* failed, int* evidence) {
    if (!rep) return fail(QSIG_ERR_INVALID_ARGUMENT, "null report");
    if (passed) *passed = rep->rep.passed();
    if (failed) *failed = rep->rep.failed();
    if (evidence) *evidence = rep->rep.evidence();
    return QSIG_OK;
}

qsig_status qsig_report_render(const qsig_report* rep, const char* format,
                               char** out) {
    if (!rep || !format || !out)
        return fail(QSIG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::string text = std::string(format) == "json"
                               ? render_json(rep->cfg, rep->rep)
                               : render_text(rep->cfg, rep->rep);
        *out = new char[text.size() + 1];
        std::memcpy(*out, text.c_str(), text.size() + 1);
        return QSIG_OK;
    });
}

void qsig_string_free(char* s) { delete[] s; }

size_t qsig_report_size(const qsig_report* rep) {
    return rep ? rep->rep.checks.size() : 0;
}

const char* qsig_report_check_name(const qsig_report* rep, size_t index) {
    if (!rep || index >= rep->rep.checks.size()) return nullptr;
    return rep->rep.checks[index].name.c_str();
}

const char* qsig_report_check_status(const qsig_report* rep, size_t index) {
    if (!rep || index >= rep->rep.checks.size()) return nullptr;
    return status_str(rep->rep.checks[index].status);
}

}  // extern "C"
