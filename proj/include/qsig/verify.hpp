#ifndef QSIG_VERIFY_HPP
#define QSIG_VERIFY_HPP

#include "qsig/report.hpp"
#include "qsig/scalar.hpp"

namespace qsig {

struct config_error : error {
    using error::error;
};

struct RunConfig {
    std::string example = "all";  // c_t | c_t_talpha | c_t_logt | all
    int xdeg = 8;
    int horizon = 12;
    int wdeg = 4;
    int nildeg = 4;
    uint64_t seed = 0;
    std::string qmode = "symbolic";  // symbolic | numeric
    Rat q_num = Rat(2), s_num = Rat(3), lam_num = Rat(5);
    std::string format = "text";  // text | json

    void validate() const;
};

// suites: axioms, hopf-morphism, hopf-algebra, quantum-groups, deformations,
// lemmas, all
Report run_suite(const RunConfig& cfg, const std::string& suite);

// algebra: comm | qplane | taylor-diff
Report run_classify(const RunConfig& cfg, const std::string& algebra);

std::string render_text(const RunConfig& cfg, const Report& rep);
std::string render_json(const RunConfig& cfg, const Report& rep);

// parses the `checks` array back; used by the round-trip guarantee
Report parse_json_checks(const std::string& json_text);

}  // namespace qsig

#endif
