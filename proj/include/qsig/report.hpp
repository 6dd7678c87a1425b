#ifndef QSIG_REPORT_HPP
#define QSIG_REPORT_HPP

#include <string>
#include <vector>

namespace qsig {

enum class Status { pass, fail, evidence };

inline const char* status_str(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "evidence";
    }
}

struct Check {
    std::string name;
    std::string params;
    Status status = Status::pass;
    std::string witness;  // required when status == fail
    double elapsed_ms = 0.0;
};

struct Report {
    std::vector<Check> checks;

    void add(Check c) { checks.push_back(std::move(c)); }
    void add(const std::string& name, bool ok, const std::string& params = "",
             const std::string& witness = "") {
        checks.push_back({name, params, ok ? Status::pass : Status::fail,
                          ok ? "" : witness, 0.0});
    }
    void merge(const Report& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
    int failed() const {
        int n = 0;
        for (auto& c : checks)
            if (c.status == Status::fail) ++n;
        return n;
    }
    int passed() const {
        int n = 0;
        for (auto& c : checks)
            if (c.status == Status::pass) ++n;
        return n;
    }
    int evidence() const {
        int n = 0;
        for (auto& c : checks)
            if (c.status == Status::evidence) ++n;
        return n;
    }
    bool all_passed() const { return failed() == 0; }
};

}  // namespace qsig

#endif
