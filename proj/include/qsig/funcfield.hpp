#ifndef QSIG_FUNCFIELD_HPP
#define QSIG_FUNCFIELD_HPP

#include <vector>

#include "qsig/ratfn.hpp"
#include "qsig/report.hpp"

namespace qsig {

// The three base fields carrying a q-skew structure: K(t) with sigma(t)=qt,
// K(t,y) with sigma(y)=s*y (y standing for t^alpha), and K(t,y) with
// sigma(y)=y+lam (y standing for log t).
enum class ExampleId { C_T, C_T_TALPHA, C_T_LOGT };

const char* example_str(ExampleId id);

// Endomorphism sigma together with the iterated skew derivations
// theta^{(n)} = theta^{(1)}^n / [n]_q!, theta^{(1)} = (sigma - id)/((q-1) t).
class QSDStructure {
  public:
    explicit QSDStructure(ExampleId id) : id_(id) {}

    ExampleId id() const { return id_; }
    bool has_y() const { return id_ != ExampleId::C_T; }

    RatFn sigma(const RatFn& f) const;
    RatFn sigma_pow(const RatFn& f, int n) const;
    RatFn theta1(const RatFn& f) const;
    RatFn theta(int n, const RatFn& f) const;
    static RatFn derive(const RatFn& f, int var) { return f.derive(var); }

    // default sample pool used by the axiom campaigns
    std::vector<RatFn> default_samples() const;

    // Checks the four defining axioms on all pairs from `samples`,
    // for indices up to `depth`.
    Report check_axioms(const std::vector<RatFn>& samples, int depth) const;

  private:
    ExampleId id_;
};

// Plain differential structure (sigma = id, q = 1 limit) used by the
// universal Taylor expansions; delta is a derivation of K(t,y).
struct DiffStructure {
    enum class Kind {
        d_dt_logt,  // on K(t, y) with y = log t: delta(t)=1, delta(y)=1/t
        d_dy_exp,   // on K(y) with delta(y) = y
    };
    Kind kind;

    RatFn delta(const RatFn& f) const;
};

}  // namespace qsig

#endif
