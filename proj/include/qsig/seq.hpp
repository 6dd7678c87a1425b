#ifndef QSIG_SEQ_HPP
#define QSIG_SEQ_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "qsig/funcfield.hpp"
#include "qsig/wseries.hpp"

namespace qsig {

// coefficient-ring derivation directions
enum class Var { t = 0, y = 1, W1 = 2, W2 = 3 };

template <class R>
struct SeqTraits;

template <>
struct SeqTraits<RatFn> {
    static RatFn one() { return RatFn(1); }
    static RatFn embed(const RatFn& f, int /*wdeg*/, bool /*shifted*/) {
        return f;
    }
    static RatFn scalar_mul(const RatFn& x, const Scalar& c) {
        return c * x;
    }
    static RatFn derive(const RatFn& x, Var v) {
        if (v == Var::t || v == Var::y) return x.derive(static_cast<int>(v));
        return RatFn();
    }
    static RatFn inverse(const RatFn& x) { return x.inverse(); }
    static std::string str(const RatFn& x) { return x.str(); }
};

template <>
struct SeqTraits<WSeries> {
    static WSeries one() { return WSeries(1); }
    static WSeries embed(const RatFn& f, int wdeg, bool shifted) {
        return shifted ? WSeries::taylor_shift(f, wdeg) : WSeries(f, wdeg);
    }
    static WSeries scalar_mul(const WSeries& x, const Scalar& c) {
        return x.mul_scalar(c);
    }
    static WSeries derive(const WSeries& x, Var v) {
        return x.derive(static_cast<int>(v));
    }
    static WSeries inverse(const WSeries& x) { return x.inverse(); }
    static std::string str(const WSeries& x) { return x.str(); }
};

// Element of the shift ring F(N, R): an expression tree over the closed-form
// rules, evaluated pointwise. Equality is horizon-bounded. The shift acts
// symbolically on every rule, so no precision is lost by shifting.
template <class R>
class Seq {
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    enum class Kind { Const, Geom, LinN, Orbit, Sum, Prod, SMul, Inv, Neg, Tab };

    struct Node {
        Kind kind;
        R value{};                    // Const
        int gm = 0, gk = 0;           // Geom: n -> q^{gm n} s^{gk n}
        RatFn orb;                    // Orbit seed
        ExampleId ex = ExampleId::C_T;
        bool shifted = false;         // Orbit: coefficients Taylor-shifted
        int wdeg = 0;                 // Orbit embedding truncation
        NodePtr a, b;
        Scalar scal;                  // SMul
        std::vector<R> tab;           // Tab

        mutable std::mutex mu;
        mutable std::vector<RatFn> orbit_chain;  // sigma-iterates of orb
        mutable std::map<int, R> eval_memo;
        mutable NodePtr shift_memo;
    };

  public:
    Seq() : node_(make(Kind::Const)) {}  // zero

    static Seq constant(R v) {
        auto n = make(Kind::Const);
        n->value = std::move(v);
        return Seq(std::move(n));
    }
    static Seq zero() { return constant(SeqTraits<R>::scalar_mul(SeqTraits<R>::one(), Scalar(0))); }
    static Seq one() { return constant(SeqTraits<R>::one()); }
    // n -> q^{m n} s^{k n}
    static Seq geom(int m, int k = 0) {
        auto n = make(Kind::Geom);
        n->gm = m;
        n->gk = k;
        return Seq(std::move(n));
    }
    static Seq linear_n() { return Seq(make(Kind::LinN)); }
    // n -> sigma^n(b), embedded into R (Taylor-shifted when requested)
    static Seq orbit(const RatFn& b, ExampleId ex, bool shifted = false,
                     int wdeg = 0) {
        auto n = make(Kind::Orbit);
        n->orb = b;
        n->ex = ex;
        n->shifted = shifted;
        n->wdeg = wdeg;
        n->orbit_chain.push_back(b);
        return Seq(std::move(n));
    }
    static Seq tabulated(std::vector<R> vals) {
        auto n = make(Kind::Tab);
        n->tab = std::move(vals);
        return Seq(std::move(n));
    }

    Seq operator+(const Seq& o) const { return binary(Kind::Sum, *this, o); }
    Seq operator*(const Seq& o) const { return binary(Kind::Prod, *this, o); }
    Seq operator-() const {
        auto n = make(Kind::Neg);
        n->a = node_;
        return Seq(std::move(n));
    }
    Seq operator-(const Seq& o) const { return *this + (-o); }
    Seq scalar_mul(const Scalar& c) const {
        auto n = make(Kind::SMul);
        n->a = node_;
        n->scal = c;
        return Seq(std::move(n));
    }
    Seq inverse() const {
        auto n = make(Kind::Inv);
        n->a = node_;
        return Seq(std::move(n));
    }

    R eval(int idx) const { return eval_ptr(node_, idx); }

    Seq shift() const {
        {
            std::lock_guard<std::mutex> lock(node_->mu);
            if (node_->shift_memo) return Seq(node_->shift_memo);
        }
        NodePtr s = shift_node(node_);
        std::lock_guard<std::mutex> lock(node_->mu);
        node_->shift_memo = s;
        return Seq(std::move(s));
    }
    Seq shift(int k) const {
        Seq r = *this;
        for (int i = 0; i < k; ++i) r = r.shift();
        return r;
    }

    Seq derive(Var v) const { return Seq(derive_node(node_, v)); }

    std::string str() const { return str_node(*node_); }

  private:
    explicit Seq(NodePtr n) : node_(std::move(n)) {}

    static std::shared_ptr<Node> make(Kind k) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        return n;
    }

    static Seq binary(Kind k, const Seq& x, const Seq& y) {
        auto n = make(k);
        n->a = x.node_;
        n->b = y.node_;
        return Seq(std::move(n));
    }

    static R eval_ptr(const NodePtr& p, int idx) {
        {
            std::lock_guard<std::mutex> lock(p->mu);
            auto it = p->eval_memo.find(idx);
            if (it != p->eval_memo.end()) return it->second;
        }
        R v = eval_node(*p, idx);
        std::lock_guard<std::mutex> lock(p->mu);
        p->eval_memo.emplace(idx, v);
        return v;
    }

    static R eval_node(const Node& n, int idx) {
        switch (n.kind) {
            case Kind::Const:
                return n.value;
            case Kind::Geom:
                return SeqTraits<R>::scalar_mul(
                    SeqTraits<R>::one(),
                    Scalar::q(n.gm * idx) * Scalar::s(n.gk * idx));
            case Kind::LinN:
                return SeqTraits<R>::scalar_mul(SeqTraits<R>::one(),
                                                Scalar(idx));
            case Kind::Orbit: {
                RatFn v;
                {
                    std::lock_guard<std::mutex> lock(n.mu);
                    QSDStructure st(n.ex);
                    while ((int)n.orbit_chain.size() <= idx)
                        n.orbit_chain.push_back(st.sigma(n.orbit_chain.back()));
                    v = n.orbit_chain[idx];
                }
                return SeqTraits<R>::embed(v, n.wdeg, n.shifted);
            }
            case Kind::Sum:
                return eval_ptr(n.a, idx) + eval_ptr(n.b, idx);
            case Kind::Prod:
                return eval_ptr(n.a, idx) * eval_ptr(n.b, idx);
            case Kind::SMul:
                return SeqTraits<R>::scalar_mul(eval_ptr(n.a, idx), n.scal);
            case Kind::Inv:
                return SeqTraits<R>::inverse(eval_ptr(n.a, idx));
            case Kind::Neg:
                return SeqTraits<R>::scalar_mul(eval_ptr(n.a, idx),
                                                Scalar(-1));
            case Kind::Tab:
                if (idx >= (int)n.tab.size())
                    throw error("Seq: horizon exceeded on tabulated rule");
                return n.tab[idx];
        }
        throw error("Seq: bad node");
    }

    static NodePtr shift_node(const NodePtr& p) {
        const Node& n = *p;
        switch (n.kind) {
            case Kind::Const:
                return p;
            case Kind::Geom: {
                auto r = make(Kind::SMul);
                r->a = p;
                r->scal = Scalar::q(n.gm) * Scalar::s(n.gk);
                return r;
            }
            case Kind::LinN: {
                auto sum = make(Kind::Sum);
                sum->a = p;
                auto one = make(Kind::Const);
                one->value = SeqTraits<R>::one();
                sum->b = one;
                return sum;
            }
            case Kind::Orbit: {
                QSDStructure st(n.ex);
                auto r = make(Kind::Orbit);
                r->orb = st.sigma(n.orb);
                r->ex = n.ex;
                r->shifted = n.shifted;
                r->wdeg = n.wdeg;
                r->orbit_chain.push_back(r->orb);
                return r;
            }
            case Kind::Sum:
            case Kind::Prod: {
                auto r = make(n.kind);
                r->a = shift_node(n.a);
                r->b = shift_node(n.b);
                return r;
            }
            case Kind::SMul: {
                auto r = make(Kind::SMul);
                r->a = shift_node(n.a);
                r->scal = n.scal;
                return r;
            }
            case Kind::Inv:
            case Kind::Neg: {
                auto r = make(n.kind);
                r->a = shift_node(n.a);
                return r;
            }
            case Kind::Tab: {
                if (n.tab.empty())
                    throw error("Seq: cannot shift empty tabulation");
                auto r = make(Kind::Tab);
                r->tab.assign(n.tab.begin() + 1, n.tab.end());
                return r;
            }
        }
        throw error("Seq: bad node");
    }

    static NodePtr derive_node(const NodePtr& p, Var v) {
        const Node& n = *p;
        switch (n.kind) {
            case Kind::Const: {
                auto r = make(Kind::Const);
                r->value = SeqTraits<R>::derive(n.value, v);
                return r;
            }
            case Kind::Geom:
            case Kind::LinN: {
                auto r = make(Kind::Const);
                r->value = SeqTraits<R>::scalar_mul(SeqTraits<R>::one(),
                                                    Scalar(0));
                return r;
            }
            case Kind::Orbit: {
                // d/dt sigma^n = q^n sigma^n d/dt; the y-direction twists by
                // s^n for the t^alpha structure and not at all otherwise.
                // On shifted orbits W1/W2 act as t/y.
                Var base = v;
                if (n.shifted) {
                    if (v == Var::W1) base = Var::t;
                    if (v == Var::W2) base = Var::y;
                } else if (v == Var::W1 || v == Var::W2) {
                    auto z = make(Kind::Const);
                    z->value = SeqTraits<R>::scalar_mul(SeqTraits<R>::one(),
                                                        Scalar(0));
                    return z;
                }
                RatFn db = n.orb.derive(static_cast<int>(base));
                auto core = make(Kind::Orbit);
                core->orb = db;
                core->ex = n.ex;
                core->shifted = n.shifted;
                core->wdeg = n.wdeg;
                core->orbit_chain.push_back(db);
                int gm = 0, gk = 0;
                if (base == Var::t) gm = 1;
                if (base == Var::y && n.ex == ExampleId::C_T_TALPHA) gk = 1;
                if (gm == 0 && gk == 0) return core;
                auto fac = make(Kind::Geom);
                fac->gm = gm;
                fac->gk = gk;
                auto r = make(Kind::Prod);
                r->a = fac;
                r->b = core;
                return r;
            }
            case Kind::Sum: {
                auto r = make(Kind::Sum);
                r->a = derive_node(n.a, v);
                r->b = derive_node(n.b, v);
                return r;
            }
            case Kind::Prod: {
                // (ab)' = a'b + ab'
                auto l = make(Kind::Prod);
                l->a = derive_node(n.a, v);
                l->b = n.b;
                auto rr = make(Kind::Prod);
                rr->a = n.a;
                rr->b = derive_node(n.b, v);
                auto sum = make(Kind::Sum);
                sum->a = l;
                sum->b = rr;
                return sum;
            }
            case Kind::SMul: {
                auto r = make(Kind::SMul);
                r->a = derive_node(n.a, v);
                r->scal = n.scal;
                return r;
            }
            case Kind::Inv: {
                // (x^{-1})' = -x^{-1} x' x^{-1}
                auto inv = p;
                auto m1 = make(Kind::Prod);
                m1->a = inv;
                m1->b = derive_node(n.a, v);
                auto m2 = make(Kind::Prod);
                m2->a = m1;
                m2->b = inv;
                auto r = make(Kind::Neg);
                r->a = m2;
                return r;
            }
            case Kind::Neg: {
                auto r = make(Kind::Neg);
                r->a = derive_node(n.a, v);
                return r;
            }
            case Kind::Tab: {
                auto r = make(Kind::Tab);
                for (auto& x : n.tab)
                    r->tab.push_back(SeqTraits<R>::derive(x, v));
                return r;
            }
        }
        throw error("Seq: bad node");
    }

    static std::string str_node(const Node& n) {
        switch (n.kind) {
            case Kind::Const:
                return SeqTraits<R>::str(n.value);
            case Kind::Geom: {
                std::string s = "geom(";
                return s + std::to_string(n.gm) + "," + std::to_string(n.gk) +
                       ")";
            }
            case Kind::LinN:
                return "n";
            case Kind::Orbit:
                return std::string("orbit(") + n.orb.str() + ")";
            case Kind::Sum:
                return "(" + str_node(*n.a) + " + " + str_node(*n.b) + ")";
            case Kind::Prod:
                return "(" + str_node(*n.a) + ")*(" + str_node(*n.b) + ")";
            case Kind::SMul:
                return "(" + n.scal.str() + ")*(" + str_node(*n.a) + ")";
            case Kind::Inv:
                return "(" + str_node(*n.a) + ")^-1";
            case Kind::Neg:
                return "-(" + str_node(*n.a) + ")";
            case Kind::Tab:
                return "tab[" + std::to_string(n.tab.size()) + "]";
        }
        return "?";
    }

    NodePtr node_;
};

template <class R>
bool seq_eq_up_to(const Seq<R>& x, const Seq<R>& y, int h,
                  int* witness = nullptr) {
    for (int n = 0; n <= h; ++n) {
        if (!(x.eval(n) == y.eval(n))) {
            if (witness) *witness = n;
            return false;
        }
    }
    return true;
}

}  // namespace qsig

#endif
