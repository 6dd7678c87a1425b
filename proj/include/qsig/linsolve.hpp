#ifndef QSIG_LINSOLVE_HPP
#define QSIG_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "qsig/scalar.hpp"

namespace qsig {

// Dense exact linear system over a field (Scalar or RatFn): returns a
// particular solution and a nullspace basis, or nothing when inconsistent.
template <class F>
struct LinSolution {
    std::vector<F> particular;
    std::vector<std::vector<F>> nullspace;
};

template <class F>
class LinearSystem {
  public:
    explicit LinearSystem(int ncols) : ncols_(ncols) {}

    void add_row(std::vector<F> row, F rhs) {
        if ((int)row.size() != ncols_) throw error("LinearSystem: bad row");
        rows_.push_back(std::move(row));
        rhs_.push_back(std::move(rhs));
    }

    int ncols() const { return ncols_; }
    int nrows() const { return (int)rows_.size(); }

    std::optional<LinSolution<F>> solve() const {
        auto a = rows_;
        auto b = rhs_;
        int m = (int)a.size(), n = ncols_;
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < n && r < m; ++c) {
            int sel = -1;
            for (int i = r; i < m; ++i)
                if (!a[i][c].is_zero()) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            std::swap(a[sel], a[r]);
            std::swap(b[sel], b[r]);
            F inv = a[r][c].inverse();
            for (int j = c; j < n; ++j) a[r][j] = a[r][j] * inv;
            b[r] = b[r] * inv;
            for (int i = 0; i < m; ++i) {
                if (i == r || a[i][c].is_zero()) continue;
                F factor = a[i][c];
                for (int j = c; j < n; ++j)
                    a[i][j] = a[i][j] - factor * a[r][j];
                b[i] = b[i] - factor * b[r];
            }
            pivot_col.push_back(c);
            ++r;
        }
        for (int i = r; i < m; ++i)
            if (!b[i].is_zero()) return std::nullopt;

        LinSolution<F> sol;
        sol.particular.assign(n, F(0));
        std::vector<bool> is_pivot(n, false);
        for (int i = 0; i < r; ++i) {
            is_pivot[pivot_col[i]] = true;
            sol.particular[pivot_col[i]] = b[i];
        }
        for (int c = 0; c < n; ++c) {
            if (is_pivot[c]) continue;
            std::vector<F> v(n, F(0));
            v[c] = F(1);
            for (int i = 0; i < r; ++i) v[pivot_col[i]] = -a[i][c];
            sol.nullspace.push_back(std::move(v));
        }
        return sol;
    }

  private:
    int ncols_;
    std::vector<std::vector<F>> rows_;
    std::vector<F> rhs_;
};

}  // namespace qsig

#endif
