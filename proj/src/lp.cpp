#include "hypercross/lp.hpp"

#include <stdexcept>

namespace hypercross::lp {

namespace {

// Dense simplex tableau for  maximize c.x, A x = b, x >= 0  with an
// explicit basis. Rows 0..m-1 hold the constraints, row m the reduced
// objective (cost row stores -z so that a positive entry means "improves").
struct Tableau {
    int m, n;
    Mat t;                   // (m+1) x (n+1), last column is the RHS
    std::vector<int> basis;  // column index of the basic variable per row

    Tableau(const Mat& A, const Vec& b, int total_cols)
        : m(static_cast<int>(A.size())), n(total_cols),
          t(m + 1, Vec(total_cols + 1, Rat(0))), basis(m, -1) {
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < static_cast<int>(A[i].size()); ++j) t[i][j] = A[i][j];
            t[i][n] = b[i];
        }
    }

    void pivot(int row, int col) {
        const Rat inv = 1 / t[row][col];
        for (int j = 0; j <= n; ++j) t[row][j] *= inv;
        for (int i = 0; i <= m; ++i) {
            if (i == row || t[i][col] == 0) continue;
            const Rat f = t[i][col];
            for (int j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    // Bland's rule: entering = lowest-index column with positive reduced
    // cost; leaving = lowest-index basic variable among the minimum ratios.
    Status iterate() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n; ++j) {
                if (t[m][j] > 0) { enter = j; break; }
            }
            if (enter == -1) return Status::optimal;

            int leave = -1;
            Rat best_ratio = 0;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                const Rat ratio = t[i][n] / t[i][enter];
                if (leave == -1 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == -1) return Status::unbounded;
            pivot(leave, enter);
        }
    }

    void set_objective(const Vec& c) {
        for (int j = 0; j < n; ++j) t[m][j] = j < static_cast<int>(c.size()) ? c[j] : Rat(0);
        t[m][n] = 0;
        // Restore the reduced form: zero out the basic columns.
        for (int i = 0; i < m; ++i) {
            const int col = basis[i];
            if (t[m][col] == 0) continue;
            const Rat f = t[m][col];
            for (int j = 0; j <= n; ++j) t[m][j] -= f * t[i][j];
        }
    }

    Rat objective_value() const { return -t[m][n]; }

    Vec solution() const {
        Vec x(n, Rat(0));
        for (int i = 0; i < m; ++i) x[basis[i]] = t[i][n];
        return x;
    }
};

}  // namespace

Result solve_standard(const Mat& A, const Vec& b, const Vec& c) {
    const int m = static_cast<int>(A.size());
    const int n = m > 0 ? static_cast<int>(A[0].size()) : static_cast<int>(c.size());
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("lp: b size mismatch");
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("lp: c size mismatch");

    // Phase one: artificial variable per row, minimize their sum.
    Tableau tab(A, b, n + m);
    for (int i = 0; i < m; ++i) {
        if (tab.t[i][tab.n] < 0) {
            for (int j = 0; j <= tab.n; ++j) tab.t[i][j] = -tab.t[i][j];
        }
        tab.t[i][n + i] = 1;
        tab.basis[i] = n + i;
    }
    Vec phase1(n + m, Rat(0));
    for (int i = 0; i < m; ++i) phase1[n + i] = -1;  // maximize -(sum of artificials)
    tab.set_objective(phase1);
    if (tab.iterate() != Status::optimal)
        throw std::logic_error("lp: phase one cannot be unbounded");
    if (tab.objective_value() != 0) return {Status::infeasible, 0, {}};

    // Drive any artificial still in the basis out of it (degenerate rows).
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (tab.t[i][j] != 0) { col = j; break; }
        }
        if (col >= 0) tab.pivot(i, col);
        // else: the row is all zeros over the real columns (redundant
        // constraint); the artificial stays basic at value zero.
    }
    // Forbid artificials from re-entering.
    for (int i = 0; i <= m; ++i)
        for (int j = n; j < tab.n; ++j) tab.t[i][j] = 0;

    // Phase two.
    tab.set_objective(c);
    const Status st = tab.iterate();
    if (st == Status::unbounded) return {Status::unbounded, 0, {}};
    Vec x = tab.solution();
    x.resize(n);
    return {Status::optimal, tab.objective_value(), std::move(x)};
}

void Model::add_constraint(Vec coeffs, Rel rel, Rat rhs) {
    if (static_cast<int>(coeffs.size()) != num_vars_)
        throw std::invalid_argument("lp: constraint arity mismatch");
    rows_.push_back(std::move(coeffs));
    rels_.push_back(rel);
    rhs_.push_back(std::move(rhs));
}

Result Model::maximize(const Vec& objective) const {
    if (static_cast<int>(objective.size()) != num_vars_)
        throw std::invalid_argument("lp: objective arity mismatch");

    const int m = static_cast<int>(rows_.size());
    int slacks = 0;
    for (Rel r : rels_)
        if (r != Rel::eq) ++slacks;

    // Columns: x+ (num_vars), x- (num_vars), then one slack per inequality.
    const int n = 2 * num_vars_ + slacks;
    Mat A(m, Vec(n, Rat(0)));
    int slack = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < num_vars_; ++j) {
            A[i][j] = rows_[i][j];
            A[i][num_vars_ + j] = -rows_[i][j];
        }
        if (rels_[i] == Rel::le) A[i][2 * num_vars_ + slack++] = 1;
        else if (rels_[i] == Rel::ge) A[i][2 * num_vars_ + slack++] = -1;
    }

    Vec c(n, Rat(0));
    for (int j = 0; j < num_vars_; ++j) {
        c[j] = objective[j];
        c[num_vars_ + j] = -objective[j];
    }

    Result r = solve_standard(A, rhs_, c);
    if (r.status == Status::optimal) {
        Vec x(num_vars_);
        for (int j = 0; j < num_vars_; ++j) x[j] = r.x[j] - r.x[num_vars_ + j];
        r.x = std::move(x);
    }
    return r;
}

bool Model::feasible() const {
    return maximize(Vec(num_vars_, Rat(0))).feasible();
}

}  // namespace hypercross::lp
