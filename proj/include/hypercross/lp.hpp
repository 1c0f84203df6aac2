#pragma once

#include <vector>

#include "hypercross/linalg.hpp"

namespace hypercross::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    Rat objective = 0;
    Vec x;  // empty unless optimal

    bool feasible() const { return status != Status::infeasible; }
};

// maximize c.x  subject to  A x = b, x >= 0.
//
// Two-phase primal simplex over exact rationals. Pivot selection follows
// Bland's rule (lowest-index entering and leaving variable), which rules
// out cycling; exactness makes the usual numeric tolerances unnecessary.
Result solve_standard(const Mat& A, const Vec& b, const Vec& c);

enum class Rel { le, eq, ge };

// Row-by-row model with free variables, translated to standard form by
// splitting each variable into a positive and a negative part and adding
// slack variables for inequalities.
class Model {
public:
    explicit Model(int num_vars) : num_vars_(num_vars) {}

    void add_constraint(Vec coeffs, Rel rel, Rat rhs);
    Result maximize(const Vec& objective) const;

    // Phase-one only: is the constraint system satisfiable?
    bool feasible() const;

private:
    int num_vars_;
    std::vector<Vec> rows_;
    std::vector<Rel> rels_;
    Vec rhs_;
};

}  // namespace hypercross::lp
