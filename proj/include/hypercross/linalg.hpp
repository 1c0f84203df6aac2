#pragma once

#include <vector>

#include "hypercross/rational.hpp"

namespace hypercross {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major, rectangular

// In-place reduced row echelon form. Partial pivoting by largest absolute
// value (ties broken by lowest row index) keeps the elimination
// deterministic; with exact rationals the pivot choice only affects speed.
// Returns the pivot column indices in order.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Basis of the right null space {x : m x = 0}, one vector per free column.
// Each basis vector has one coordinate fixed to 1 at its free column.
std::vector<Vec> null_space(const Mat& m);

// Sign of det(m) for square m, in {-1, 0, +1}.
int det_sign(Mat m);

}  // namespace hypercross
