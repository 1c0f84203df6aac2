#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypercross/geometry.hpp"
#include "hypercross/hypergraph.hpp"

namespace hypercross {

// Vertices placed on the curve (t, t^2, ..., t^d); only the relative order
// of the integer parameters matters for crossings.
struct MomentCurveDrawing {
    int uniformity = 0;
    std::vector<long long> params;  // params[v] = t_v, pairwise distinct

    MomentCurveDrawing() = default;
    MomentCurveDrawing(int d, std::vector<long long> t);
};

struct CrossingReport {
    long long total = 0;
    std::optional<std::vector<std::pair<int, int>>> witnesses;  // edge index pairs
};

// The exact lifted point (t, t^2, ..., t^d).
Point moment_point(int dim, long long t);

// Do the (d-1)-simplices spanned by two disjoint d-sets of curve points
// cross? Merged in parameter order, the two labels must change at least
// d+1 times, i.e. the merged sequence splits into >= d+2 maximal runs
// (equivalently, an alternating chain of d+2 vertices exists).
bool alternation_cross(std::vector<long long> A, std::vector<long long> B);

// Crossing pairs of a hypergraph drawn on the moment curve.
CrossingReport count_crossings(const Hypergraph& h, const MomentCurveDrawing& drawing,
                               bool want_witnesses = false);

// Crossing pairs of K_{2d}^d drawn on the moment curve, closed form.
long long cm_formula(int d);

// Same number by enumerating all C(2d, d)/2 bipartitions of {1..2d}.
long long cm_bruteforce(int d);

// The approximation constant c_m^d / C(2d-1, d-1), in lowest terms.
Rat ctilde(int d);

// The part-major parameter order that maximizes crossings of the complete
// balanced d-partite hypergraph: all of part 1 first, then part 2, ...
MomentCurveDrawing theorem2_drawing(int d, int n);

// (2^{d-1} - 1) * C(n, 2)^d, the maximum crossing count it attains.
long long theorem2_value(int d, int n);

// Maximum rectilinear crossing number of K_n^d for the settled dimensions:
// 3 C(n,6) for d=3 and 13 C(n,8) for d=4. Other d are rejected; callers
// wanting the conjectured extrapolation must opt in via conjectured_max.
Int knd_max_value(int n, int d);
Int conjectured_max(int n, int d);

// Drawing file: header "d n", then n lines "vertex_index t_value".
MomentCurveDrawing parse_moment_drawing(std::istream& in);
std::string serialize_moment_drawing(const MomentCurveDrawing& d);

}  // namespace hypercross
