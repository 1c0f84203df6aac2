#pragma once

#include <vector>

#include "hypercross/geometry.hpp"

namespace hypercross {

// A Gale transform of n points in R^d: n vectors in R^{n-d-1} that sum to
// zero and span. Linear separations of the vectors biject with crossing
// pairs of complementary simplices of the source points, which turns
// crossing counting into sign counting.
struct VectorConfiguration {
    int dim = 0;
    std::vector<Vec> vectors;

    VectorConfiguration() = default;
    VectorConfiguration(int k, std::vector<Vec> v);

    int size() const { return static_cast<int>(vectors.size()); }
};

enum class Color { red, blue };

struct AffineGaleDiagram {
    std::vector<Point> points;  // 2D
    std::vector<Color> colors;
};

// Null-space construction: stack the coordinates over a row of ones to get
// the (d+1) x n matrix M(A); the Gale vectors are the columns of a basis
// of its null space. Requires full-dimensional affine hull.
VectorConfiguration gale_transform(const PointConfiguration& cfg);

// Zero-sum and spanning check (the two properties that make a vector
// configuration a Gale transform of some point set).
bool validate_gale(const VectorConfiguration& vc);

// A direction w with w.g != 0 for all eight vectors and exactly four
// positive products. Searched over the cone-edge candidates g_i x g_j,
// perturbed tangentially with symbolic infinitesimals; the first hit in
// index order is returned, so the choice is deterministic.
Vec balanced_split_direction(const VectorConfiguration& vc);

// Central projection onto the plane {x : w.x = 1} in fixed rational plane
// coordinates; a vector projecting along its own direction is red, one
// projecting through the origin is blue.
AffineGaleDiagram affine_gale_diagram(const VectorConfiguration& vc, const Vec& w);

// Number of unordered half-half partitions of the vectors that a
// hyperplane through the origin separates strictly. Decided per partition
// by exact homogeneous-LP feasibility.
long long count_proper_linear_separations(const VectorConfiguration& vc);

// Crossing pairs of the two complementary (d-1)-simplices over all
// half-half vertex splits of 2d points in general position in R^d,
// counted through the Gale bijection.
long long count_crossing_pairs(const PointConfiguration& cfg);

}  // namespace hypercross
