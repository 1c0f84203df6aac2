#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "hypercross/linalg.hpp"

namespace hypercross {

struct Point {
    std::vector<Rat> coords;

    Point() = default;
    explicit Point(std::vector<Rat> c) : coords(std::move(c)) {}
    Point(std::initializer_list<Rat> c) : coords(c) {}

    int dim() const { return static_cast<int>(coords.size()); }
    const Rat& operator[](int i) const { return coords[i]; }
    Rat& operator[](int i) { return coords[i]; }
    bool operator==(const Point& o) const { return coords == o.coords; }
};

// Convenience builders for integer-coordinate points.
Point point2(long long x, long long y);
Point point_of(const std::vector<long long>& c);

// An ordered sequence of points of equal dimension. Order matters: Gale
// transforms and order types are sequence dependent.
struct PointConfiguration {
    int dim = 0;
    std::vector<Point> points;

    PointConfiguration() = default;
    PointConfiguration(int d, std::vector<Point> pts);

    int size() const { return static_cast<int>(points.size()); }
};

// Orientation of d+1 points in R^d: the sign of det of the (d+1)x(d+1)
// matrix whose columns are the points with an appended row of ones.
// Zero exactly when the points are affinely dependent.
int orient(const std::vector<Point>& pts);

// Fast path used by everything planar.
int orient2d(const Point& a, const Point& b, const Point& c);

// True when no d+1 of the points lie on a common hyperplane. Vacuously
// true for n <= d.
bool is_general_position(const PointConfiguration& cfg);

// Indices of the convex hull in counterclockwise order. Requires no three
// collinear input points (throws otherwise). Handles 1- and 2-point hulls.
std::vector<int> convex_hull_2d(const std::vector<Point>& pts);

// Is there an open half-plane containing X with Y in the opposite open
// half-plane? Decided exactly via convex hull disjointness, which under
// general position (no three collinear in X u Y) coincides with strict
// separability. X and Y must be disjoint 2D point sets.
bool separable_2d(const std::vector<Point>& X, const std::vector<Point>& Y);

// LP route to the same question in any dimension: is there a hyperplane
// w.x = c with w.x >= c+1 on X and w.x <= c-1 on Y after scaling?
bool strictly_separable(const std::vector<Point>& X, const std::vector<Point>& Y);

struct InteriorWitness {
    std::vector<Rat> lambda;  // convex coefficients over A, all > 0
    std::vector<Rat> mu;      // convex coefficients over B, all > 0
};

// Do the relative interiors of Conv(A) and Conv(B) share a point?
// A and B are disjoint d-sets in R^d whose union is in general position.
// Decided by the exact LP: maximize t subject to
//   sum lambda_i a_i = sum mu_j b_j, sum lambda = sum mu = 1,
//   lambda_i >= t, mu_j >= t;
// the interiors intersect exactly when the optimum is positive.
bool strict_interior_intersect(const std::vector<Point>& A, const std::vector<Point>& B);

// Same decision, returning the convex-combination witness when it exists.
std::optional<InteriorWitness> strict_interior_witness(const std::vector<Point>& A,
                                                       const std::vector<Point>& B);

}  // namespace hypercross
