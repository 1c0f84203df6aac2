#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hypercross/geometry.hpp"
#include "hypercross/hypergraph.hpp"
#include "hypercross/moment_curve.hpp"

namespace hypercross {

// An arbitrary rectilinear drawing: vertex v sits at positions[v] in R^d.
// General position is checked once at construction.
struct GeometricDrawing {
    int uniformity = 0;
    std::vector<Point> positions;

    GeometricDrawing() = default;
    GeometricDrawing(int d, std::vector<Point> pos);
};

// Ground-truth crossing count: one exact strict-interior LP per
// vertex-disjoint edge pair.
CrossingReport count_crossings_geometric(const Hypergraph& h, const GeometricDrawing& drawing,
                                         bool want_witnesses = false);

// n integer points sampled uniformly from [0, bound)^d, rejecting any
// point that lands a (d+1)-subset on a common hyperplane. Deterministic
// for a fixed seed.
GeometricDrawing random_general_position(int n, int d, std::uint64_t seed, long long bound);

// Drawing file: header "d n", then n lines "vertex_index r_1 ... r_d"
// with each coordinate "num/den" or a plain integer.
GeometricDrawing parse_geometric_drawing(std::istream& in);
std::string serialize_geometric_drawing(const GeometricDrawing& d);

}  // namespace hypercross
