#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercross {

using Edge = std::vector<int>;  // sorted, distinct vertex indices

// A d-uniform hypergraph on vertices [0, n). Immutable after construction.
struct Hypergraph {
    int uniformity = 0;
    int vertex_count = 0;
    std::vector<Edge> edges;

    Hypergraph() = default;
    Hypergraph(int d, int n, std::vector<Edge> e);

    bool operator==(const Hypergraph&) const = default;
};

struct PartitionedHypergraph {
    Hypergraph base;
    std::vector<std::vector<int>> parts;  // d disjoint classes covering [0, n)
};

// The complete d-uniform hypergraph K_n^d with all C(n, d) edges in
// lexicographic order.
Hypergraph complete(int n, int d);

// The complete balanced d-partite d-uniform hypergraph with n vertices per
// part and all n^d cross edges. Part i owns vertices [i*n, (i+1)*n).
PartitionedHypergraph complete_dpartite(int d, int n);

// Number of unordered pairs of vertex-disjoint hyperedges.
long long disjoint_pairs(const Hypergraph& h);

// All vertex-disjoint edge index pairs, in lexicographic order.
std::vector<std::pair<int, int>> disjoint_pair_list(const Hypergraph& h);

// Star augmentation: adds one apex vertex and t = C(|E|, 2) + 1 pairwise
// apex-sharing hyperedges on fresh vertices. The star edges can never
// cross one another, which makes the base's crossings dominate any count.
struct GadgetResult {
    Hypergraph gadget;
    long long t = 0;
    int apex = -1;
    std::vector<Edge> star_edges;
};

GadgetResult build_gadget(const Hypergraph& h);

// Text format: header "d n m", then m lines of d strictly increasing
// 0-based vertex indices. Lines starting with '#' are comments.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
std::string serialize_hypergraph(const Hypergraph& h);

}  // namespace hypercross
