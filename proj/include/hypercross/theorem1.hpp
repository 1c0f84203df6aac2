#pragma once

#include <array>
#include <string>
#include <vector>

#include "hypercross/ordertype_db.hpp"

namespace hypercross {

// A 2-coloring of eight points with four of each color; bit i colors
// point i and a set bit means red.
struct Coloring {
    std::array<int, 8> bits{};

    std::string str() const;
    int ones(const std::vector<int>& subset) const;
};

// All 70 balanced colorings in lexicographic order of their bit strings.
const std::vector<Coloring>& balanced_colorings();

// The line-separable 2- and 4-subsets of an 8-point set. Only the
// lexicographically first 35 of the 70 4-subsets are listed (those
// containing index 0), so each unordered 4-4 split appears once.
struct FeasibleSets {
    std::vector<std::vector<int>> two_sets;
    std::vector<std::vector<int>> four_sets;
};

FeasibleSets feasible_sets(const std::vector<Point>& pts);
FeasibleSets feasible_sets(const OrderTypeEntry& entry);

// Separable 2-subsets with one point of each color plus separable
// 4-subsets with two of each.
int balanced_count(const FeasibleSets& fs, const Coloring& c);

// A single-colored separable 4-set (or complement) marks a pairing that
// cannot arise as an affine Gale diagram; reported, never filtered on.
bool has_monochromatic_feasible_4set(const FeasibleSets& fs, const Coloring& c);

struct ColoringTally {
    std::vector<int> per_coloring;       // indexed like balanced_colorings()
    int max_count = 0;
    std::vector<std::string> argmax;     // coloring strings achieving max_count
};

ColoringTally tally_colorings(const FeasibleSets& fs);

struct Theorem1Report {
    int global_max = 0;
    int crossing_bound = 0;              // global_max + 1
    std::vector<int> argmax_entries;     // 1-based entry indices reaching global_max
    std::vector<ColoringTally> tallies;  // per entry, in database order
    std::vector<FeasibleSets> feasible;  // per entry, in database order
    long long monochromatic_pairs = 0;   // informational (entry, coloring) flags
};

// The full sweep: per entry, classify all 63 candidate subsets as
// separable or not, tally the 70 colorings, and take the global maximum.
Theorem1Report verify_theorem1(const std::vector<OrderTypeEntry>& entries,
                               unsigned workers = 0);

// Appendix-compatible artifacts.
std::string entry_csv(const OrderTypeEntry& entry, const FeasibleSets& fs);
std::string summary_line(const OrderTypeEntry& entry, const ColoringTally& tally);

}  // namespace hypercross
