#pragma once

#include <cstdint>
#include <vector>

#include "hypercross/hypergraph.hpp"
#include "hypercross/moment_curve.hpp"

namespace hypercross {

// Monte Carlo summary for random moment-curve drawings of a hypergraph.
// Every statistic is an exact rational; sampling error is the only error.
struct MonteCarloReport {
    int uniformity = 0;
    long long trials = 0;
    long long F = 0;        // vertex-disjoint hyperedge pairs
    Rat mean;               // exact average of the per-trial counts
    Rat sample_variance;    // unbiased (divides by trials - 1; zero for one trial)
    Rat expected;           // ctilde(d) * F
    std::vector<long long> counts;  // per-trial crossing counts, in trial order
    long long best_count = 0;
    long long best_trial = -1;
    std::uint64_t seed = 0;
};

// A uniformly random bijection of the vertices onto parameters {1..n},
// drawn by Fisher-Yates from the seed's stream.
MomentCurveDrawing random_moment_drawing(const Hypergraph& h, std::uint64_t seed);

// `trials` independent drawings (trial k uses the stream Rng(seed).fork(k)),
// each counted exactly.
MonteCarloReport monte_carlo(const Hypergraph& h, long long trials, std::uint64_t seed,
                             unsigned workers = 0);

struct GuaranteeWitness {
    bool attained = false;
    long long threshold = 0;  // ceil(ctilde(d) * F)
    long long best_count = 0;
    long long best_trial = -1;
    std::vector<long long> permutation_params;  // the witnessing drawing
};

// Does some sampled drawing reach ceil(ctilde(d) * F) crossings? The mean
// equals that bound in expectation, so a witness appears within a few
// trials; this realizes the probabilistic existence argument.
GuaranteeWitness guarantee_check(const Hypergraph& h, const MonteCarloReport& report);

}  // namespace hypercross
