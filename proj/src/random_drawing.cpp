#include "hypercross/random_drawing.hpp"

#include <stdexcept>

#include "hypercross/parallel.hpp"
#include "hypercross/rng.hpp"

namespace hypercross {

namespace {

MomentCurveDrawing drawing_from_stream(const Hypergraph& h, Rng rng) {
    std::vector<long long> params(h.vertex_count);
    for (int v = 0; v < h.vertex_count; ++v) params[v] = v + 1;
    rng.shuffle(params);
    return MomentCurveDrawing(h.uniformity, std::move(params));
}

long long count_on(const Hypergraph& h, const std::vector<std::pair<int, int>>& pairs,
                   const MomentCurveDrawing& drawing) {
    long long total = 0;
    for (const auto& [i, j] : pairs) {
        std::vector<long long> a, b;
        for (int v : h.edges[i]) a.push_back(drawing.params[v]);
        for (int v : h.edges[j]) b.push_back(drawing.params[v]);
        if (alternation_cross(std::move(a), std::move(b))) ++total;
    }
    return total;
}

}  // namespace

MomentCurveDrawing random_moment_drawing(const Hypergraph& h, std::uint64_t seed) {
    return drawing_from_stream(h, Rng(seed));
}

MonteCarloReport monte_carlo(const Hypergraph& h, long long trials, std::uint64_t seed,
                             unsigned workers) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: need trials >= 1");

    const auto pairs = disjoint_pair_list(h);

    MonteCarloReport report;
    report.uniformity = h.uniformity;
    report.trials = trials;
    report.F = static_cast<long long>(pairs.size());
    report.seed = seed;
    report.expected = ctilde(h.uniformity) * report.F;
    report.counts.assign(trials, 0);

    const Rng base(seed);
    parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t k) {
        report.counts[k] = count_on(h, pairs, drawing_from_stream(h, base.fork(k)));
    });

    Int sum = 0;
    for (long long k = 0; k < trials; ++k) {
        const long long c = report.counts[k];
        sum += c;
        if (report.best_trial < 0 || c > report.best_count) {
            report.best_count = c;
            report.best_trial = k;
        }
    }
    report.mean = make_rat(sum, trials);
    if (trials > 1) {
        Rat ss = 0;
        for (long long c : report.counts) {
            const Rat dcount = Rat(c) - report.mean;
            ss += dcount * dcount;
        }
        report.sample_variance = ss / Rat(trials - 1);
    } else {
        report.sample_variance = 0;
    }
    return report;
}

GuaranteeWitness guarantee_check(const Hypergraph& h, const MonteCarloReport& report) {
    if (report.trials < 1) throw std::invalid_argument("guarantee_check: empty report");

    GuaranteeWitness w;
    const Rat bound = report.expected;
    // ceil of an exact rational
    Int q = numerator(bound) / denominator(bound);
    if (q * denominator(bound) < numerator(bound)) ++q;
    w.threshold = static_cast<long long>(q);
    w.best_count = report.best_count;
    w.best_trial = report.best_trial;
    w.attained = report.best_count >= w.threshold;
    if (w.attained) {
        Rng base(report.seed);
        w.permutation_params =
            drawing_from_stream(h, base.fork(static_cast<std::uint64_t>(report.best_trial)))
                .params;
    }
    return w;
}

}  // namespace hypercross
