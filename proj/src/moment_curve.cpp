#include "hypercross/moment_curve.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hypercross {

MomentCurveDrawing::MomentCurveDrawing(int d, std::vector<long long> t)
    : uniformity(d), params(std::move(t)) {
    if (d < 2) throw std::invalid_argument("MomentCurveDrawing: uniformity must be >= 2");
    std::set<long long> distinct(params.begin(), params.end());
    if (distinct.size() != params.size())
        throw std::invalid_argument("MomentCurveDrawing: parameters must be pairwise distinct");
}

Point moment_point(int dim, long long t) {
    Point p;
    Int power = 1;
    for (int i = 0; i < dim; ++i) {
        power *= t;
        p.coords.emplace_back(power);
    }
    return p;
}

bool alternation_cross(std::vector<long long> A, std::vector<long long> B) {
    if (A.size() != B.size() || A.empty())
        throw std::invalid_argument("alternation_cross: need |A| = |B| = d");
    const int d = static_cast<int>(A.size());
    std::sort(A.begin(), A.end());
    std::sort(B.begin(), B.end());

    int runs = 0;
    int last = -1;  // 0 = A, 1 = B
    std::size_t i = 0, j = 0;
    while (i < A.size() || j < B.size()) {
        int take;
        if (i == A.size()) take = 1;
        else if (j == B.size()) take = 0;
        else if (A[i] < B[j]) take = 0;
        else if (B[j] < A[i]) take = 1;
        else throw std::invalid_argument("alternation_cross: shared parameter");
        if (take == 0) ++i;
        else ++j;
        if (take != last) {
            ++runs;
            last = take;
        }
    }
    return runs >= d + 2;
}

CrossingReport count_crossings(const Hypergraph& h, const MomentCurveDrawing& drawing,
                               bool want_witnesses) {
    if (drawing.uniformity != h.uniformity)
        throw std::invalid_argument("count_crossings: uniformity mismatch");
    if (static_cast<int>(drawing.params.size()) < h.vertex_count)
        throw std::invalid_argument("count_crossings: drawing misses vertices");

    auto edge_params = [&](const Edge& e) {
        std::vector<long long> t;
        t.reserve(e.size());
        for (int v : e) t.push_back(drawing.params[v]);
        return t;
    };

    CrossingReport report;
    if (want_witnesses) report.witnesses.emplace();
    for (const auto& [i, j] : disjoint_pair_list(h)) {
        if (alternation_cross(edge_params(h.edges[i]), edge_params(h.edges[j]))) {
            ++report.total;
            if (want_witnesses) report.witnesses->emplace_back(i, j);
        }
    }
    return report;
}

long long cm_formula(int d) {
    if (d < 2) throw std::invalid_argument("cm_formula: need d >= 2");
    Int total = binomial(2 * d - 1, d - 1);
    if (d % 2 == 0) {
        for (int i = 1; i <= d / 2; ++i) total -= binomial(d, i) * binomial(d - 1, i - 1);
    } else {
        total -= 1;
        for (int i = 1; i <= d / 2; ++i) total -= binomial(d - 1, i) * binomial(d, i);
    }
    return static_cast<long long>(total);
}

long long cm_bruteforce(int d) {
    if (d < 2 || d > 14) throw std::invalid_argument("cm_bruteforce: need 2 <= d <= 14");
    const int n = 2 * d;
    long long crossings = 0;
    // Enumerate d-subsets containing parameter 1, so each unordered
    // bipartition is visited once.
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    for (;;) {
        if (idx[0] == 0) {
            std::vector<long long> A, B;
            std::vector<bool> in_a(n, false);
            for (int k : idx) in_a[k] = true;
            for (int v = 0; v < n; ++v) (in_a[v] ? A : B).push_back(v + 1);
            if (alternation_cross(A, B)) ++crossings;
        }
        int k = d - 1;
        while (k >= 0 && idx[k] == n - d + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int i = k + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
    return crossings;
}

Rat ctilde(int d) {
    if (d < 2) throw std::invalid_argument("ctilde: need d >= 2");
    return make_rat(cm_formula(d), binomial(2 * d - 1, d - 1));
}

MomentCurveDrawing theorem2_drawing(int d, int n) {
    if (d < 2 || n < 1) throw std::invalid_argument("theorem2_drawing: need d >= 2, n >= 1");
    std::vector<long long> params(d * n);
    for (int v = 0; v < d * n; ++v) params[v] = v + 1;  // part-major vertex order
    return MomentCurveDrawing(d, std::move(params));
}

long long theorem2_value(int d, int n) {
    if (d < 2 || n < 2) throw std::invalid_argument("theorem2_value: need d >= 2, n >= 2");
    const Int pairs = binomial(n, 2);
    Int v = (Int(1) << (d - 1)) - 1;
    for (int i = 0; i < d; ++i) v *= pairs;
    return static_cast<long long>(v);
}

Int knd_max_value(int n, int d) {
    if (d != 3 && d != 4)
        throw std::invalid_argument(
            "knd_max_value: settled only for d in {3, 4}; see conjectured_max");
    if (n < 2 * d) throw std::invalid_argument("knd_max_value: need n >= 2d");
    return Int(cm_formula(d)) * binomial(n, 2 * d);
}

Int conjectured_max(int n, int d) {
    if (d < 2) throw std::invalid_argument("conjectured_max: need d >= 2");
    if (n < 2 * d) throw std::invalid_argument("conjectured_max: need n >= 2d");
    return Int(cm_formula(d)) * binomial(n, 2 * d);
}

MomentCurveDrawing parse_moment_drawing(std::istream& in) {
    int d = 0, n = 0;
    if (!(in >> d >> n)) throw std::invalid_argument("moment drawing: malformed header");
    std::vector<long long> params(std::max(n, 0));
    std::vector<bool> seen(std::max(n, 0), false);
    for (int k = 0; k < n; ++k) {
        int v;
        long long t;
        if (!(in >> v >> t)) throw std::invalid_argument("moment drawing: truncated file");
        if (v < 0 || v >= n) throw std::invalid_argument("moment drawing: vertex out of range");
        if (seen[v]) throw std::invalid_argument("moment drawing: duplicate vertex");
        seen[v] = true;
        params[v] = t;
    }
    return MomentCurveDrawing(d, std::move(params));
}

std::string serialize_moment_drawing(const MomentCurveDrawing& d) {
    std::ostringstream out;
    out << d.uniformity << ' ' << d.params.size() << '\n';
    for (std::size_t v = 0; v < d.params.size(); ++v) out << v << ' ' << d.params[v] << '\n';
    return out.str();
}

}  // namespace hypercross
