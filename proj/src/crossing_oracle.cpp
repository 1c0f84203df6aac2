#include "hypercross/crossing_oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hypercross/rng.hpp"

namespace hypercross {

GeometricDrawing::GeometricDrawing(int d, std::vector<Point> pos)
    : uniformity(d), positions(std::move(pos)) {
    if (d < 2) throw std::invalid_argument("GeometricDrawing: uniformity must be >= 2");
    for (const auto& p : positions)
        if (p.dim() != d)
            throw std::invalid_argument("GeometricDrawing: position dimension mismatch");
    if (!is_general_position(PointConfiguration(d, positions)))
        throw std::invalid_argument("GeometricDrawing: positions not in general position");
}

CrossingReport count_crossings_geometric(const Hypergraph& h, const GeometricDrawing& drawing,
                                         bool want_witnesses) {
    if (drawing.uniformity != h.uniformity)
        throw std::invalid_argument("count_crossings_geometric: uniformity mismatch");
    if (static_cast<int>(drawing.positions.size()) < h.vertex_count)
        throw std::invalid_argument("count_crossings_geometric: drawing misses vertices");

    auto simplex = [&](const Edge& e) {
        std::vector<Point> pts;
        pts.reserve(e.size());
        for (int v : e) pts.push_back(drawing.positions[v]);
        return pts;
    };

    CrossingReport report;
    if (want_witnesses) report.witnesses.emplace();
    for (const auto& [i, j] : disjoint_pair_list(h)) {
        if (strict_interior_intersect(simplex(h.edges[i]), simplex(h.edges[j]))) {
            ++report.total;
            if (want_witnesses) report.witnesses->emplace_back(i, j);
        }
    }
    return report;
}

GeometricDrawing random_general_position(int n, int d, std::uint64_t seed, long long bound) {
    if (n < 1 || d < 2) throw std::invalid_argument("random_general_position: bad n or d");
    if (bound < 1) throw std::invalid_argument("random_general_position: bad bound");

    Rng rng(seed);
    std::vector<Point> pts;
    const long long cap = 2000LL * n + 2000;
    long long attempts = 0;
    while (static_cast<int>(pts.size()) < n) {
        if (++attempts > cap)
            throw std::runtime_error(
                "random_general_position: iteration cap exceeded (bound too small?)");
        Point p;
        for (int i = 0; i < d; ++i)
            p.coords.emplace_back(static_cast<long long>(rng.below(bound)));

        // Duplicates pass the vacuous n <= d check but poison every
        // later extension, so reject them outright.
        if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
        pts.push_back(std::move(p));
        if (!is_general_position(PointConfiguration(d, pts))) pts.pop_back();
    }
    return GeometricDrawing(d, std::move(pts));
}

GeometricDrawing parse_geometric_drawing(std::istream& in) {
    int d = 0, n = 0;
    if (!(in >> d >> n)) throw std::invalid_argument("geometric drawing: malformed header");
    std::vector<Point> pos(std::max(n, 0));
    std::vector<bool> seen(std::max(n, 0), false);
    for (int k = 0; k < n; ++k) {
        int v;
        if (!(in >> v)) throw std::invalid_argument("geometric drawing: truncated file");
        if (v < 0 || v >= n)
            throw std::invalid_argument("geometric drawing: vertex out of range");
        if (seen[v]) throw std::invalid_argument("geometric drawing: duplicate vertex");
        seen[v] = true;
        Point p;
        for (int i = 0; i < d; ++i) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("geometric drawing: truncated file");
            p.coords.push_back(parse_rat(tok));
        }
        pos[v] = std::move(p);
    }
    return GeometricDrawing(d, std::move(pos));
}

std::string serialize_geometric_drawing(const GeometricDrawing& d) {
    std::ostringstream out;
    out << d.uniformity << ' ' << d.positions.size() << '\n';
    for (std::size_t v = 0; v < d.positions.size(); ++v) {
        out << v;
        for (const Rat& c : d.positions[v].coords) out << ' ' << rat_str(c);
        out << '\n';
    }
    return out.str();
}

}  // namespace hypercross
