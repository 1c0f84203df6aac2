#include "hypercross/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hypercross/rational.hpp"

namespace hypercross {

Hypergraph::Hypergraph(int d, int n, std::vector<Edge> e)
    : uniformity(d), vertex_count(n), edges(std::move(e)) {
    if (d < 2) throw std::invalid_argument("Hypergraph: uniformity must be >= 2");
    if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    std::set<Edge> seen;
    for (const auto& edge : edges) {
        if (static_cast<int>(edge.size()) != d)
            throw std::invalid_argument("Hypergraph: edge arity != uniformity");
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (edge[i] < 0 || edge[i] >= n)
                throw std::invalid_argument("Hypergraph: vertex index out of range");
            if (i > 0 && edge[i] <= edge[i - 1])
                throw std::invalid_argument("Hypergraph: edge vertices must be strictly increasing");
        }
        if (!seen.insert(edge).second)
            throw std::invalid_argument("Hypergraph: duplicate edge");
    }
}

Hypergraph complete(int n, int d) {
    if (n < d) throw std::invalid_argument("complete: need n >= d");
    std::vector<Edge> edges;
    Edge e(d);
    for (int i = 0; i < d; ++i) e[i] = i;
    for (;;) {
        edges.push_back(e);
        int k = d - 1;
        while (k >= 0 && e[k] == n - d + k) --k;
        if (k < 0) break;
        ++e[k];
        for (int i = k + 1; i < d; ++i) e[i] = e[i - 1] + 1;
    }
    return Hypergraph(d, n, std::move(edges));
}

PartitionedHypergraph complete_dpartite(int d, int n) {
    if (d < 2) throw std::invalid_argument("complete_dpartite: need d >= 2");
    if (n < 1) throw std::invalid_argument("complete_dpartite: need n >= 1");
    std::vector<std::vector<int>> parts(d);
    for (int i = 0; i < d; ++i)
        for (int l = 0; l < n; ++l) parts[i].push_back(i * n + l);

    std::vector<Edge> edges;
    std::vector<int> pick(d, 0);  // odometer over part-local indices
    for (;;) {
        Edge e(d);
        for (int i = 0; i < d; ++i) e[i] = parts[i][pick[i]];
        edges.push_back(std::move(e));
        int k = d - 1;
        while (k >= 0 && pick[k] == n - 1) pick[k--] = 0;
        if (k < 0) break;
        ++pick[k];
    }
    return PartitionedHypergraph{Hypergraph(d, d * n, std::move(edges)), std::move(parts)};
}

namespace {

bool edges_disjoint(const Edge& a, const Edge& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return true;
}

}  // namespace

std::vector<std::pair<int, int>> disjoint_pair_list(const Hypergraph& h) {
    std::vector<std::pair<int, int>> pairs;
    const int m = static_cast<int>(h.edges.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (edges_disjoint(h.edges[i], h.edges[j])) pairs.emplace_back(i, j);
    return pairs;
}

long long disjoint_pairs(const Hypergraph& h) {
    return static_cast<long long>(disjoint_pair_list(h).size());
}

GadgetResult build_gadget(const Hypergraph& h) {
    if (h.uniformity < 3) throw std::invalid_argument("build_gadget: need uniformity >= 3");
    const int d = h.uniformity;
    const long long m = static_cast<long long>(h.edges.size());
    const long long t = m * (m - 1) / 2 + 1;

    GadgetResult r;
    r.t = t;
    r.apex = h.vertex_count;
    const long long new_n = h.vertex_count + 1 + t * (d - 1);
    if (new_n > 1'000'000'000LL)
        throw std::invalid_argument("build_gadget: gadget too large");

    std::vector<Edge> edges = h.edges;
    for (long long i = 1; i <= t; ++i) {
        Edge e;
        e.push_back(r.apex);
        for (int j = 1; j <= d - 1; ++j)
            e.push_back(static_cast<int>(r.apex + (i - 1) * (d - 1) + j));
        r.star_edges.push_back(e);
        edges.push_back(std::move(e));
    }
    r.gadget = Hypergraph(d, static_cast<int>(new_n), std::move(edges));
    return r;
}

Hypergraph parse_hypergraph(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_data_line(header)) throw std::invalid_argument("hypergraph: missing header");
    std::istringstream hs(header);
    int d = 0, n = 0;
    long long m = -1;
    if (!(hs >> d >> n >> m) || m < 0)
        throw std::invalid_argument("hypergraph: malformed header, expected 'd n m'");

    std::vector<Edge> edges;
    for (long long k = 0; k < m; ++k) {
        std::string data;
        if (!next_data_line(data))
            throw std::invalid_argument("hypergraph: fewer edges than the header declares");
        std::istringstream es(data);
        Edge e;
        int v;
        while (es >> v) e.push_back(v);
        edges.push_back(std::move(e));
    }
    return Hypergraph(d, n, std::move(edges));  // constructor validates
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.uniformity << ' ' << h.vertex_count << ' ' << h.edges.size() << '\n';
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace hypercross
