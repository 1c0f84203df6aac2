// Regenerates the 8-point order-type database shipped in data/.
//
// Enumeration: starting from a triangle, each representative point set of
// k points is extended by one point per cell of the arrangement of its
// C(k,2) connecting lines; every cell yields a distinct labeled extension,
// so sweeping all cells of all representatives reaches every order type of
// k+1 points. Representatives are deduplicated by a canonical signature
// that minimizes the triple-orientation vector over hull-anchored angular
// labelings (and their mirror images). The level counts 1, 2, 3, 16, 135,
// 3315 double-check completeness against the known census.
//
// Realization: each 8-point representative is normalized into the byte
// box, repeatedly re-centered by an exact LP that maximizes the margin of
// every point against the lines through the others, rounded to integers
// and verified; a local integer repair search handles the few tight cases.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "hypercross/geometry.hpp"
#include "hypercross/ordertype_db.hpp"

using namespace hypercross;

namespace {

bool g_verbose = false;

std::string labeled_signature(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    std::string s;
    s.reserve(n * (n - 1) * (n - 2) / 6);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const int o = orient2d(pts[i], pts[j], pts[k]);
                if (o == 0) throw std::logic_error("dbgen: degenerate triple");
                s += o > 0 ? '+' : '-';
            }
    return s;
}

std::string negate_signature(std::string s) {
    for (char& c : s) c = c == '+' ? '-' : '+';
    return s;
}

// Hull-anchored labelings: anchor first, the rest in angular order around
// it, both rotation directions. The family depends only on the order
// type, which makes the minimum below a complete invariant.
std::vector<std::vector<int>> candidate_labelings(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<int>> labelings;
    for (int a : convex_hull_2d(pts)) {
        for (int dir : {1, -1}) {
            std::vector<int> rest;
            for (int i = 0; i < n; ++i)
                if (i != a) rest.push_back(i);
            std::sort(rest.begin(), rest.end(), [&](int q, int r) {
                return orient2d(pts[a], pts[q], pts[r]) == dir;
            });
            std::vector<int> L{a};
            L.insert(L.end(), rest.begin(), rest.end());
            labelings.push_back(std::move(L));
        }
    }
    return labelings;
}

std::vector<Point> apply_labeling(const std::vector<Point>& pts, const std::vector<int>& L) {
    std::vector<Point> out;
    out.reserve(L.size());
    for (int i : L) out.push_back(pts[i]);
    return out;
}

struct Canonical {
    std::string key;            // minimal signature, mirror included when enabled
    std::vector<Point> points;  // realization ordered by the best direct labeling
};

Canonical canonicalize(const std::vector<Point>& pts, bool identify_mirror) {
    Canonical best;
    std::string best_direct;
    for (const auto& L : candidate_labelings(pts)) {
        const auto ordered = apply_labeling(pts, L);
        std::string s = labeled_signature(ordered);
        if (best_direct.empty() || s < best_direct) {
            best_direct = s;
            best.points = ordered;
        }
        if (best.key.empty() || s < best.key) best.key = s;
        if (identify_mirror) {
            std::string m = negate_signature(std::move(s));
            if (m < best.key) best.key = std::move(m);
        }
    }
    return best;
}

// ---- extension ----

struct Line {
    Rat a, b, c;  // a x + b y + c = 0
};

Rat eval(const Line& l, const Rat& x, const Rat& y) { return l.a * x + l.b * y + l.c; }

std::vector<Line> connecting_lines(const std::vector<Point>& pts) {
    std::vector<Line> lines;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Line l;
            l.a = pts[j][1] - pts[i][1];
            l.b = pts[i][0] - pts[j][0];
            l.c = -(l.a * pts[i][0] + l.b * pts[i][1]);
            lines.push_back(std::move(l));
        }
    return lines;
}

// One interior sample point per cell of the line arrangement: vertical
// midlines between consecutive x-events, then midpoints between
// consecutive crossings along each midline.
std::vector<Point> cell_samples(const std::vector<Line>& lines) {
    std::set<Rat> xs;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].b == 0) xs.insert(-lines[i].c / lines[i].a);
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const Rat det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
            if (det == 0) continue;  // parallel
            xs.insert((lines[i].b * lines[j].c - lines[j].b * lines[i].c) / det);
        }
    }
    std::vector<Rat> midlines;
    if (xs.empty()) {
        midlines.push_back(0);
    } else {
        midlines.push_back(*xs.begin() - 1);
        for (auto it = xs.begin(); std::next(it) != xs.end(); ++it)
            midlines.push_back((*it + *std::next(it)) / 2);
        midlines.push_back(*xs.rbegin() + 1);
    }

    std::vector<Point> samples;
    for (const Rat& x0 : midlines) {
        std::set<Rat> ys;
        for (const auto& l : lines)
            if (l.b != 0) ys.insert(-(l.a * x0 + l.c) / l.b);
        if (ys.empty()) continue;  // x0 sits on a vertical line's strip edge only
        std::vector<Rat> yy;
        yy.push_back(*ys.begin() - 1);
        for (auto it = ys.begin(); std::next(it) != ys.end(); ++it)
            yy.push_back((*it + *std::next(it)) / 2);
        yy.push_back(*ys.rbegin() + 1);
        for (const Rat& y0 : yy) samples.push_back(Point{x0, y0});
    }
    return samples;
}

// ---- integer realization ----

long long round_to_ll(const Rat& x) {
    const Int num = numerator(x), den = denominator(x);
    Int q = num / den, r = num % den;
    if (r < 0) {
        q -= 1;
        r += den;
    }
    if (2 * r >= den) q += 1;
    return static_cast<long long>(q);
}

std::vector<Point> normalize_into_box(std::vector<Point> pts, long long hi, int shear) {
    if (shear != 0) {
        for (auto& p : pts) p[0] += make_rat(shear, 7) * p[1];
    }
    Rat minx = pts[0][0], maxx = pts[0][0], miny = pts[0][1], maxy = pts[0][1];
    for (const auto& p : pts) {
        minx = std::min(minx, p[0]);
        maxx = std::max(maxx, p[0]);
        miny = std::min(miny, p[1]);
        maxy = std::max(maxy, p[1]);
    }
    const Rat margin = make_rat(hi, 64) + 1;
    const Rat span = hi - 2 * margin;
    const Rat sx = maxx > minx ? span / (maxx - minx) : Rat(1);
    const Rat sy = maxy > miny ? span / (maxy - miny) : Rat(1);
    for (auto& p : pts) {
        p[0] = (p[0] - minx) * sx + margin;
        p[1] = (p[1] - miny) * sy + margin;
    }
    return pts;
}

// Clip a convex polygon against the half-plane s * eval(l, .) >= 0.
std::vector<Point> clip_halfplane(const std::vector<Point>& poly, const Line& l, int s) {
    std::vector<Point> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& cur = poly[i];
        const Point& nxt = poly[(i + 1) % n];
        const Rat ec = s * eval(l, cur[0], cur[1]);
        const Rat en = s * eval(l, nxt[0], nxt[1]);
        if (ec >= 0) out.push_back(cur);
        if ((ec > 0 && en < 0) || (ec < 0 && en > 0)) {
            const Rat t = ec / (ec - en);
            out.push_back(Point{cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
        }
    }
    return out;
}

// Re-center point i inside its arrangement cell: clip the box against the
// half-planes of all lines through the other points and take the vertex
// centroid. The centroid of a positive-area convex cell is interior, so
// every orientation sign survives; degenerate clips leave the point as is.
void fatten_point(std::vector<Point>& pts, int i, long long hi) {
    const int n = static_cast<int>(pts.size());
    std::vector<Point> poly{point2(0, 0), point2(hi, 0), point2(hi, hi), point2(0, hi)};
    for (int j = 0; j < n && poly.size() >= 3; ++j) {
        if (j == i) continue;
        for (int k = j + 1; k < n; ++k) {
            if (k == i) continue;
            Line l;
            l.a = pts[k][1] - pts[j][1];
            l.b = pts[j][0] - pts[k][0];
            l.c = -(l.a * pts[j][0] + l.b * pts[j][1]);
            const int s = sgn(eval(l, pts[i][0], pts[i][1]));
            if (s == 0) throw std::logic_error("dbgen: point on a connecting line");
            poly = clip_halfplane(poly, l, s);
            if (poly.size() < 3) break;
        }
    }
    if (poly.size() < 3) return;
    Rat cx = 0, cy = 0;
    for (const auto& v : poly) {
        cx += v[0];
        cy += v[1];
    }
    cx /= static_cast<long long>(poly.size());
    cy /= static_cast<long long>(poly.size());
    Point candidate{cx, cy};
    // strictness check, then commit
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int k = j + 1; k < n; ++k) {
            if (k == i) continue;
            if (orient2d(candidate, pts[j], pts[k]) == 0) return;
        }
    }
    pts[i] = std::move(candidate);
}

bool in_box_distinct(const std::vector<Point>& pts, long long hi) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (int c = 0; c < 2; ++c)
            if (pts[i][c] < 0 || pts[i][c] > hi) return false;
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) return false;
    }
    return true;
}

std::vector<int> violated_triples(const std::vector<Point>& pts, const std::string& target) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> bad;
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k, ++t) {
                const int o = orient2d(pts[i], pts[j], pts[k]);
                if (o == 0 || (o > 0) != (target[t] == '+')) bad.push_back(t);
            }
    return bad;
}

// Greedy one-point moves over a small integer neighborhood.
bool repair(std::vector<Point>& pts, const std::string& target, long long hi) {
    const int n = static_cast<int>(pts.size());
    auto triple_of = [&](int t) {
        for (int i = 0, c = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k, ++c)
                    if (c == t) return std::array<int, 3>{i, j, k};
        return std::array<int, 3>{0, 0, 0};
    };

    for (int step = 0; step < 300; ++step) {
        const auto bad = violated_triples(pts, target);
        if (bad.empty() && in_box_distinct(pts, hi)) return true;

        std::vector<int> load(n, 0);
        for (int t : bad)
            for (int v : triple_of(t)) ++load[v];
        int mover = 0;
        for (int i = 1; i < n; ++i)
            if (load[i] > load[mover]) mover = i;
        if (load[mover] == 0) return false;

        const Point saved = pts[mover];
        std::size_t best = bad.size();
        Point best_pos = saved;
        for (int dx = -3; dx <= 3; ++dx) {
            for (int dy = -3; dy <= 3; ++dy) {
                Point cand{saved[0] + dx, saved[1] + dy};
                if (cand[0] < 0 || cand[0] > hi || cand[1] < 0 || cand[1] > hi) continue;
                pts[mover] = cand;
                if (!in_box_distinct(pts, hi)) continue;
                const std::size_t violations = violated_triples(pts, target).size();
                if (violations < best) {
                    best = violations;
                    best_pos = cand;
                }
            }
        }
        pts[mover] = best_pos;
        if (best == bad.size() && best_pos == saved) return false;  // stalled
    }
    return false;
}

std::optional<std::vector<Point>> realize_int(const std::vector<Point>& canonical_pts,
                                              long long hi, int fatten_rounds, int shear) {
    const std::string target = labeled_signature(canonical_pts);
    auto work = normalize_into_box(canonical_pts, hi, shear);
    for (int r = 0; r < fatten_rounds; ++r)
        for (std::size_t i = 0; i < work.size(); ++i)
            fatten_point(work, static_cast<int>(i), hi);

    std::vector<Point> rounded;
    rounded.reserve(work.size());
    for (const auto& p : work)
        rounded.push_back(Point{Rat(round_to_ll(p[0])), Rat(round_to_ll(p[1]))});

    if (violated_triples(rounded, target).empty() && in_box_distinct(rounded, hi))
        return rounded;
    if (repair(rounded, target, hi)) return rounded;
    return std::nullopt;
}

std::optional<std::vector<Point>> realize_with_retries(const std::vector<Point>& pts,
                                                       long long hi) {
    for (const auto& [rounds, shear] :
         std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}, {2, -1}, {3, 2}, {3, -2},
                                          {4, 3}, {4, -3}, {5, 5}, {5, -5}, {6, 9}, {6, -9}}) {
        if (auto r = realize_int(pts, hi, rounds, shear)) return r;
    }
    return std::nullopt;
}

// ---- enumeration ----

using RepMap = std::map<std::string, std::vector<Point>>;

RepMap extend_all(const RepMap& reps, bool identify_mirror, long long interim_box) {
    RepMap next;
    std::size_t done = 0;
    for (const auto& [key, pts] : reps) {
        const auto lines = connecting_lines(pts);
        std::map<std::string, Point> cells;
        for (const auto& sample : cell_samples(lines)) {
            std::string sig;
            sig.reserve(lines.size());
            bool on_line = false;
            for (const auto& l : lines) {
                const int s = sgn(eval(l, sample[0], sample[1]));
                if (s == 0) { on_line = true; break; }
                sig += s > 0 ? '+' : '-';
            }
            if (!on_line) cells.emplace(std::move(sig), sample);
        }
        for (const auto& [sig, sample] : cells) {
            auto extended = pts;
            extended.push_back(sample);
            auto canon = canonicalize(extended, identify_mirror);
            if (next.count(canon.key)) continue;
            // keep coordinates small for the next extension round
            if (auto snapped = realize_int(canon.points, interim_box, 1, 0))
                next.emplace(canon.key, std::move(*snapped));
            else
                next.emplace(canon.key, std::move(canon.points));
        }
        if (g_verbose && ++done % 25 == 0)
            std::cerr << "  extended " << done << "/" << reps.size() << " -> " << next.size()
                      << " types\n";
    }
    return next;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regenerate the 8-point order-type database (point_set_hex.txt)"};
    std::string output = "data/point_set_hex.txt";
    bool no_mirror = false;
    bool verbose = false;
    long long interim_box = 16384;
    app.add_option("--output", output, "database file to write");
    app.add_flag("--no-mirror", no_mirror,
                 "treat mirror images as distinct order types (diagnostic)");
    app.add_flag("-v,--verbose", verbose, "progress to stderr");
    app.add_option("--interim-box", interim_box, "grid for intermediate representatives");

    CLI11_PARSE(app, argc, argv);
    g_verbose = verbose;
    const bool identify_mirror = !no_mirror;

    RepMap reps;
    {
        const std::vector<Point> triangle{point2(0, 0), point2(64, 0), point2(0, 64)};
        const auto canon = canonicalize(triangle, identify_mirror);
        reps.emplace(canon.key, canon.points);
    }

    const std::map<int, std::size_t> census{{3, 1}, {4, 2}, {5, 3}, {6, 16}, {7, 135}, {8, 3315}};
    for (int n = 4; n <= 8; ++n) {
        reps = extend_all(reps, identify_mirror, interim_box);
        std::cerr << "order types of " << n << " points: " << reps.size() << "\n";
        if (identify_mirror && reps.size() != census.at(n)) {
            std::cerr << "census mismatch at n = " << n << " (expected " << census.at(n)
                      << ")\n";
            return 1;
        }
    }
    if (no_mirror) return 0;  // diagnostic run ends after the counts

    // The published sample point set anchors the first line of the file.
    const auto sample_entries =
        parse_hex_pointsets(std::string("da30 9d36 5842 4c48 3d5a 0db1 37d2 f335\n"));
    const auto sample_canon = canonicalize(sample_entries[0].points.points, true);
    if (!reps.count(sample_canon.key)) {
        std::cerr << "enumeration missed the published sample's order type\n";
        return 1;
    }

    std::vector<OrderTypeEntry> entries;
    entries.push_back({1, sample_entries[0].points});
    std::size_t realized = 0, failed = 0;
    for (const auto& [key, pts] : reps) {
        if (key == sample_canon.key) continue;
        if (auto r = realize_with_retries(pts, 255)) {
            entries.push_back(
                {static_cast<int>(entries.size()) + 1, PointConfiguration(2, std::move(*r))});
            ++realized;
        } else {
            std::cerr << "UNREALIZED: " << key << "\n";
            ++failed;
        }
        if (g_verbose && (realized + failed) % 250 == 0)
            std::cerr << "  realized " << realized << " (failed " << failed << ")\n";
    }
    if (failed > 0) {
        std::cerr << failed << " order types lack byte realizations; aborting\n";
        return 1;
    }

    // Self-check: the emitted file must reproduce the canonical key set.
    std::set<std::string> emitted;
    for (const auto& e : entries) emitted.insert(canonicalize(e.points.points, true).key);
    if (emitted.size() != reps.size()) {
        std::cerr << "emitted realizations collapse to " << emitted.size() << " types\n";
        return 1;
    }
    const auto report = validate_db(entries);
    if (!report.pass()) {
        for (const auto& f : report.failures) std::cerr << "failure: " << f << "\n";
        return 1;
    }

    std::ofstream out(output);
    if (!out) {
        std::cerr << "cannot write " << output << "\n";
        return 1;
    }
    out << serialize_hex_pointsets(entries);
    std::cerr << "wrote " << entries.size() << " representatives to " << output << "\n";
    return 0;
}
