#pragma once
#include <algorithm>

#include <vector>

#include "hypercross/geometry.hpp"
#include "hypercross/rng.hpp"

namespace hctest {

using namespace hypercross;

inline Point P(long long x, long long y) { return point2(x, y); }

inline std::vector<Point> pts2(std::initializer_list<std::pair<long long, long long>> xs) {
    std::vector<Point> v;
    for (const auto& [x, y] : xs) v.push_back(point2(x, y));
    return v;
}

// The first point set printed in the database's decimal conversion; a
// convex octagon listed in clockwise index order.
inline std::vector<Point> appendix_pointset1() {
    return pts2({{218, 48}, {157, 54}, {88, 66}, {76, 72}, {61, 90}, {13, 177}, {55, 210}, {243, 53}});
}

// Independent int64 orientation, kept free of the library's rational path
// so the two can cross-check each other.
inline int orient2d_ll(long long ax, long long ay, long long bx, long long by, long long cx,
                       long long cy) {
    const long long det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

// Cofactor-expansion determinant sign over exact integers, used as the
// oracle for orient() in dimensions 3 and 4.
inline long long det_ll(std::vector<std::vector<long long>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    long long total = 0;
    for (int c = 0; c < n; ++c) {
        std::vector<std::vector<long long>> minor;
        for (int i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (int j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        const long long term = m[0][c] * det_ll(std::move(minor));
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

// Random integer point set in general position (test-local rejection
// sampler, deliberately separate from crossing_oracle's).
inline std::vector<Point> random_gp_points(int n, int d, Rng& rng, long long bound) {
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
        Point p;
        for (int i = 0; i < d; ++i)
            p.coords.emplace_back(static_cast<long long>(rng.below(bound)));
        if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
        pts.push_back(std::move(p));
        if (!is_general_position(PointConfiguration(d, pts))) pts.pop_back();
    }
    return pts;
}

}  // namespace hctest
