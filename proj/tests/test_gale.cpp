#include <doctest.h>

#include <algorithm>

#include "hypercross/crossing_oracle.hpp"
#include "hypercross/gale.hpp"
#include "hypercross/moment_curve.hpp"
#include "test_helpers.hpp"

using namespace hypercross;
using namespace hctest;

namespace {

PointConfiguration moment_config(int d, int n) {
    std::vector<Point> pts;
    for (long long t = 1; t <= n; ++t) pts.push_back(moment_point(d, t));
    return PointConfiguration(d, std::move(pts));
}

// Alternative null-space elimination (reversed column preference) for the
// basis-independence check; reuses nothing from the library's pivoting.
VectorConfiguration gale_reversed(const PointConfiguration& cfg) {
    const int d = cfg.dim, n = cfg.size();
    Mat m(d + 1, Vec(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < d; ++i) m[i][j] = cfg.points[j][i];
        m[d][j] = 1;
    }
    // reverse the column order, eliminate, then undo the reversal
    for (auto& row : m) std::reverse(row.begin(), row.end());
    const auto basis = null_space(m);
    const int k = n - d - 1;
    REQUIRE(static_cast<int>(basis.size()) == k);
    std::vector<Vec> vectors(n, Vec(k));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < k; ++r) vectors[i][r] = basis[r][n - 1 - i];
    return VectorConfiguration(k, std::move(vectors));
}

// Separation count in R^1: a partition is linearly separable exactly when
// one side is all-positive and the other all-negative.
long long separations_1d_brute(const VectorConfiguration& vc) {
    const int n = vc.size();
    long long count = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != n / 2 || !(mask & 1)) continue;
        bool ok = true;
        for (int side : {0, 1}) {
            int sign = 0;
            for (int i = 0; i < n && ok; ++i) {
                if (((mask >> i) & 1) != side) continue;
                const int s = sgn(vc.vectors[i][0]);
                if (s == 0) ok = false;
                else if (sign == 0) sign = s;
                else if (sign != s) ok = false;
            }
        }
        // also require the two sides to take opposite signs
        if (ok) {
            const int first_in = sgn(vc.vectors[0][0]);
            int other = 0;
            for (int i = 0; i < n; ++i)
                if (!((mask >> i) & 1)) { other = sgn(vc.vectors[i][0]); break; }
            ok = first_in != 0 && other != 0 && first_in != other;
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("gale_transform of the unit square is proportional to (1,-1,-1,1)") {
    const PointConfiguration square(2, pts2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    const auto vc = gale_transform(square);
    REQUIRE(vc.dim == 1);
    REQUIRE(vc.size() == 4);
    const Rat g0 = vc.vectors[0][0];
    CHECK(g0 != 0);
    CHECK(vc.vectors[1][0] == -g0);
    CHECK(vc.vectors[2][0] == -g0);
    CHECK(vc.vectors[3][0] == g0);
    CHECK(validate_gale(vc));
}

TEST_CASE("gale_transform postconditions on random 4D configurations") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto drawing = random_general_position(8, 4, seed, 64);
        const auto vc = gale_transform(PointConfiguration(4, drawing.positions));
        REQUIRE(vc.dim == 3);
        REQUIRE(vc.size() == 8);
        Vec sum(3, Rat(0));
        for (const auto& g : vc.vectors)
            for (int r = 0; r < 3; ++r) sum[r] += g[r];
        CHECK(sum == Vec(3, Rat(0)));
        CHECK(validate_gale(vc));
    }
}

TEST_CASE("gale_transform rejects affinely degenerate input") {
    // all four points on a line in R^2
    const PointConfiguration degenerate(2, pts2({{0, 0}, {1, 1}, {2, 2}, {3, 3}}));
    CHECK_THROWS_AS(gale_transform(degenerate), std::invalid_argument);
    CHECK_THROWS_AS(gale_transform(PointConfiguration(2, pts2({{0, 0}, {1, 0}}))),
                    std::invalid_argument);
}

TEST_CASE("validate_gale") {
    CHECK(validate_gale(VectorConfiguration(1, {{Rat(1)}, {Rat(-1)}, {Rat(-1)}, {Rat(1)}})));
    CHECK_FALSE(validate_gale(VectorConfiguration(1, {{Rat(1)}, {Rat(1)}, {Rat(-1)}})));
    // zero-sum but does not span R^2
    CHECK_FALSE(validate_gale(
        VectorConfiguration(2, {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(0)}})));
}

TEST_CASE("every (n-d-1)-subset of Gale vectors spans iff source is in general position") {
    Rng rng(59);
    auto spans_all_subsets = [](const VectorConfiguration& vc) {
        const int k = vc.dim, n = vc.size();
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            Mat m(k, Vec(k));
            for (int c = 0; c < k; ++c)
                for (int r = 0; r < k; ++r) m[r][c] = vc.vectors[idx[c]][r];
            if (det_sign(m) == 0) return false;
            int t = k - 1;
            while (t >= 0 && idx[t] == n - k + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (int i = t + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
        return true;
    };

    int degenerate_seen = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point> pts;
        if (trial % 2 == 0) {
            pts = random_gp_points(6, 2, rng, 40);
        } else {
            // plant a collinear triple, keeping the affine hull full
            pts = random_gp_points(5, 2, rng, 40);
            pts.push_back(Point{(pts[0][0] + pts[1][0]) / 2, (pts[0][1] + pts[1][1]) / 2});
        }
        const PointConfiguration cfg(2, pts);
        const auto vc = gale_transform(cfg);
        const bool gp = is_general_position(cfg);
        if (!gp) ++degenerate_seen;
        CHECK(spans_all_subsets(vc) == gp);
    }
    CHECK(degenerate_seen > 0);
}

TEST_CASE("proper linear separations in R^1 match the sign enumeration") {
    const VectorConfiguration vc(1, {{Rat(1)}, {Rat(-1)}, {Rat(-1)}, {Rat(1)}});
    CHECK(count_proper_linear_separations(vc) == 1);
    CHECK(separations_1d_brute(vc) == 1);

    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vec> vecs;
        Rat sum = 0;
        for (int i = 0; i < 5; ++i) {
            const Rat v = static_cast<long long>(rng.below(19)) - 9;
            vecs.push_back({v});
            sum += v;
        }
        vecs.push_back({-sum});  // zero-sum but otherwise arbitrary
        const VectorConfiguration vc1(1, vecs);
        CHECK(count_proper_linear_separations(vc1) == separations_1d_brute(vc1));
    }

    CHECK_THROWS_AS(count_proper_linear_separations(VectorConfiguration(1, {{Rat(1)}})),
                    std::invalid_argument);
}

TEST_CASE("eight moment-curve points in R^4 give 13 proper separations") {
    const auto cfg = moment_config(4, 8);
    const auto vc = gale_transform(cfg);
    CHECK(count_proper_linear_separations(vc) == 13);
    CHECK(count_crossing_pairs(cfg) == 13);
}

TEST_CASE("count_crossing_pairs small cases") {
    CHECK(count_crossing_pairs(PointConfiguration(2, pts2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}))) == 1);
    CHECK(count_crossing_pairs(moment_config(3, 6)) == 3);
    CHECK_THROWS_AS(count_crossing_pairs(moment_config(3, 7)), std::invalid_argument);
}

TEST_CASE("separation count is independent of the null-space basis") {
    for (std::uint64_t seed = 2; seed <= 5; ++seed) {
        const auto drawing = random_general_position(8, 4, seed, 64);
        const PointConfiguration cfg(4, drawing.positions);
        const auto a = gale_transform(cfg);
        const auto b = gale_reversed(cfg);
        CHECK(validate_gale(b));
        CHECK(count_proper_linear_separations(a) == count_proper_linear_separations(b));
    }
}

TEST_CASE("balanced_split_direction finds a 4-4 direction") {
    auto check_split = [](const VectorConfiguration& vc) {
        const Vec w = balanced_split_direction(vc);
        int pos = 0;
        for (const auto& g : vc.vectors) {
            Rat dot = 0;
            for (int r = 0; r < 3; ++r) dot += w[r] * g[r];
            REQUIRE(dot != 0);
            if (dot > 0) ++pos;
        }
        CHECK(pos == 4);
        return w;
    };

    // symmetric configuration: +-e1, +-e2, +-e3, +-(1,1,1)
    std::vector<Vec> sym;
    for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
            Vec v(3, Rat(0));
            v[i] = s;
            sym.push_back(v);
        }
    sym.push_back({Rat(1), Rat(1), Rat(1)});
    sym.push_back({Rat(-1), Rat(-1), Rat(-1)});
    check_split(VectorConfiguration(3, sym));

    check_split(gale_transform(moment_config(4, 8)));

    std::vector<Vec> with_zero = sym;
    with_zero[0] = Vec(3, Rat(0));
    CHECK_THROWS_AS(balanced_split_direction(VectorConfiguration(3, with_zero)),
                    std::invalid_argument);
}

TEST_CASE("affine_gale_diagram projects onto the w.x = 1 plane") {
    const VectorConfiguration vc(3, {{Rat(2), Rat(0), Rat(0)}, {Rat(-2), Rat(0), Rat(0)}});
    const Vec w{Rat(1), Rat(0), Rat(0)};
    const auto diagram = affine_gale_diagram(vc, w);
    REQUIRE(diagram.points.size() == 2);
    CHECK(diagram.points[0] == point2(0, 0));
    CHECK(diagram.colors[0] == Color::red);
    CHECK(diagram.points[1] == point2(0, 0));
    CHECK(diagram.colors[1] == Color::blue);

    CHECK_THROWS_AS(
        affine_gale_diagram(VectorConfiguration(3, {{Rat(0), Rat(1), Rat(0)}}), w),
        std::invalid_argument);
}

TEST_CASE("moment-curve diagram is balanced and in general position") {
    const auto vc = gale_transform(moment_config(4, 8));
    const Vec w = balanced_split_direction(vc);
    const auto diagram = affine_gale_diagram(vc, w);
    REQUIRE(diagram.points.size() == 8);
    int red = 0;
    for (Color c : diagram.colors)
        if (c == Color::red) ++red;
    CHECK(red == 4);
    CHECK(is_general_position(PointConfiguration(2, diagram.points)));
}

TEST_CASE("Gale count equals the geometric oracle on random configurations") {
    for (int d : {2, 3}) {
        for (std::uint64_t seed = 10; seed < 20; ++seed) {
            const auto drawing = random_general_position(2 * d, d, seed, 50);
            const PointConfiguration cfg(d, drawing.positions);
            const auto geometric =
                count_crossings_geometric(complete(2 * d, d), drawing);
            CHECK(count_crossing_pairs(cfg) == geometric.total);
        }
    }
}
