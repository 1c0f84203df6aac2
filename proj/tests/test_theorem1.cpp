#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hypercross/gale.hpp"
#include "hypercross/lp.hpp"
#include "hypercross/theorem1.hpp"
#include "test_helpers.hpp"

using namespace hypercross;
using namespace hctest;

namespace {

OrderTypeEntry fixture_entry() {
    return {1, PointConfiguration(2, appendix_pointset1())};
}

Coloring coloring_from(const std::string& s) {
    Coloring c;
    for (int i = 0; i < 8; ++i) c.bits[i] = s[i] == '1';
    return c;
}

// Interior-intersection witness for arbitrary-size planar point sets: the
// simplex-vs-simplex LP of the geometry module, restated for 4-vs-4 hulls.
std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>> hull_interior_witness(
    const std::vector<Point>& A, const std::vector<Point>& B) {
    const int a = static_cast<int>(A.size()), b = static_cast<int>(B.size());
    const int nv = 1 + a + b;  // t, u, v with lambda = t + u, mu = t + v
    lp::Model model(nv);
    for (int coord = 0; coord < 2; ++coord) {
        Vec row(nv, Rat(0));
        Rat tc = 0;
        for (int i = 0; i < a; ++i) {
            row[1 + i] = A[i][coord];
            tc += A[i][coord];
        }
        for (int j = 0; j < b; ++j) {
            row[1 + a + j] = -B[j][coord];
            tc -= B[j][coord];
        }
        row[0] = tc;
        model.add_constraint(std::move(row), lp::Rel::eq, 0);
    }
    for (int side = 0; side < 2; ++side) {
        Vec row(nv, Rat(0));
        row[0] = side == 0 ? a : b;
        for (int i = 0; i < (side == 0 ? a : b); ++i) row[1 + (side == 0 ? 0 : a) + i] = 1;
        model.add_constraint(std::move(row), lp::Rel::eq, 1);
    }
    for (int i = 1; i < nv; ++i) {
        Vec row(nv, Rat(0));
        row[i] = 1;
        model.add_constraint(std::move(row), lp::Rel::ge, 0);
    }
    Vec obj(nv, Rat(0));
    obj[0] = 1;
    const auto r = model.maximize(obj);
    if (r.status != lp::Status::optimal || r.objective <= 0) return std::nullopt;
    std::vector<Rat> lambda, mu;
    for (int i = 0; i < a; ++i) lambda.push_back(r.x[0] + r.x[1 + i]);
    for (int j = 0; j < b; ++j) mu.push_back(r.x[0] + r.x[1 + a + j]);
    return std::make_pair(std::move(lambda), std::move(mu));
}

}  // namespace

TEST_CASE("balanced_colorings is the lexicographic list of 70") {
    const auto& cs = balanced_colorings();
    REQUIRE(cs.size() == 70);
    CHECK(cs.front().str() == "00001111");
    CHECK(cs.back().str() == "11110000");
    for (std::size_t i = 1; i < cs.size(); ++i) CHECK(cs[i - 1].str() < cs[i].str());
}

TEST_CASE("feasible sets of the first database point set match the published table") {
    const auto fs = feasible_sets(fixture_entry());
    const std::vector<std::vector<int>> expect_two{{0, 1}, {0, 7}, {1, 2}, {2, 3},
                                                   {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    const std::vector<std::vector<int>> expect_four{
        {0, 1, 2, 3}, {0, 1, 2, 7}, {0, 1, 6, 7}, {0, 5, 6, 7}};
    CHECK(fs.two_sets == expect_two);
    CHECK(fs.four_sets == expect_four);
}

TEST_CASE("balanced_count on the fixture") {
    const auto fs = feasible_sets(fixture_entry());
    CHECK(balanced_count(fs, coloring_from("00001111")) == 3);
    CHECK(balanced_count(fs, coloring_from("10101010")) == 12);
    CHECK(balanced_count(fs, coloring_from("01010101")) == 12);
    CHECK(balanced_count(FeasibleSets{}, coloring_from("00001111")) == 0);
}

TEST_CASE("monochromatic feasible 4-sets") {
    const auto fs = feasible_sets(fixture_entry());
    CHECK(has_monochromatic_feasible_4set(fs, coloring_from("00001111")));  // (0,1,2,3) all zero
    CHECK_FALSE(has_monochromatic_feasible_4set(fs, coloring_from("10101010")));
    CHECK_FALSE(has_monochromatic_feasible_4set(FeasibleSets{}, coloring_from("00001111")));
}

TEST_CASE("complement colorings tally identically") {
    Rng rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        const auto pts = random_gp_points(8, 2, rng, 200);
        const auto fs = feasible_sets(pts);
        for (const Coloring& c : balanced_colorings()) {
            Coloring bar;
            for (int i = 0; i < 8; ++i) bar.bits[i] = 1 - c.bits[i];
            CHECK(balanced_count(fs, c) == balanced_count(fs, bar));
        }
    }
}

TEST_CASE("convex position gives 8 hull pairs and 4 contiguous arcs") {
    const auto fs = feasible_sets(fixture_entry());
    CHECK(fs.two_sets.size() == 8);
    CHECK(fs.four_sets.size() == 4);
    // Independent characterization: a subset of a convex polygon is
    // separable exactly when it is a contiguous arc in hull order.
    const std::vector<int> hull_order{5, 4, 3, 2, 1, 0, 7, 6};  // ccw hull of the fixture
    auto is_arc = [&](const std::vector<int>& subset) {
        std::vector<bool> in(8, false);
        for (int i : subset) in[i] = true;
        int runs = 0;
        for (int k = 0; k < 8; ++k) {
            const bool cur = in[hull_order[k]];
            const bool prev = in[hull_order[(k + 7) % 8]];
            if (cur && !prev) ++runs;
        }
        return runs == 1;
    };
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            const bool listed =
                std::find(fs.two_sets.begin(), fs.two_sets.end(), std::vector<int>{i, j}) !=
                fs.two_sets.end();
            CHECK(listed == is_arc({i, j}));
        }
    for (const auto& s : fs.four_sets) CHECK(is_arc(s));
}

TEST_CASE("no 2-set containing a deep interior point is feasible") {
    auto pts = pts2({{0, 0}, {40, 0}, {80, 7}, {77, 40}, {40, 80}, {3, 43}, {11, 19}, {39, 41}});
    // index 7 sits inside the hull of the others
    REQUIRE(is_general_position(PointConfiguration(2, pts)));
    std::vector<Point> others(pts.begin(), pts.end() - 1);
    const auto hull = convex_hull_2d(others);
    CHECK(hull.size() >= 5);
    const auto fs = feasible_sets(pts);
    for (const auto& s : fs.two_sets) CHECK(std::find(s.begin(), s.end(), 7) == s.end());
}

TEST_CASE("tally of the fixture peaks at 12 for the alternating colorings") {
    const auto tally = tally_colorings(feasible_sets(fixture_entry()));
    CHECK(tally.max_count == 12);
    CHECK(tally.argmax == std::vector<std::string>{"01010101", "10101010"});
}

TEST_CASE("summary line matches the published format") {
    const auto entry = fixture_entry();
    const auto tally = tally_colorings(feasible_sets(entry));
    CHECK(summary_line(entry, tally) ==
          "[(218, 48), (157, 54), (88, 66), (76, 72), (61, 90), (13, 177), (55, 210), "
          "(243, 53)]: [12, ['01010101', '10101010']]");
}

TEST_CASE("entry_csv reproduces the published cells") {
    const auto entry = fixture_entry();
    const auto csv = entry_csv(entry, feasible_sets(entry));
    std::vector<std::string> lines;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    REQUIRE(lines.size() == 14);  // header + 12 set rows + totals

    CHECK(lines[0].rfind("PointSet,Feasible_Set_Size,Feasible_Set_Indices,Feasible_Set_Points,"
                         "00001111,",
                         0) == 0);

    // column index of a coloring: 4 fixed columns precede the 70
    const auto& cs = balanced_colorings();
    auto col_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (cs[i].str() == name) return 4 + static_cast<int>(i);
        FAIL("unknown coloring");
        return -1;
    };
    auto cell = [&](int row, int col) {
        // split honoring quotes
        std::vector<std::string> fields;
        std::string cur;
        bool quoted = false;
        for (char ch : lines[row]) {
            if (ch == '"') quoted = !quoted;
            else if (ch == ',' && !quoted) {
                fields.push_back(cur);
                cur.clear();
            } else cur += ch;
        }
        fields.push_back(cur);
        return fields[col];
    };

    CHECK(cell(1, 0) == "(218, 48)");
    CHECK(cell(1, 1) == "2");
    CHECK(cell(1, 2) == "(0, 1)");
    CHECK(cell(1, 3) == "[(218, 48), (157, 54)]");
    const int c0 = col_of("00001111"), c1 = col_of("01010101");
    CHECK(cell(1, c0) == "00 - M");
    CHECK(cell(1, c1) == "01 - B");
    CHECK(cell(2, c0) == "01 - B");   // set (0,7)
    CHECK(cell(3, c1) == "10 - B");   // set (1,2)
    CHECK(cell(9, c0) == "0000 - M");  // set (0,1,2,3)
    CHECK(cell(9, c1) == "0101 - B");
    CHECK(cell(10, c0) == "0001 - I");  // set (0,1,2,7)
    CHECK(cell(11, c0) == "0011 - B");  // set (0,1,6,7)
    CHECK(cell(12, c0) == "0111 - I");  // set (0,5,6,7)
    CHECK(cell(13, 3) == "Total Balanced Sets");
    CHECK(cell(13, c0) == "3");
    CHECK(cell(13, c1) == "12");
    CHECK(cell(13, col_of("10101010")) == "12");
}

TEST_CASE("verify_theorem1 on a synthetic database slice is deterministic") {
    Rng rng(73);
    std::vector<OrderTypeEntry> entries{fixture_entry()};
    for (int i = 0; i < 6; ++i)
        entries.push_back(
            {i + 2, PointConfiguration(2, random_gp_points(8, 2, rng, 250))});

    const auto report = verify_theorem1(entries, 1);
    CHECK(report.global_max == 12);  // the fixture alone reaches 12
    CHECK(report.crossing_bound == 13);
    CHECK(std::find(report.argmax_entries.begin(), report.argmax_entries.end(), 1) !=
          report.argmax_entries.end());

    std::vector<OrderTypeEntry> shuffled = entries;
    std::reverse(shuffled.begin(), shuffled.end());
    const auto report2 = verify_theorem1(shuffled, 2);
    CHECK(report2.global_max == report.global_max);
    for (std::size_t i = 0; i < entries.size(); ++i)
        CHECK(report2.tallies[entries.size() - 1 - i].per_coloring ==
              report.tallies[i].per_coloring);
}

TEST_CASE("a lifted diagram realizes the balanced-count identity") {
    // Pick (points, coloring) pairs whose red and blue hulls overlap, lift
    // red points to (x, y, 1) and blue to -(x, y, 1) scaled by an interior
    // witness, and compare separation counts with the planar tally.
    Rng rng(79);
    int tested = 0;
    for (int trial = 0; trial < 40 && tested < 8; ++trial) {
        const auto pts = random_gp_points(8, 2, rng, 64);
        const auto& cs = balanced_colorings();
        const Coloring c = cs[rng.below(cs.size())];
        std::vector<Point> reds, blues;
        for (int i = 0; i < 8; ++i) (c.bits[i] ? reds : blues).push_back(pts[i]);

        const auto witness = hull_interior_witness(reds, blues);
        if (!witness) continue;  // separable red/blue split, not liftable
        ++tested;

        std::vector<Vec> vectors;
        int ri = 0, bi = 0;
        for (int i = 0; i < 8; ++i) {
            if (c.bits[i]) {
                const Rat& l = witness->first[ri++];
                vectors.push_back({l * pts[i][0], l * pts[i][1], l});
            } else {
                const Rat& mcoef = witness->second[bi++];
                vectors.push_back({-mcoef * pts[i][0], -mcoef * pts[i][1], -mcoef});
            }
        }
        const VectorConfiguration vc(3, vectors);
        REQUIRE(validate_gale(vc));

        const auto fs = feasible_sets(pts);
        CHECK(count_proper_linear_separations(vc) == balanced_count(fs, c) + 1);
    }
    CHECK(tested == 8);
}
