#include "hypercross/theorem1.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hypercross/parallel.hpp"

namespace hypercross {

std::string Coloring::str() const {
    std::string s(8, '0');
    for (int i = 0; i < 8; ++i)
        if (bits[i]) s[i] = '1';
    return s;
}

int Coloring::ones(const std::vector<int>& subset) const {
    int c = 0;
    for (int i : subset) c += bits[i];
    return c;
}

const std::vector<Coloring>& balanced_colorings() {
    static const std::vector<Coloring> all = [] {
        std::vector<Coloring> cs;
        for (int v = 0; v < 256; ++v) {
            if (__builtin_popcount(v) != 4) continue;
            Coloring c;
            for (int i = 0; i < 8; ++i) c.bits[i] = (v >> (7 - i)) & 1;
            cs.push_back(c);
        }
        return cs;  // ascending v = lexicographic bit strings
    }();
    return all;
}

FeasibleSets feasible_sets(const std::vector<Point>& pts) {
    if (pts.size() != 8) throw std::invalid_argument("feasible_sets: need 8 points");

    auto split = [&](const std::vector<int>& subset) {
        std::vector<Point> inside, rest;
        std::vector<bool> member(8, false);
        for (int i : subset) member[i] = true;
        for (int i = 0; i < 8; ++i) (member[i] ? inside : rest).push_back(pts[i]);
        return separable_2d(inside, rest);
    };

    FeasibleSets fs;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            if (split({i, j})) fs.two_sets.push_back({i, j});

    // 4-subsets containing index 0 = the lexicographically first 35 of 70.
    for (int j = 1; j < 8; ++j)
        for (int k = j + 1; k < 8; ++k)
            for (int l = k + 1; l < 8; ++l)
                if (split({0, j, k, l})) fs.four_sets.push_back({0, j, k, l});
    return fs;
}

FeasibleSets feasible_sets(const OrderTypeEntry& entry) {
    return feasible_sets(entry.points.points);
}

int balanced_count(const FeasibleSets& fs, const Coloring& c) {
    int total = 0;
    for (const auto& s : fs.two_sets)
        if (c.ones(s) == 1) ++total;
    for (const auto& s : fs.four_sets)
        if (c.ones(s) == 2) ++total;
    return total;
}

bool has_monochromatic_feasible_4set(const FeasibleSets& fs, const Coloring& c) {
    for (const auto& s : fs.four_sets) {
        const int ones = c.ones(s);
        if (ones == 0 || ones == 4) return true;  // the complement is then monochromatic too
    }
    return false;
}

ColoringTally tally_colorings(const FeasibleSets& fs) {
    ColoringTally tally;
    for (const Coloring& c : balanced_colorings())
        tally.per_coloring.push_back(balanced_count(fs, c));
    for (int v : tally.per_coloring) tally.max_count = std::max(tally.max_count, v);
    const auto& cs = balanced_colorings();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (tally.per_coloring[i] == tally.max_count) tally.argmax.push_back(cs[i].str());
    return tally;
}

Theorem1Report verify_theorem1(const std::vector<OrderTypeEntry>& entries, unsigned workers) {
    Theorem1Report report;
    report.feasible.resize(entries.size());
    report.tallies.resize(entries.size());

    std::vector<long long> mono(entries.size(), 0);
    parallel_for(entries.size(), workers, [&](std::size_t i) {
        report.feasible[i] = feasible_sets(entries[i]);
        report.tallies[i] = tally_colorings(report.feasible[i]);
        for (const Coloring& c : balanced_colorings())
            if (has_monochromatic_feasible_4set(report.feasible[i], c)) ++mono[i];
    });

    for (std::size_t i = 0; i < entries.size(); ++i) {
        report.monochromatic_pairs += mono[i];
        report.global_max = std::max(report.global_max, report.tallies[i].max_count);
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (report.tallies[i].max_count == report.global_max)
            report.argmax_entries.push_back(entries[i].index);
    report.crossing_bound = report.global_max + 1;  // the empty balanced partition
    return report;
}

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string point_tuple(const Point& p) {
    std::ostringstream out;
    out << '(' << p[0] << ", " << p[1] << ')';
    return out.str();
}

std::string subset_points(const std::vector<Point>& pts, const std::vector<int>& subset) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < subset.size(); ++i)
        out << (i ? ", " : "") << point_tuple(pts[subset[i]]);
    out << ']';
    return out.str();
}

std::string subset_indices(const std::vector<int>& subset) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < subset.size(); ++i) out << (i ? ", " : "") << subset[i];
    out << ')';
    return out.str();
}

}  // namespace

std::string entry_csv(const OrderTypeEntry& entry, const FeasibleSets& fs) {
    const auto& colorings = balanced_colorings();
    std::vector<std::vector<int>> sets = fs.two_sets;
    sets.insert(sets.end(), fs.four_sets.begin(), fs.four_sets.end());

    std::ostringstream out;
    out << "PointSet,Feasible_Set_Size,Feasible_Set_Indices,Feasible_Set_Points";
    for (const Coloring& c : colorings) out << ',' << c.str();
    out << '\n';

    const std::size_t rows = std::max<std::size_t>(8, sets.size());
    for (std::size_t r = 0; r < rows; ++r) {
        out << (r < 8 ? csv_quote(point_tuple(entry.points.points[r])) : "");
        if (r < sets.size()) {
            const auto& s = sets[r];
            out << ',' << s.size();
            out << ',' << csv_quote(subset_indices(s));
            out << ',' << csv_quote(subset_points(entry.points.points, s));
            for (const Coloring& c : colorings) {
                std::string cell;
                for (int i : s) cell += static_cast<char>('0' + c.bits[i]);
                const int ones = c.ones(s);
                if (static_cast<int>(s.size()) == 2) cell += ones == 1 ? " - B" : " - M";
                else cell += ones == 2 ? " - B" : (ones == 0 || ones == 4 ? " - M" : " - I");
                out << ',' << cell;
            }
        } else {
            out << ",,,";
            for (std::size_t i = 0; i < colorings.size(); ++i) out << ',';
        }
        out << '\n';
    }

    out << ",,,Total Balanced Sets";
    for (const Coloring& c : colorings) out << ',' << balanced_count(fs, c);
    out << '\n';
    return out.str();
}

std::string summary_line(const OrderTypeEntry& entry, const ColoringTally& tally) {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < entry.points.size(); ++i)
        out << (i ? ", " : "") << point_tuple(entry.points.points[i]);
    out << "]: [" << tally.max_count << ", [";
    for (std::size_t i = 0; i < tally.argmax.size(); ++i)
        out << (i ? ", " : "") << '\'' << tally.argmax[i] << '\'';
    out << "]]";
    return out.str();
}

}  // namespace hypercross
