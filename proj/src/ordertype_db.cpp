#include "hypercross/ordertype_db.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hypercross {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

Point decode_token(const std::string& tok, int line_no) {
    if (tok.size() != 4)
        throw std::invalid_argument("ordertype db line " + std::to_string(line_no) +
                                    ": token '" + tok + "' is not 4 hex digits");
    int v[4];
    for (int i = 0; i < 4; ++i) {
        v[i] = hex_digit(tok[i]);
        if (v[i] < 0)
            throw std::invalid_argument("ordertype db line " + std::to_string(line_no) +
                                        ": non-hex digit in token '" + tok + "'");
    }
    return point2(v[0] * 16 + v[1], v[2] * 16 + v[3]);
}

}  // namespace

std::vector<OrderTypeEntry> parse_hex_pointsets(std::istream& in) {
    std::vector<OrderTypeEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() != 8)
            throw std::invalid_argument("ordertype db line " + std::to_string(line_no) + ": expected 8 tokens, got " +
                                        std::to_string(tokens.size()));
        std::vector<Point> pts;
        pts.reserve(8);
        for (const auto& t : tokens) pts.push_back(decode_token(t, line_no));
        entries.push_back(
            {static_cast<int>(entries.size()) + 1, PointConfiguration(2, std::move(pts))});
    }
    return entries;
}

std::vector<OrderTypeEntry> parse_hex_pointsets(const std::string& text) {
    std::istringstream in(text);
    return parse_hex_pointsets(in);
}

std::string serialize_hex_pointsets(const std::vector<OrderTypeEntry>& entries) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (const auto& e : entries) {
        for (int i = 0; i < 8; ++i) {
            const long x = static_cast<long>(numerator(e.points.points[i][0]));
            const long y = static_cast<long>(numerator(e.points.points[i][1]));
            if (i) out += ' ';
            out += digits[(x >> 4) & 15];
            out += digits[x & 15];
            out += digits[(y >> 4) & 15];
            out += digits[y & 15];
        }
        out += '\n';
    }
    return out;
}

std::string decimal_pointset_line(const OrderTypeEntry& entry) {
    std::ostringstream out;
    for (const auto& p : entry.points.points)
        out << '(' << p[0] << ", " << p[1] << "), ";
    return out.str();
}

OrderTypeSignature signature(const OrderTypeEntry& entry) {
    if (entry.points.size() != 8)
        throw std::invalid_argument("signature: entry must have 8 points");
    OrderTypeSignature sig;
    int t = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int k = j + 1; k < 8; ++k) {
                const int o =
                    orient2d(entry.points.points[i], entry.points.points[j], entry.points.points[k]);
                if (o == 0)
                    throw std::invalid_argument("signature: three collinear points (degenerate entry)");
                sig.signs[t++] = static_cast<signed char>(o);
            }
    return sig;
}

DbReport validate_db(const std::vector<OrderTypeEntry>& entries) {
    DbReport report;
    report.entry_count = entries.size();
    report.count_ok = entries.size() == 3315;
    if (!report.count_ok)
        report.failures.push_back("entry count " + std::to_string(entries.size()) + " != 3315");

    report.coords_ok = true;
    report.general_position_ok = true;
    std::map<std::string, int> line_seen;
    for (const auto& e : entries) {
        if (e.points.size() != 8) {
            report.coords_ok = false;
            report.failures.push_back("entry " + std::to_string(e.index) + ": not 8 points");
            continue;
        }
        for (const auto& p : e.points.points) {
            for (int c = 0; c < 2; ++c) {
                if (denominator(p[c]) != 1 || p[c] < 0 || p[c] > 255) {
                    report.coords_ok = false;
                    report.failures.push_back("entry " + std::to_string(e.index) +
                                              ": coordinate out of [0, 255]");
                }
            }
        }
        if (!is_general_position(e.points)) {
            report.general_position_ok = false;
            report.failures.push_back("entry " + std::to_string(e.index) +
                                      ": three collinear points");
        }
        ++line_seen[serialize_hex_pointsets({e})];
    }
    for (const auto& [line, count] : line_seen)
        if (count > 1) report.duplicate_lines += count - 1;
    return report;
}

std::vector<OrderTypeEntry> load_db_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ordertype database: " + path);
    return parse_hex_pointsets(in);
}

}  // namespace hypercross
