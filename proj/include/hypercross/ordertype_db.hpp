#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypercross/geometry.hpp"

namespace hypercross {

// One representative point set from the 8-point order-type database:
// eight points with byte coordinates, no three collinear.
struct OrderTypeEntry {
    int index = 0;  // 1-based line number in the database file
    PointConfiguration points;
};

// Orientation of every index triple i<j<k in lexicographic order.
struct OrderTypeSignature {
    std::array<signed char, 56> signs{};

    bool operator==(const OrderTypeSignature&) const = default;
    bool operator<(const OrderTypeSignature& o) const { return signs < o.signs; }
};

// Hex database format: one point set per line, eight tokens of four hex
// digits, token "xxyy" encoding the point (0xXX, 0xYY). Both CR-LF and LF
// line endings and upper- or lowercase digits are accepted.
std::vector<OrderTypeEntry> parse_hex_pointsets(std::istream& in);
std::vector<OrderTypeEntry> parse_hex_pointsets(const std::string& text);

// Lowercase hex, LF line endings.
std::string serialize_hex_pointsets(const std::vector<OrderTypeEntry>& entries);

// The converted decimal form, one line per point set:
// "(x1, y1), (x2, y2), ..., (x8, y8), "
std::string decimal_pointset_line(const OrderTypeEntry& entry);

OrderTypeSignature signature(const OrderTypeEntry& entry);

struct DbReport {
    std::size_t entry_count = 0;
    bool count_ok = false;        // exactly 3315 entries
    bool coords_ok = false;       // every coordinate within [0, 255]
    bool general_position_ok = false;
    std::size_t duplicate_lines = 0;  // informational
    std::vector<std::string> failures;

    bool pass() const { return count_ok && coords_ok && general_position_ok; }
};

DbReport validate_db(const std::vector<OrderTypeEntry>& entries);

std::vector<OrderTypeEntry> load_db_file(const std::string& path);

}  // namespace hypercross
