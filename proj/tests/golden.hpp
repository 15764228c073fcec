#pragma once

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdensity/cli/format.hpp"

namespace golden {

/// One line "input | printed". A printed value starting with "≈" is an
/// approximation; otherwise its digits are exact truncations.
struct Row {
    std::string input;
    std::string printed;
    bool approximate = false;
    qdensity::numeric::Complex printed_value;
};

inline std::string trim(std::string s) {
    const auto a = s.find_first_not_of(" \t");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

inline std::vector<Row> load(const std::string& table_id) {
    const std::string path = std::string(QDENSITY_GOLDEN_DIR) + "/" + table_id + ".txt";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing golden file " + path);
    std::vector<Row> rows;
    for (std::string line; std::getline(in, line);) {
        if (trim(line).empty()) continue;
        const auto bar = line.find('|');
        Row r{trim(line.substr(0, bar)), trim(line.substr(bar + 1)), false, {}};
        std::string digits = r.printed;
        const std::string approx = "≈";
        if (digits.rfind(approx, 0) == 0) {
            r.approximate = true;
            digits = trim(digits.substr(approx.size()));
        }
        while (!digits.empty() && digits.back() == '.') digits.pop_back();
        r.printed_value = qdensity::cli::parse_complex(digits);
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Exact rows: the real part truncated to the printed length reproduces the
/// printed digits. Approximate rows: within `tolerance` in modulus.
inline bool matches(const Row& row, qdensity::numeric::Complex value, double tolerance = 1e-5) {
    if (row.approximate) return std::abs(value - row.printed_value) <= tolerance;
    return qdensity::cli::matches_printed(value.real(), row.printed);
}

} // namespace golden
