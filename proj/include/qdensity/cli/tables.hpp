#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qdensity/numeric.hpp"

namespace qdensity::cli {

enum class PointKind { Q, Z };

struct TablePoint {
    std::string input;            // as shown in the first column
    numeric::Complex coordinate;  // q, or z when kind == Z
    PointKind kind = PointKind::Q;
    double abscissa = 0.0;        // x value for plot data
};

struct TableDefinition {
    std::string id;
    std::string subset;  // DSL
    std::vector<TablePoint> points;
};

/// "ex1.1", "ex4.1-real", "ex4.1-imag", "ex4.2", "ex4.3".
const std::vector<std::string>& table_ids();

/// Throws std::invalid_argument for an unknown id.
TableDefinition table_definition(std::string_view id);

struct TableRow {
    TablePoint point;
    numeric::EvalResult result;
};

/// Rows are evaluated concurrently; the output keeps the order of `def.points`.
std::vector<TableRow> compute_table(const TableDefinition& def, numeric::Route route,
                                    const numeric::EvalOptions& opts = {});

/// Header "input,value_re,value_im,bound,terms".
std::string render_csv(const std::vector<TableRow>& rows, int digits);

nlohmann::json render_json(const TableDefinition& def, const std::vector<TableRow>& rows, int digits);

/// One "x re im" line per row.
std::string render_plot_data(const std::vector<TableRow>& rows, int digits);

} // namespace qdensity::cli
