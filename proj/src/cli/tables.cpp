#include "qdensity/cli/tables.hpp"

#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>

#include "qdensity/cli/format.hpp"

namespace qdensity::cli {

namespace {

std::string two_decimals(int hundredths) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%d.%02d", hundredths / 100, hundredths % 100);
    return buf;
}

TablePoint real_point(int hundredths) {
    const double r = hundredths / 100.0;
    return {two_decimals(hundredths), {r, 0.0}, PointKind::Q, r};
}

TablePoint imaginary_point(int hundredths) {
    const double r = hundredths / 100.0;
    return {two_decimals(hundredths) + "i", {0.0, r}, PointKind::Q, r};
}

std::vector<TablePoint> real_range(int from, int to) {
    std::vector<TablePoint> out;
    for (int h = from; h <= to; ++h) out.push_back(real_point(h));
    return out;
}

} // namespace

const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids = {"ex1.1", "ex4.1-real", "ex4.1-imag", "ex4.2", "ex4.3"};
    return ids;
}

TableDefinition table_definition(std::string_view id) {
    if (id == "ex1.1") {
        TableDefinition def{"ex1.1", "1 mod 2", {}};
        for (int h = 10; h >= 1; --h) {
            const double eps = h / 100.0;
            def.points.push_back({"1+" + two_decimals(h) + "i", {1.0, eps}, PointKind::Z, eps});
        }
        return def;
    }
    if (id == "ex4.1-real") {
        TableDefinition def{"ex4.1-real", "1 mod 3", {}};
        for (int h = 70; h <= 95; h += 5) def.points.push_back(real_point(h));
        return def;
    }
    if (id == "ex4.1-imag") {
        TableDefinition def{"ex4.1-imag", "1 mod 3", {}};
        for (int h : {70, 75, 80, 85, 90, 95, 97, 98, 99}) def.points.push_back(imaginary_point(h));
        return def;
    }
    if (id == "ex4.2") return {"ex4.2", "kfree 2 5", real_range(90, 97)};
    if (id == "ex4.3") return {"ex4.3", "kfree 4 5", real_range(90, 98)};
    throw std::invalid_argument("unknown table id '" + std::string(id) + "'");
}

std::vector<TableRow> compute_table(const TableDefinition& def, numeric::Route route,
                                    const numeric::EvalOptions& opts) {
    const auto spec = subsets::parse(def.subset);
    std::vector<std::future<numeric::EvalResult>> jobs;
    jobs.reserve(def.points.size());
    for (const auto& p : def.points) {
        jobs.push_back(std::async(std::launch::async, [&spec, p, route, opts] {
            const auto q = p.kind == PointKind::Z ? numeric::q_of_z(p.coordinate)
                                                  : numeric::ComplexPoint(p.coordinate);
            return numeric::evaluate(spec, q, route, opts);
        }));
    }
    std::vector<TableRow> rows;
    rows.reserve(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) rows.push_back({def.points[i], jobs[i].get()});
    return rows;
}

std::string render_csv(const std::vector<TableRow>& rows, int digits) {
    std::ostringstream out;
    out << "input,value_re,value_im,bound,terms\n";
    for (const auto& row : rows) {
        char bound[32];
        std::snprintf(bound, sizeof bound, "%.3e", row.result.bound);
        out << row.point.input << ',' << truncate_decimal(row.result.value.real(), digits) << ','
            << truncate_decimal(row.result.value.imag(), digits) << ',' << bound << ','
            << row.result.terms_used << '\n';
    }
    return out.str();
}

nlohmann::json render_json(const TableDefinition& def, const std::vector<TableRow>& rows, int digits) {
    nlohmann::json out = {{"table", def.id}, {"subset", def.subset}, {"rows", nlohmann::json::array()}};
    for (const auto& row : rows) {
        auto entry = eval_result_json(row.result, digits);
        entry["input"] = row.point.input;
        out["rows"].push_back(std::move(entry));
    }
    return out;
}

std::string render_plot_data(const std::vector<TableRow>& rows, int digits) {
    std::ostringstream out;
    for (const auto& row : rows) {
        char x[32];
        std::snprintf(x, sizeof x, "%g", row.point.abscissa);
        out << x << ' ' << truncate_decimal(row.result.value.real(), digits)
            << ' ' << truncate_decimal(row.result.value.imag(), digits) << '\n';
    }
    return out.str();
}

} // namespace qdensity::cli
