#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdensity/cli/format.hpp"
#include "qdensity/cli/tables.hpp"
#include "qdensity/cli/verify.hpp"
#include "qdensity/errors.hpp"
#include "qdensity/numeric.hpp"
#include "qdensity/partitions.hpp"
#include "qdensity/pell.hpp"
#include "qdensity/series.hpp"
#include "qdensity/subsets.hpp"

namespace {

using namespace qdensity;
using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct EvalFlags {
    double eps = numeric::EvalOptions{}.eps;
    std::uint64_t max_terms = numeric::EvalOptions{}.max_terms;

    void attach(CLI::App* cmd) {
        cmd->add_option("--eps", eps, "Target truncation error")->check(CLI::PositiveNumber);
        cmd->add_option("--max-terms", max_terms, "Cap on product/sum length")->check(CLI::PositiveNumber);
    }

    numeric::EvalOptions options() const {
        numeric::EvalOptions o;
        o.eps = eps;
        o.max_terms = max_terms;
        o = numeric::EvalOptions::from_environment(o);
        o.validate();
        return o;
    }
};

const std::map<std::string, std::string> kRoutes = {{"direct", "direct"}, {"sieve", "sieve"}, {"both", "both"}};

numeric::Route route_of(const std::string& name) {
    return name == "sieve" ? numeric::Route::Sieve : numeric::Route::Direct;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << text;
}

int run_eval(const std::string& subset, const std::optional<std::string>& q_text,
             const std::optional<std::string>& z_text, const std::string& route, int digits,
             const std::string& format, const EvalFlags& flags) {
    const auto spec = subsets::parse(subset);
    const auto opts = flags.options();
    std::optional<numeric::Complex> z;
    numeric::Complex qv;
    if (z_text) {
        z = cli::parse_complex(*z_text);
        qv = numeric::q_of_z(*z).value();
    } else {
        qv = cli::parse_complex(*q_text);
    }
    const numeric::ComplexPoint q(qv);
    const std::string input = z_text ? *z_text : *q_text;

    std::vector<std::pair<std::string, numeric::EvalResult>> results;
    if (route != "sieve") results.emplace_back("direct", numeric::f_direct(spec, q, opts));
    if (route != "direct") results.emplace_back("sieve", numeric::f_sieve(spec, q, opts));

    if (format == "csv") {
        std::cout << "input,value_re,value_im,bound,terms\n";
        for (const auto& [name, r] : results) {
            std::cout << input << ',' << cli::truncate_decimal(r.value.real(), digits) << ','
                      << cli::truncate_decimal(r.value.imag(), digits) << ',' << r.bound << ',' << r.terms_used
                      << '\n';
        }
        return 0;
    }

    json out = {{"subset", subsets::render(spec)}, {"q", cli::complex_json(qv, 17)}};
    if (z) out["z"] = cli::complex_json(*z, 17);
    if (results.size() == 1) {
        out["route"] = results[0].first;
        out.update(cli::eval_result_json(results[0].second, digits));
    } else {
        for (const auto& [name, r] : results) out[name] = cli::eval_result_json(r, digits);
        out["difference"] = std::abs(results[0].second.value - results[1].second.value);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_density(const std::string& subset, int digits, const std::string& format) {
    const auto spec = subsets::parse(subset);
    const auto d = subsets::density(spec);
    std::optional<subsets::ZetaReciprocal> ref;
    if (const auto* kf = std::get_if<subsets::KFree>(&spec.variant()); kf && kf->power % 2 == 0) {
        ref = subsets::zeta_reciprocal_even(kf->power);
    }
    const std::string rational = d.str();
    const std::string decimal = cli::rational_decimal(d, digits);

    if (format == "json") {
        json out = {{"subset", subsets::render(spec)}, {"density", rational}, {"decimal", decimal}};
        if (ref) {
            out["reference"] = {{"k", ref->k},
                                {"coefficient", ref->coefficient.str()},
                                {"value", cli::truncate_decimal(ref->value, digits)}};
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "density " << rational << " = " << decimal << '\n';
    if (ref) {
        std::cout << "reference 1/zeta(" << ref->k << ") = " << ref->coefficient.str() << "/pi^" << ref->k << " = "
                  << cli::truncate_decimal(ref->value, digits) << '\n';
    }
    return 0;
}

int run_pell(std::size_t count) {
    json out = json::array();
    for (const auto& s : pell::pell_solutions(count)) {
        out.push_back({{"k", s.k},
                       {"x", s.x.str()},
                       {"y", s.y.str()},
                       {"m", s.pentagonal_index().str()},
                       {"n", s.square_root().str()},
                       {"value", s.coincidence().str()}});
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_oracle_check(const std::string& subset, unsigned bound) {
    const auto spec = subsets::parse(subset);
    const auto s = series::smallest_part_series(spec, bound);
    json rows = json::array();
    bool ok = true;
    for (unsigned n = 1; n <= bound; ++n) {
        const auto oracle = partitions::f_s_coefficient_oracle(spec, n, bound);
        const bool same = s[n] == oracle;
        ok = ok && same;
        rows.push_back({{"n", n}, {"series", s[n].str()}, {"oracle", oracle}, {"match", same}});
    }
    std::cout << json{{"subset", subsets::render(spec)}, {"passed", ok}, {"rows", rows}}.dump(2) << '\n';
    return ok ? 0 : kExitVerifyFailed;
}

int run_series(const std::string& subset, std::size_t order, const std::string& form) {
    const auto spec = subsets::parse(subset);
    const auto s = form == "largest" ? series::largest_part_series(spec, order)
                                     : series::smallest_part_series(spec, order);
    std::cout << series::to_json(s).dump() << '\n';
    return 0;
}

int run_radial(const std::string& subset, const std::string& root, std::vector<double> radii, unsigned count,
               const std::string& route, int digits, const EvalFlags& flags) {
    const auto spec = subsets::parse(subset);
    const auto slash = root.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("--root expects h/m");
    const numeric::RootOfUnity zeta(std::stoll(root.substr(0, slash)), std::stoull(root.substr(slash + 1)));
    if (radii.empty()) radii = numeric::geometric_radii(count);
    json out = json::array();
    for (const auto& e : numeric::radial_sequence(spec, zeta, radii, flags.options(), route_of(route))) {
        json row = {{"radius", e.radius}};
        if (e.result) row.update(cli::eval_result_json(*e.result, digits));
        else row["error"] = e.error;
        out.push_back(std::move(row));
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic densities as radial limits of partition q-series"};
    app.require_subcommand(1);

    int digits = -1;
    std::string subset, route = "direct", format, output;
    std::optional<std::string> q_text, z_text, subset_opt;
    std::optional<std::size_t> order;
    std::optional<unsigned> bound;
    EvalFlags flags;

    auto* eval = app.add_subcommand("eval", "Evaluate F_S at one point");
    eval->add_option("--subset", subset, "Subset DSL, e.g. \"1 mod 3\" or \"kfree 2 5\"")->required();
    auto* q_opt = eval->add_option("--q", q_text, "Point q with |q| < 1");
    auto* z_opt = eval->add_option("--z", z_text, "Upper half-plane z, mapped to q = exp(-2 pi i / z)");
    q_opt->excludes(z_opt);
    eval->add_option("--route", route)->transform(CLI::IsMember(kRoutes));
    eval->add_option("--digits", digits, "Decimals printed (truncated)");
    eval->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    flags.attach(eval);

    std::string table_id;
    bool plot_data = false;
    auto* table = app.add_subcommand("table", "Reproduce a numeric table");
    table->add_option("id", table_id, "ex1.1, ex4.1-real, ex4.1-imag, ex4.2 or ex4.3")->required();
    table->add_option("--route", route)->check(CLI::IsMember({"direct", "sieve"}));
    table->add_option("--digits", digits);
    table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    table->add_flag("--plot-data", plot_data, "Emit 'x re im' lines");
    table->add_option("--output", output, "Write to a file instead of stdout");
    flags.attach(table);

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run an invariant suite and print a JSON report");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(cli::verify_suites()));
    verify->add_option("--order", order, "Series order");
    verify->add_option("--bound", bound, "Partition enumeration bound");
    verify->add_option("--subset", subset_opt);
    flags.attach(verify);

    auto* density = app.add_subcommand("density", "Exact density of a subset");
    density->add_option("--subset", subset)->required();
    density->add_option("--digits", digits);
    density->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::size_t count = 5;
    auto* pell = app.add_subcommand("pell", "Solutions of x^2 - 6y^2 = 1 as square pentagonal numbers");
    pell->add_option("--count", count)->check(CLI::PositiveNumber);

    unsigned oracle_bound = 40;
    auto* oracle = app.add_subcommand("oracle-check", "Compare series coefficients with partition sums");
    oracle->add_option("--subset", subset)->required();
    oracle->add_option("--bound", oracle_bound)->check(CLI::Range(1u, partitions::kDefaultOracleBound));

    std::size_t series_order = 20;
    std::string form = "smallest";
    auto* ser = app.add_subcommand("series", "Print the truncated series of F_S as JSON");
    ser->add_option("--subset", subset)->required();
    ser->add_option("--order", series_order);
    ser->add_option("--form", form)->check(CLI::IsMember({"smallest", "largest"}));

    std::string root = "0/1";
    std::vector<double> radii;
    unsigned radial_count = 20;
    auto* radial = app.add_subcommand("radial", "Values along a radius toward a root of unity");
    radial->add_option("--subset", subset)->required();
    radial->add_option("--root", root, "h/m for exp(2 pi i h/m)");
    radial->add_option("--radii", radii)->delimiter(',');
    radial->add_option("--count", radial_count, "Geometric radii 1 - 2^-j, j = 1..count");
    radial->add_option("--route", route)->check(CLI::IsMember({"direct", "sieve"}));
    radial->add_option("--digits", digits);
    flags.attach(radial);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*eval) {
            if (!q_text && !z_text) throw std::invalid_argument("eval needs --q or --z");
            return run_eval(subset, q_text, z_text, route, digits < 0 ? 15 : digits,
                            format.empty() ? "json" : format, flags);
        }
        if (*table) {
            const auto def = cli::table_definition(table_id);
            const int d = digits < 0 ? 9 : digits;
            const auto rows = cli::compute_table(def, route_of(route), flags.options());
            if (plot_data) emit(cli::render_plot_data(rows, d), output);
            else if (format == "json") emit(cli::render_json(def, rows, d).dump(2) + "\n", output);
            else emit(cli::render_csv(rows, d), output);
            return 0;
        }
        if (*verify) {
            cli::VerifyParams params{order, bound, subset_opt, flags.options()};
            const auto report = cli::run_verify(suite, params);
            std::cout << report.to_json().dump(2) << '\n';
            return report.passed() ? 0 : kExitVerifyFailed;
        }
        if (*density) return run_density(subset, digits < 0 ? 6 : digits, format.empty() ? "text" : format);
        if (*pell) return run_pell(count);
        if (*oracle) return run_oracle_check(subset, oracle_bound);
        if (*ser) return run_series(subset, series_order, form);
        if (*radial) return run_radial(subset, root, radii, radial_count, route, digits < 0 ? 12 : digits, flags);
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
