// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "qdensity/cli/format.hpp"
#include "qdensity/cli/tables.hpp"
#include "qdensity/numeric.hpp"
#include "qdensity/partitions.hpp"
#include "qdensity/pell.hpp"
#include "qdensity/series.hpp"
#include "qdensity/subsets.hpp"

using namespace qdensity;
using numeric::Complex;
using series::TruncatedSeries;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        passed = false;
        detail += (detail.empty() ? "" : "; ") + why;
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit;  // seconds, 0 = none
    std::function<Outcome()> run;
};

std::string show(Complex z, int digits) { return cli::format_complex(z, digits); }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1e", x);
    return buf;
}

/// Evaluates a table with f_direct and compares every row with its golden line.
Outcome table_against_golden(const std::string& id, double eps, double max_bound, int shown_digits) {
    Outcome out;
    numeric::EvalOptions opts;
    opts.eps = eps;
    const auto def = cli::table_definition(id);
    const auto rows = cli::compute_table(def, numeric::Route::Direct, opts);
    const auto expected = golden::load(id);
    int matched = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i].result;
        if (r.bound > max_bound) out.fail(expected[i].input + " bound " + sci(r.bound));
        if (golden::matches(expected[i], r.value)) {
            ++matched;
        } else {
            const std::string got = expected[i].approximate ? show(r.value, shown_digits)
                                                            : cli::truncate_decimal(r.value.real(), shown_digits);
            out.fail(expected[i].input + " computed " + got + " printed " + expected[i].printed);
        }
    }
    out.detail = std::to_string(matched) + "/" + std::to_string(rows.size()) + " rows match" +
                 (out.detail.empty() ? "" : ": " + out.detail);
    return out;
}

Outcome same_series(const std::string& what, const TruncatedSeries& a, const TruncatedSeries& b, Outcome out = {}) {
    if (a.order() != b.order()) {
        out.fail(what + ": orders differ");
        return out;
    }
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a[i] != b[i]) {
            out.fail(what + ": coefficient " + std::to_string(i) + " differs");
            break;
        }
    }
    return out;
}

const std::vector<std::string> kSpecs = {"1 mod 2", "2 mod 2", "1 mod 3", "kfree 2 3"};

Outcome identities() {
    constexpr std::size_t n = 200;
    const auto theta = series::theta_square_series(n);
    const auto euler = series::euler_series(n);
    const auto one = TruncatedSeries::constant(1, n);
    auto out = same_series("odd smallest parts", series::smallest_part_series(subsets::parse("1 mod 2"), n), theta);
    out = same_series("even smallest parts", series::smallest_part_series(subsets::parse("2 mod 2"), n),
                      one - theta - euler, out);
    if (out.passed) out.detail = "both identities exact to order 200";
    return out;
}

Outcome duality() {
    Outcome out;
    for (const auto& s : kSpecs) {
        const auto spec = subsets::parse(s);
        out = same_series(s, series::smallest_part_series(spec, 200), series::largest_part_series(spec, 200), out);
    }
    if (out.passed) out.detail = "4 specs exact to order 200";
    return out;
}

Outcome oracle() {
    Outcome out;
    constexpr unsigned bound = 40;
    for (const auto& s : kSpecs) {
        const auto spec = subsets::parse(s);
        const auto series = series::smallest_part_series(spec, bound);
        for (unsigned n = 1; n <= bound; ++n) {
            if (series[n] != partitions::f_s_coefficient_oracle(spec, n, bound)) {
                out.fail(s + " at n = " + std::to_string(n));
                break;
            }
        }
    }
    if (out.passed) out.detail = "4 specs, n <= 40";
    return out;
}

Outcome distinct_parts() {
    Outcome out;
    for (unsigned n = 1; n <= 60; ++n) {
        const auto c = partitions::distinct_counts(n);
        const auto k = pell::classify(n);
        if (c.odd_difference() != k.predicted_odd_difference || c.even_difference() != k.predicted_even_difference) {
            out.fail("enumeration differs at n = " + std::to_string(n));
        }
    }
    constexpr std::size_t order = 10'000;
    const auto odd = series::smallest_part_series(subsets::parse("1 mod 2"), order);
    const auto even = series::smallest_part_series(subsets::parse("2 mod 2"), order);
    std::vector<std::uint64_t> both;
    for (std::size_t n = 1; n <= order; ++n) {
        const auto k = pell::classify(n);
        if (-odd[n] != k.predicted_odd_difference || -even[n] != k.predicted_even_difference) {
            out.fail("series differs at n = " + std::to_string(n));
            break;
        }
        if (k.is_square && k.is_pentagonal) both.push_back(n);
    }
    if (both != std::vector<std::uint64_t>{1, 100, 9801}) out.fail("square pentagonal numbers not {1, 100, 9801}");
    if (out.passed) out.detail = "n <= 60 enumerated, n <= 10000 by series, coincidences 1, 100, 9801";
    return out;
}

Outcome densities() {
    Outcome out;
    if (subsets::density(subsets::parse("kfree 2 5")) != subsets::Rational(16, 25)) out.fail("kfree 2 5");
    if (subsets::density(subsets::parse("kfree 4 5")) != subsets::Rational(208, 225)) out.fail("kfree 4 5");
    const auto z = subsets::zeta_reciprocal_even(4);
    if (z.coefficient != 90 || std::abs(z.value - 0.923938) > 1e-6) out.fail("1/zeta(4) = " + std::to_string(z.value));
    if (out.passed) out.detail = "16/25, 208/225, 1/zeta(4) = " + cli::truncate_decimal(z.value, 9);
    return out;
}

Outcome limits() {
    Outcome out;
    numeric::EvalOptions opts;
    opts.eps = 1e-8;
    const auto half = numeric::f_direct(subsets::parse("1 mod 2"), numeric::ComplexPoint(0.999), opts);
    if (!(std::abs(half.value - 0.5) < 1e-3)) out.fail("1 mod 2 at 0.999: " + show(half.value, 9));
    const auto third = numeric::f_direct(subsets::parse("1 mod 3"), numeric::ComplexPoint({0.0, 0.998}), opts);
    if (!(std::abs(third.value - 1.0 / 3.0) < 1e-2)) out.fail("1 mod 3 at 0.998i: " + show(third.value, 9));
    if (out.passed) {
        out.detail = "0.999 -> " + show(half.value, 9) + ", 0.998i -> " + show(third.value, 9);
    }
    return out;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "z = 1 + eps i table, 6 printed digits, bound <= 1e-8", 1.0,
         [] { return table_against_golden("ex1.1", 1e-10, 1e-8, 6); }},
        {2, "1 mod 3 real table, 9 printed digits, bound <= 1e-11", 1.0,
         [] { return table_against_golden("ex4.1-real", 1e-12, 1e-11, 9); }},
        {3, "1 mod 3 imaginary table within 1e-5", 5.0,
         [] { return table_against_golden("ex4.1-imag", 1e-10, 1e-5, 6); }},
        {4, "kfree 2 5 table, 6 printed digits", 2.0, [] { return table_against_golden("ex4.2", 1e-10, 1e-6, 6); }},
        {5, "kfree 4 5 table, 6 printed digits", 2.0, [] { return table_against_golden("ex4.3", 1e-10, 1e-6, 6); }},
        {6, "theta identities to order 200", 5.0, identities},
        {7, "smallest/largest part duality to order 200", 10.0, duality},
        {8, "series equal partition sums for n <= 40", 0.0, oracle},
        {9, "distinct-part differences match square/pentagonal predictions", 0.0, distinct_parts},
        {10, "exact densities and 1/zeta(4)", 0.0, densities},
        {11, "radial behaviour near 1 and i", 0.0, limits},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0 && secs >= c.time_limit) o.fail("took " + std::to_string(secs) + " s");
        if (!o.passed) ++failures;
        std::printf("%s criterion %2d: %s (%.3f s) - %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
