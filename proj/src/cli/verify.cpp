#include "qdensity/cli/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qdensity/partitions.hpp"
#include "qdensity/pell.hpp"
#include "qdensity/series.hpp"
#include "qdensity/subsets.hpp"

namespace qdensity::cli {

namespace {

using numeric::Complex;
using series::TruncatedSeries;
using subsets::SubsetSpec;

constexpr std::size_t kDefaultOrder = 200;
constexpr std::size_t kDistinctPartOrder = 10'000;
constexpr unsigned kOracleBound = 40;

std::vector<SubsetSpec> default_specs() {
    return {subsets::parse("1 mod 2"), subsets::parse("2 mod 2"), subsets::parse("1 mod 3"),
            subsets::parse("kfree 2 3")};
}

std::vector<SubsetSpec> specs_for(const VerifyParams& p) {
    if (p.subset) return {subsets::parse(*p.subset)};
    return default_specs();
}

Check series_equal(std::string name, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    Check c{std::move(name), true, "order " + std::to_string(lhs.order())};
    const auto n = std::min(lhs.order(), rhs.order());
    for (std::size_t i = 0; i <= n; ++i) {
        if (lhs[i] != rhs[i]) {
            std::ostringstream d;
            d << "coefficient " << i << ": " << lhs[i] << " != " << rhs[i];
            c.passed = false;
            c.detail = d.str();
            break;
        }
    }
    return c;
}

std::vector<Check> identities(const VerifyParams& p) {
    const auto n = p.order.value_or(kDefaultOrder);
    const auto euler = series::euler_series(n);
    const auto theta = series::theta_square_series(n);
    const auto one = TruncatedSeries::constant(1, n);

    std::vector<Check> out;
    out.push_back(series_equal("odd smallest part equals alternating squares",
                               series::smallest_part_series(subsets::parse("1 mod 2"), n), theta));
    out.push_back(series_equal("even smallest part equals 1 - squares - euler",
                               series::smallest_part_series(subsets::parse("0 mod 2"), n), one - theta - euler));
    out.push_back(series_equal("euler squared equals theta quotient", euler * euler,
                               (one - theta - theta) * euler.substitute_power(2)));

    auto product = one;
    for (std::size_t m = 1; m <= n; ++m) product = product.times_one_minus_q_pow(m);
    out.push_back(series_equal("pentagonal expansion equals product", euler, product));

    for (std::uint64_t t = 2; t <= 5; ++t) {
        auto total = TruncatedSeries(n);
        for (std::uint64_t r = 0; r < t; ++r) {
            total = total + series::smallest_part_series(SubsetSpec::progression(r, t), n);
        }
        out.push_back(series_equal("residues mod " + std::to_string(t) + " sum to 1 - euler", total, one - euler));
    }
    return out;
}

std::vector<Check> duality(const VerifyParams& p) {
    const auto n = p.order.value_or(kDefaultOrder);
    std::vector<Check> out;
    for (const auto& spec : specs_for(p)) {
        out.push_back(series_equal("smallest = largest for " + subsets::render(spec),
                                   series::smallest_part_series(spec, n), series::largest_part_series(spec, n)));
    }
    return out;
}

std::vector<Check> oracle(const VerifyParams& p) {
    const auto bound = p.bound.value_or(kOracleBound);
    std::vector<Check> out;
    for (const auto& spec : specs_for(p)) {
        const auto s = series::smallest_part_series(spec, bound);
        Check c{"series = partition sum for " + subsets::render(spec), true, "n <= " + std::to_string(bound)};
        for (unsigned k = 1; k <= bound; ++k) {
            const auto expected = partitions::f_s_coefficient_oracle(spec, k, bound);
            if (s[k] != expected) {
                std::ostringstream d;
                d << "n = " << k << ": series " << s[k] << ", oracle " << expected;
                c.passed = false;
                c.detail = d.str();
                break;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Check> distinct_parts(const VerifyParams& p) {
    const auto bound = p.bound.value_or(partitions::kDefaultOracleBound);
    const auto order = p.order.value_or(kDistinctPartOrder);
    std::vector<Check> out;

    Check counts{"enumerated distinct-part differences", true, "n <= " + std::to_string(bound)};
    for (unsigned n = 1; n <= bound && counts.passed; ++n) {
        const auto c = partitions::distinct_counts(n, bound);
        const auto k = pell::classify(n);
        if (c.odd_difference() != k.predicted_odd_difference || c.even_difference() != k.predicted_even_difference) {
            std::ostringstream d;
            d << "n = " << n << ": odd " << c.odd_difference() << " vs " << k.predicted_odd_difference << ", even "
              << c.even_difference() << " vs " << k.predicted_even_difference;
            counts.passed = false;
            counts.detail = d.str();
        }
    }
    out.push_back(std::move(counts));

    const auto odd = series::smallest_part_series(subsets::parse("1 mod 2"), order);
    const auto even = series::smallest_part_series(subsets::parse("0 mod 2"), order);
    Check coeffs{"series distinct-part differences", true, "n <= " + std::to_string(order)};
    for (std::size_t n = 1; n <= order && coeffs.passed; ++n) {
        const auto k = pell::classify(n);
        if (-odd[n] != k.predicted_odd_difference || -even[n] != k.predicted_even_difference) {
            std::ostringstream d;
            d << "n = " << n << ": odd " << -odd[n] << " vs " << k.predicted_odd_difference << ", even " << -even[n]
              << " vs " << k.predicted_even_difference;
            coeffs.passed = false;
            coeffs.detail = d.str();
        }
    }
    out.push_back(std::move(coeffs));

    Check both{"square pentagonal numbers", true, ""};
    std::vector<std::uint64_t> found;
    for (std::uint64_t n = 1; n <= order; ++n) {
        const auto k = pell::classify(n);
        if (k.is_square && k.is_pentagonal) found.push_back(n);
    }
    const auto sols = pell::pell_solutions(found.size() + 1);
    for (std::size_t i = 0; i < sols.size(); ++i) {
        const auto v = sols[i].coincidence();
        if (i < found.size() ? v != found[i] : v <= order) both.passed = false;
    }
    for (auto n : found) both.detail += (both.detail.empty() ? "" : ", ") + std::to_string(n);
    out.push_back(std::move(both));
    return out;
}

std::vector<Complex> sample_points() {
    std::vector<Complex> pts = {{0.5, 0.0}, {-0.6, 0.0}, {0.0, 0.7}, {0.3, 0.4}, std::polar(0.85, 1.0)};
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> radius(0.05, 0.9), angle(-M_PI, M_PI);
    for (int i = 0; i < 5; ++i) pts.push_back(std::polar(radius(rng), angle(rng)));
    return pts;
}

std::string show(Complex z) {
    std::ostringstream s;
    s.precision(6);
    s << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return s.str();
}

std::vector<Check> sieve_vs_direct(const VerifyParams& p) {
    auto specs = p.subset ? specs_for(p)
                          : std::vector<SubsetSpec>{subsets::parse("1 mod 2"), subsets::parse("0 mod 2"),
                                                    subsets::parse("1 mod 3"), subsets::parse("kfree 2 3"),
                                                    subsets::parse("0 mod 4 | 3 mod 4"), subsets::parse("all")};
    std::vector<Check> out;
    for (const auto& spec : specs) {
        Check c{"sieve = direct for " + subsets::render(spec), true, ""};
        double worst = 0.0;
        for (auto z : sample_points()) {
            const numeric::ComplexPoint q(z);
            const auto d = numeric::f_direct(spec, q, p.eval);
            const auto s = numeric::f_sieve(spec, q, p.eval);
            const double diff = std::abs(d.value - s.value);
            worst = std::max(worst, diff);
            if (diff > d.bound + s.bound + 1e-12) {
                std::ostringstream m;
                m << "q = " << show(z) << ": |direct - sieve| = " << diff;
                c.passed = false;
                c.detail = m.str();
                break;
            }
        }
        if (c.passed) {
            std::ostringstream m;
            m << "max difference " << worst;
            c.detail = m.str();
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Check> qbinomial(const VerifyParams& p) {
    struct Case {
        Complex a, z, q;
    };
    std::vector<Case> cases = {{0.3, 0.5, 0.6}, {{0.2, 0.5}, {-0.4, 0.1}, {0.1, 0.7}}, {-0.9, 0.9, 0.5}};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> radius(0.0, 0.9), angle(-M_PI, M_PI);
    for (int i = 0; i < 5; ++i) {
        const Complex a = std::polar(radius(rng), angle(rng));
        const Complex z = std::polar(radius(rng), angle(rng));
        const Complex q = std::polar(radius(rng), angle(rng));
        cases.push_back({a, z, q});
    }

    std::vector<Check> out;
    for (const auto& k : cases) {
        const numeric::ComplexPoint q(k.q);
        const auto lhs = numeric::qbinomial_series(k.a, k.z, q, p.eval);
        const auto num = numeric::pochhammer_inf(k.a * k.z, q, p.eval);
        const auto den = numeric::pochhammer_inf(k.z, q, p.eval);
        const Complex rhs = num.value / den.value;
        const double err = std::abs(lhs.value - rhs);
        const double allowed = lhs.bound + std::abs(rhs) * (num.bound / std::abs(num.value) + den.bound / std::abs(den.value)) * 2 + 1e-12;
        std::ostringstream name, detail;
        name << "q-binomial at a=" << show(k.a) << " z=" << show(k.z) << " q=" << show(k.q);
        detail << "difference " << err;
        out.push_back({name.str(), err <= allowed, detail.str()});
    }

    const Complex zeta = numeric::RootOfUnity(1, 3).value();
    std::vector<double> moduli;
    for (double r : {0.9, 0.99, 0.999}) {
        moduli.push_back(std::abs(numeric::pochhammer_ratio(zeta, numeric::ComplexPoint(r), p.eval).value));
    }
    std::ostringstream detail;
    detail << moduli[0] << ", " << moduli[1] << ", " << moduli[2];
    out.push_back({"cube-root quotient decreases toward 0",
                   moduli[0] > moduli[1] && moduli[1] > moduli[2] && moduli[2] < 1e-3, detail.str()});
    const auto unit = numeric::pochhammer_ratio(1.0, numeric::ComplexPoint(0.999), p.eval);
    out.push_back({"quotient at 1 is exactly 1", unit.value == Complex(1.0, 0.0), ""});
    return out;
}

} // namespace

bool VerifyReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json j = {{"suite", suite}, {"passed", passed()}, {"seconds", seconds}, {"checks", nlohmann::json::array()}};
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return j;
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = {"identities", "duality", "oracle",
                                                   "corollary12", "sieve-vs-direct", "qbinomial"};
    return names;
}

VerifyReport run_verify(std::string_view suite, const VerifyParams& params) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report{std::string(suite), {}, 0.0};
    if (suite == "identities") report.checks = identities(params);
    else if (suite == "duality") report.checks = duality(params);
    else if (suite == "oracle") report.checks = oracle(params);
    else if (suite == "corollary12") report.checks = distinct_parts(params);
    else if (suite == "sieve-vs-direct") report.checks = sieve_vs_direct(params);
    else if (suite == "qbinomial") report.checks = qbinomial(params);
    else throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace qdensity::cli
