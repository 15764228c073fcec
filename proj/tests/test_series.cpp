#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qdensity/series.hpp"

using namespace qdensity::series;
using qdensity::subsets::SubsetSpec;

namespace {

std::vector<long long> ints(const TruncatedSeries& s) {
    std::vector<long long> out;
    for (const auto& c : s.coeffs()) out.push_back(static_cast<long long>(c));
    return out;
}

TruncatedSeries from_ints(std::vector<long long> v) {
    std::vector<Coeff> c(v.begin(), v.end());
    return TruncatedSeries(std::move(c));
}

/// Right side for the even progression: 1 + sum (-1)^n q^{n^2} - sum (-1)^m q^{omega(m)}.
TruncatedSeries even_progression_identity(std::size_t order) {
    return TruncatedSeries::constant(1, order) - theta_square_series(order) - euler_series(order);
}

} // namespace

TEST_CASE("mul truncates to the smaller order") {
    auto a = from_ints({1, -1, 0, 0});
    auto b = from_ints({1, 1, 1, 1});
    CHECK(ints(mul(a, b)) == std::vector<long long>{1, 0, 0, 0});

    auto zero = TruncatedSeries(3);
    CHECK(mul(zero, b).is_zero());

    auto shorter = from_ints({1, 1});
    CHECK(mul(shorter, b).order() == 1);
}

TEST_CASE("euler series times largest-part generating function") {
    const unsigned N = 10;
    std::vector<long long> lg;
    for (unsigned n = 0; n <= N; ++n) {
        lg.push_back(n == 0 ? 0 : oracle::largest_part_count(n, [](unsigned) { return true; }));
    }
    auto product = mul(euler_series(N), from_ints(lg));
    CHECK(product == TruncatedSeries::constant(1, N) - euler_series(N));
}

TEST_CASE("divide_by_one_minus_q_pow") {
    CHECK(ints(divide_by_one_minus_q_pow(TruncatedSeries::constant(1, 5), 1)) ==
          std::vector<long long>{1, 1, 1, 1, 1, 1});
    CHECK(ints(divide_by_one_minus_q_pow(TruncatedSeries::constant(1, 6), 2)) ==
          std::vector<long long>{1, 0, 1, 0, 1, 0, 1});
    CHECK_THROWS_AS(divide_by_one_minus_q_pow(TruncatedSeries::constant(1, 6), 0), std::invalid_argument);

    SUBCASE("round trip with random coefficients") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long long> dist(-1000000, 1000000);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<long long> v(13);
            for (auto& c : v) c = dist(rng);
            const auto x = from_ints(v);
            const std::size_t n = 1 + trial % 5;
            CHECK(divide_by_one_minus_q_pow(x.times_one_minus_q_pow(n), n) == x);
            CHECK(divide_by_one_minus_q_pow(x, n).times_one_minus_q_pow(n) == x);
        }
    }
}

TEST_CASE("euler series against brute-force mobius sums") {
    CHECK(ints(euler_series(7)) == std::vector<long long>{1, -1, -1, 0, 0, 1, 0, 1});
    for (unsigned n = 0; n <= 20; ++n) {
        CHECK(static_cast<long long>(euler_series(20)[n]) == oracle::mobius_sum(n));
    }
    CHECK(euler_series(12)[0] == 1);
    CHECK(euler_series(12)[12] == -1);
}

TEST_CASE("smallest_part_series examples") {
    auto odd = smallest_part_series(SubsetSpec::progression(1, 2), 17);
    for (std::size_t i = 0; i <= 17; ++i) {
        long long expected = 0;
        if (i == 1 || i == 9) expected = 1;
        if (i == 4 || i == 16) expected = -1;
        CHECK_MESSAGE(odd[i] == expected, "coefficient " << i);
    }

    auto even = smallest_part_series(SubsetSpec::progression(0, 2), 12);
    CHECK(even == even_progression_identity(12));
    CHECK(even[2] == 1);

    CHECK(smallest_part_series(SubsetSpec::explicit_set({}), 10).is_zero());
}

TEST_CASE("largest_part_series examples") {
    CHECK(largest_part_series(SubsetSpec::progression(1, 2), 17) ==
          smallest_part_series(SubsetSpec::progression(1, 2), 17));
    CHECK(largest_part_series(SubsetSpec::all(), 20) ==
          TruncatedSeries::constant(1, 20) - euler_series(20));
    // q (q^2;q)_inf = q - q^3 - q^4 - q^5 + ...; (4,1) is the only contributor at q^5.
    CHECK(ints(largest_part_series(SubsetSpec::progression(1, 1000), 5)) ==
          std::vector<long long>{0, 1, 0, -1, -1, -1});
    CHECK(oracle::fs_coefficient(5, [](unsigned m) { return m == 1; }) == -1);
}

TEST_CASE("theta_square_series") {
    auto t = theta_square_series(10);
    CHECK(ints(t) == std::vector<long long>{0, 1, 0, 0, -1, 0, 0, 0, 0, 1, 0});
    CHECK(theta_square_series(0).is_zero());

    auto big = theta_square_series(100);
    int nonzero = 0;
    long long last = -1;
    for (std::size_t i = 0; i <= 100; ++i) {
        if (big[i] != 0) {
            ++nonzero;
            CHECK(static_cast<long long>(big[i]) == -last);
            last = static_cast<long long>(big[i]);
        }
    }
    CHECK(nonzero == 10);
}

TEST_CASE("duality of smallest and largest part routes") {
    const std::vector<SubsetSpec> specs = {
        SubsetSpec::progression(1, 2), SubsetSpec::progression(0, 2), SubsetSpec::progression(1, 3),
        SubsetSpec::progression(0, 5), SubsetSpec::kfree(2, 3),        SubsetSpec::kfree(3, 2),
        SubsetSpec::all(),
        SubsetSpec::union_of({SubsetSpec::progression(0, 4), SubsetSpec::progression(3, 7)}),
        SubsetSpec::explicit_set({2, 3, 11, 50}),
    };
    for (const auto& spec : specs) {
        for (std::size_t N : {0u, 1u, 37u, 200u}) {
            CHECK(smallest_part_series(spec, N) == largest_part_series(spec, N));
        }
    }
}

TEST_CASE("residue classes partition 1 - (q;q)_inf") {
    const std::size_t N = 100;
    const auto target = TruncatedSeries::constant(1, N) - euler_series(N);
    for (std::uint64_t t = 2; t <= 5; ++t) {
        TruncatedSeries total(N);
        for (std::uint64_t r = 0; r < t; ++r) total = total + smallest_part_series(SubsetSpec::progression(r, t), N);
        CHECK(total == target);
    }
}

TEST_CASE("theta identities to order 200") {
    const std::size_t N = 200;
    CHECK(smallest_part_series(SubsetSpec::progression(1, 2), N) == theta_square_series(N));
    auto even = smallest_part_series(SubsetSpec::progression(0, 2), N);
    CHECK(even[0] == 0);
    CHECK(even == even_progression_identity(N));
}

TEST_CASE("theta quotient identity (q;q)^2 = theta_4 * (q^2;q^2)") {
    const std::size_t N = 200;
    const auto e = euler_series(N);
    const auto theta4 = TruncatedSeries::constant(1, N) - theta_square_series(N) - theta_square_series(N);
    CHECK(e * e == theta4 * e.substitute_power(2));
}

TEST_CASE("pentagonal round trip with the partition generating function") {
    for (std::size_t N : {0u, 1u, 50u, 200u}) {
        CHECK(euler_series(N) * partition_generating_series(N) == TruncatedSeries::constant(1, N));
    }
    CHECK(partition_generating_series(200)[200] == Coeff("3972999029388"));
}

TEST_CASE("substitute_power keeps the order") {
    auto s = from_ints({1, 2, 3, 4, 5});
    CHECK(ints(s.substitute_power(2)) == std::vector<long long>{1, 0, 2, 0, 3});
}

TEST_CASE("JSON form is an array of decimal strings") {
    auto p = partition_generating_series(400);
    auto j = to_json(p);
    CHECK(j.is_array());
    CHECK(j[0] == "1");
    CHECK(series_from_json(j) == p);
    CHECK(j[400].get<std::string>() == p[400].str());
}
