#include <doctest.h>

#include "qdensity/pell.hpp"
#include "qdensity/series.hpp"

using namespace qdensity::pell;

TEST_CASE("pell_solutions") {
    auto s = pell_solutions(3);
    REQUIRE(s.size() == 3);
    CHECK(s[0].x == 5);
    CHECK(s[0].y == 2);
    CHECK(s[1].x == 49);
    CHECK(s[1].y == 20);
    CHECK(s[2].x == 485);
    CHECK(s[2].y == 198);

    CHECK(s[1].square_root() == 10);
    CHECK(s[1].pentagonal_index() == -8);
    CHECK(GeneralizedPentagonal{-8}.value() == 100);
    CHECK(s[1].coincidence() == 100);

    CHECK(s[2].square_root() == 99);
    CHECK(s[2].pentagonal_index() == 81);
    CHECK(GeneralizedPentagonal{81}.value() == 9801);

    CHECK_THROWS_AS(pell_solutions(0), std::invalid_argument);
}

TEST_CASE("pell solutions satisfy the equation and name square pentagonal numbers") {
    for (const auto& s : pell_solutions(40)) {
        CHECK(s.x * s.x - 6 * s.y * s.y == 1);
        CHECK(s.y % 2 == 0);
        const BigInt m = s.pentagonal_index();
        CHECK(m * (3 * m - 1) / 2 == s.coincidence());
    }
}

TEST_CASE("generalized pentagonal values") {
    CHECK(GeneralizedPentagonal{0}.value() == 0);
    CHECK(GeneralizedPentagonal{1}.value() == 1);
    CHECK(GeneralizedPentagonal{-1}.value() == 2);
    CHECK(GeneralizedPentagonal{2}.value() == 5);
    CHECK(GeneralizedPentagonal{-2}.value() == 7);
    for (std::int64_t m = -200; m <= 200; ++m) {
        CHECK(pentagonal(m) >= 0);
        CHECK(pentagonal_index_of(static_cast<std::uint64_t>(pentagonal(m))) == m);
    }
    CHECK_FALSE(pentagonal_index_of(3).has_value());
}

TEST_CASE("classify") {
    auto four = classify(4);
    CHECK(four.is_square);
    CHECK_FALSE(four.is_pentagonal);
    CHECK(four.predicted_odd_difference == 1);
    CHECK(four.predicted_even_difference == -1);

    auto hundred = classify(100);
    CHECK(hundred.is_square);
    CHECK(hundred.is_pentagonal);
    CHECK(*hundred.pentagonal_index == -8);
    CHECK(hundred.predicted_even_difference == 0);

    auto three = classify(3);
    CHECK_FALSE(three.is_square);
    CHECK_FALSE(three.is_pentagonal);
    CHECK(three.predicted_odd_difference == 0);
    CHECK(three.predicted_even_difference == 0);

    auto one = classify(1);
    CHECK(one.predicted_odd_difference == -1);
    CHECK(one.predicted_even_difference == 0);

    CHECK(classify(12).predicted_even_difference == -1);  // omega(3)
    CHECK(classify(7).predicted_even_difference == 1);    // omega(-2)
}

TEST_CASE("square pentagonal coincidences below 10^4") {
    std::vector<std::uint64_t> both;
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        auto c = classify(n);
        if (c.is_square && c.is_pentagonal) both.push_back(n);
    }
    CHECK(both == std::vector<std::uint64_t>{1, 100, 9801});
}

TEST_CASE("predictions match F_S coefficients to order 2000") {
    using qdensity::subsets::SubsetSpec;
    const std::size_t N = 2000;
    const auto odd = qdensity::series::smallest_part_series(SubsetSpec::progression(1, 2), N);
    const auto even = qdensity::series::smallest_part_series(SubsetSpec::progression(0, 2), N);
    for (std::uint64_t n = 1; n <= N; ++n) {
        const auto c = classify(n);
        CHECK(-odd[n] == c.predicted_odd_difference);
        CHECK(-even[n] == c.predicted_even_difference);
    }
}
