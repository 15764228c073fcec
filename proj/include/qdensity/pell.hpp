#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qdensity::pell {

using BigInt = boost::multiprecision::cpp_int;

/// Generalized pentagonal number m(3m-1)/2, defined for every integer m.
struct GeneralizedPentagonal {
    std::int64_t index = 0;

    BigInt value() const;
};

/// omega(m) = m(3m-1)/2 as a signed 64-bit value. Valid for |m| < 2^30.
std::int64_t pentagonal(std::int64_t m);

/// A positive solution of x^2 - 6y^2 = 1.
///
/// Writing x = +-(6m - 1) and y = 2n turns the equation into n^2 = omega(m),
/// so every solution names a number that is both a square and a
/// generalized pentagonal number.
struct PellSolution {
    std::uint64_t k = 0;
    BigInt x;
    BigInt y;

    /// Pentagonal index: (x+1)/6 when x = 5 (mod 6), otherwise (1-x)/6.
    BigInt pentagonal_index() const;
    /// Square root n = y/2.
    BigInt square_root() const;
    /// The common value n^2 = omega(m).
    BigInt coincidence() const;
};

/// First `count` positive solutions, from (5, 2) via
/// x' = 5x + 12y, y' = 2x + 5y.
std::vector<PellSolution> pell_solutions(std::size_t count);

struct Classification {
    std::uint64_t n = 0;
    bool is_square = false;
    std::uint64_t square_root = 0;           // valid when is_square
    bool is_pentagonal = false;
    std::optional<std::int64_t> pentagonal_index;  // valid when is_pentagonal

    /// Predicted D_odd^+(n) - D_odd^-(n).
    int predicted_odd_difference = 0;
    /// Predicted D_even^+(n) - D_even^-(n).
    int predicted_even_difference = 0;

    bool square_is_even() const { return is_square && square_root % 2 == 0; }
    bool index_is_even() const { return pentagonal_index && *pentagonal_index % 2 == 0; }
};

/// Exact integer square root test.
std::optional<std::uint64_t> exact_sqrt(std::uint64_t n);

/// Index m with omega(m) = n, if any. omega is injective on Z, so at most one exists.
std::optional<std::int64_t> pentagonal_index_of(std::uint64_t n);

/// Square / pentagonal classification of n with the distinct-part count
/// predictions for partitions of n by parity of the smallest part.
Classification classify(std::uint64_t n);

} // namespace qdensity::pell
