#include "qdensity/pell.hpp"

#include <cmath>
#include <stdexcept>

namespace qdensity::pell {

BigInt GeneralizedPentagonal::value() const {
    BigInt m = index;
    return m * (3 * m - 1) / 2;
}

std::int64_t pentagonal(std::int64_t m) { return m * (3 * m - 1) / 2; }

BigInt PellSolution::pentagonal_index() const {
    if (x % 6 == 5) {
        return (x + 1) / 6;
    }
    return (1 - x) / 6;
}

BigInt PellSolution::square_root() const { return y / 2; }

BigInt PellSolution::coincidence() const {
    BigInt n = square_root();
    return n * n;
}

std::vector<PellSolution> pell_solutions(std::size_t count) {
    if (count == 0) {
        throw std::invalid_argument("pell_solutions: count must be positive");
    }
    std::vector<PellSolution> out;
    out.reserve(count);
    BigInt x = 5;
    BigInt y = 2;
    for (std::size_t k = 1; k <= count; ++k) {
        out.push_back(PellSolution{k, x, y});
        BigInt nx = 5 * x + 12 * y;
        BigInt ny = 2 * x + 5 * y;
        x = std::move(nx);
        y = std::move(ny);
    }
    return out;
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<std::int64_t> pentagonal_index_of(std::uint64_t n) {
    // 3m^2 - m - 2n = 0  =>  m = (1 +- sqrt(1 + 24n)) / 6
    auto disc = exact_sqrt(1 + 24 * n);
    if (!disc) return std::nullopt;
    auto d = static_cast<std::int64_t>(*disc);
    if ((1 + d) % 6 == 0) return (1 + d) / 6;
    if ((1 - d) % 6 == 0) return (1 - d) / 6;
    return std::nullopt;
}

Classification classify(std::uint64_t n) {
    Classification c;
    c.n = n;
    if (auto r = exact_sqrt(n)) {
        c.is_square = true;
        c.square_root = *r;
    }
    if (auto m = pentagonal_index_of(n)) {
        c.is_pentagonal = true;
        c.pentagonal_index = *m;
    }

    if (c.is_square) {
        c.predicted_odd_difference = c.square_is_even() ? 1 : -1;
    }

    // Mutually exclusive cases; square-and-pentagonal falls through to 0.
    if (c.is_square && !c.is_pentagonal) {
        c.predicted_even_difference = c.square_is_even() ? -1 : 1;
    } else if (c.is_pentagonal && !c.is_square) {
        c.predicted_even_difference = c.index_is_even() ? 1 : -1;
    }
    return c;
}

} // namespace qdensity::pell
