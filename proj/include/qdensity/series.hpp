#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "qdensity/subsets.hpp"

namespace qdensity::series {

using Coeff = boost::multiprecision::cpp_int;

/// Formal power series in q with exact integer coefficients, known up to and
/// including q^order. Values are immutable: every operation returns a new series.
///
/// Binary operations truncate to the smaller of the two orders.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    /// Takes coefficients lowest exponent first; order = size - 1. Must be non-empty.
    explicit TruncatedSeries(std::vector<Coeff> coeffs);

    static TruncatedSeries constant(const Coeff& c, std::size_t order);
    static TruncatedSeries monomial(const Coeff& c, std::size_t exponent, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    const Coeff& operator[](std::size_t i) const { return coeffs_.at(i); }

    bool is_zero() const;

    TruncatedSeries truncated(std::size_t order) const;
    /// q^n * this
    TruncatedSeries shifted(std::size_t n) const;
    /// The substitution q -> q^k. Keeps the order; skipped indices are zero.
    TruncatedSeries substitute_power(std::size_t k) const;
    TruncatedSeries times_one_minus_q_pow(std::size_t n) const;

    /// Sum c_i q^i at a complex point, coefficients rounded to double.
    std::complex<double> evaluate(std::complex<double> q) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    std::vector<Coeff> coeffs_;
};

/// Cauchy product truncated at min(order(a), order(b)).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// a / (1 - q^n) via c_i += c_{i-n}. Throws std::invalid_argument for n = 0.
TruncatedSeries divide_by_one_minus_q_pow(const TruncatedSeries& a, std::size_t n);

/// (q;q)_inf to order N from the pentagonal number theorem.
TruncatedSeries euler_series(std::size_t order);

/// prod_{n>=1} 1/(1 - q^n) to order N; coefficient n is p(n).
TruncatedSeries partition_generating_series(std::size_t order);

/// sum_{n>=1, n^2<=N} (-1)^{n+1} q^{n^2}.
TruncatedSeries theta_square_series(std::size_t order);

/// F_S(q) as sum_{n in S} q^n prod_{m>n}(1 - q^m). O(N^2) coefficient operations.
TruncatedSeries smallest_part_series(const subsets::SubsetSpec& spec, std::size_t order);

/// F_S(q) as (q;q)_inf * sum_{n in S} q^n/(q;q)_n. O(N^2) coefficient operations.
TruncatedSeries largest_part_series(const subsets::SubsetSpec& spec, std::size_t order);

/// JSON array of decimal strings, lowest exponent first.
nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

} // namespace qdensity::series
