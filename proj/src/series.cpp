#include "qdensity/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "qdensity/pell.hpp"

namespace qdensity::series {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Coeff& c, std::size_t order) {
    return monomial(c, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const Coeff& c, std::size_t exponent, std::size_t order) {
    TruncatedSeries s(order);
    if (exponent <= order) s.coeffs_[exponent] = c;
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("truncated: cannot extend a series");
    return TruncatedSeries(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t n) const {
    TruncatedSeries out(order());
    for (std::size_t i = n; i <= order(); ++i) out.coeffs_[i] = coeffs_[i - n];
    return out;
}

TruncatedSeries TruncatedSeries::substitute_power(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
    TruncatedSeries out(order());
    for (std::size_t i = 0; i * k <= order(); ++i) out.coeffs_[i * k] = coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::times_one_minus_q_pow(std::size_t n) const {
    if (n == 0) return TruncatedSeries(order());
    TruncatedSeries out(*this);
    for (std::size_t i = n; i <= order(); ++i) out.coeffs_[i] -= coeffs_[i - n];
    return out;
}

std::complex<double> TruncatedSeries::evaluate(std::complex<double> q) const {
    std::complex<double> acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * q + static_cast<double>(coeffs_[i]);
    }
    return acc;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    const std::size_t n = out.order();
    for (std::size_t j = 0; j <= n; ++j) {
        if (a.coeffs_[j].is_zero()) continue;
        for (std::size_t k = 0; j + k <= n; ++k) {
            if (b.coeffs_[k].is_zero()) continue;
            out.coeffs_[j + k] += a.coeffs_[j] * b.coeffs_[k];
        }
    }
    return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries divide_by_one_minus_q_pow(const TruncatedSeries& a, std::size_t n) {
    if (n == 0) throw std::invalid_argument("divide_by_one_minus_q_pow: 1 - q^0 is the zero series");
    std::vector<Coeff> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = n; i < c.size(); ++i) c[i] += c[i - n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries euler_series(std::size_t order) {
    std::vector<Coeff> c(order + 1);
    const auto n = static_cast<std::int64_t>(order);
    c[0] = 1;
    for (std::int64_t m = 1;; ++m) {
        const auto pos = pell::pentagonal(m);
        const auto neg = pell::pentagonal(-m);
        if (pos > n) break;
        const int sign = (m % 2 == 0) ? 1 : -1;
        c[pos] += sign;
        if (neg <= n) c[neg] += sign;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries partition_generating_series(std::size_t order) {
    auto s = TruncatedSeries::constant(1, order);
    for (std::size_t n = 1; n <= order; ++n) s = divide_by_one_minus_q_pow(s, n);
    return s;
}

TruncatedSeries theta_square_series(std::size_t order) {
    std::vector<Coeff> c(order + 1);
    for (std::size_t n = 1; n * n <= order; ++n) c[n * n] = (n % 2 == 1) ? 1 : -1;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries smallest_part_series(const subsets::SubsetSpec& spec, std::size_t order) {
    const std::size_t N = order;
    std::vector<Coeff> tail(N + 1);  // prod_{m>n} (1 - q^m), exact mod q^{N+1}
    std::vector<Coeff> acc(N + 1);
    tail[0] = 1;
    for (std::size_t n = N; n >= 1; --n) {
        if (spec.contains(n)) {
            for (std::size_t i = n; i <= N; ++i) {
                if (!tail[i - n].is_zero()) acc[i] += tail[i - n];
            }
        }
        for (std::size_t i = N; i >= n; --i) {
            if (!tail[i - n].is_zero()) tail[i] -= tail[i - n];
        }
    }
    return TruncatedSeries(std::move(acc));
}

TruncatedSeries largest_part_series(const subsets::SubsetSpec& spec, std::size_t order) {
    const std::size_t N = order;
    std::vector<Coeff> term(N + 1);  // q^n / (q;q)_n
    std::vector<Coeff> sum(N + 1);
    term[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t i = N; i >= 1; --i) term[i] = std::move(term[i - 1]);
        term[0] = 0;
        for (std::size_t i = n; i <= N; ++i) {
            if (!term[i - n].is_zero()) term[i] += term[i - n];
        }
        if (spec.contains(n)) {
            for (std::size_t i = n; i <= N; ++i) sum[i] += term[i];
        }
    }
    return euler_series(N) * TruncatedSeries(std::move(sum));
}

nlohmann::json to_json(const TruncatedSeries& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : s.coeffs()) out.push_back(c.str());
    return out;
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("series JSON must be a non-empty array");
    std::vector<Coeff> c;
    c.reserve(j.size());
    for (const auto& e : j) c.emplace_back(e.get<std::string>());
    return TruncatedSeries(std::move(c));
}

} // namespace qdensity::series
