#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdensity/subsets.hpp"

namespace qdensity::numeric {

using Complex = std::complex<double>;

/// A point strictly inside the unit disk.
class ComplexPoint {
public:
    /// Throws std::invalid_argument unless |q| < 1 and q is finite.
    explicit ComplexPoint(Complex q);

    Complex value() const noexcept { return q_; }
    double modulus() const { return std::abs(q_); }

private:
    Complex q_;
};

/// Working precisions with an implementation; a request is rounded up to the
/// next tier.
inline constexpr unsigned kPrecisionTiers[] = {53, 64, 113, 256};

struct EvalOptions {
    /// Target absolute truncation error.
    double eps = 1e-12;
    /// Cap on product/sum length.
    std::uint64_t max_terms = 10'000'000;
    /// Working mantissa width in bits.
    unsigned precision_bits = 53;
    /// Re-run at extended_bits when the summed magnitudes exceed the result by
    /// more than kCancellationThreshold.
    bool auto_extend = true;
    unsigned extended_bits = 113;
    std::uint64_t sieve_period_cap = subsets::kDefaultPeriodCap;

    /// Throws std::invalid_argument on eps <= 0, max_terms == 0 or an
    /// unsupported precision.
    void validate() const;

    /// Applies QDENSITY_PRECISION_BITS, when set, to `base`.
    static EvalOptions from_environment(EvalOptions base);
    static EvalOptions from_environment();
};

inline constexpr double kCancellationThreshold = 1e3;

/// A value with a guaranteed truncation bound (|value - exact| <= bound up to
/// rounding).
struct EvalResult {
    Complex value;
    double bound = 0.0;
    std::uint64_t terms_used = 0;
    unsigned precision_bits = 53;
    /// Sum of term magnitudes over |value|; 1 means no cancellation.
    double cancellation = 1.0;
};

/// (a;q)_inf = prod_{m>=0} (1 - a q^m) for |a| <= 1.
EvalResult pochhammer_inf(Complex a, ComplexPoint q, const EvalOptions& opts = {});

/// (q;q)_inf / (aq;q)_inf as a single product, so it stays representable when
/// both factors underflow (q near a root of unity). Requires |a| <= 1.
EvalResult pochhammer_ratio(Complex a, ComplexPoint q, const EvalOptions& opts = {});

/// sum_{n>=0} (a;q)_n / (q;q)_n z^n, the right side of the q-binomial theorem.
/// Requires |a| <= 1 and |z| < 1.
EvalResult qbinomial_series(Complex a, Complex z, ComplexPoint q, const EvalOptions& opts = {});

/// F_S(q) by the descending tail-product recurrence
///   P <- (1 - q^{n+1}) P,  accumulate q^n P for n in S,   n = T .. 1.
/// Cost O(T) independent of the period of S.
EvalResult f_direct(const subsets::SubsetSpec& spec, ComplexPoint q, const EvalOptions& opts = {});

/// Root-of-unity filter weights w_m = sum_{r in residues} zeta_M^{-mr}, m = 1..M.
class SieveWeights {
public:
    /// Throws ResourceLimitError when the period exceeds `period_cap`.
    static SieveWeights from_spec(const subsets::SubsetSpec& spec,
                                  std::uint64_t period_cap = subsets::kDefaultPeriodCap);

    std::uint64_t period() const noexcept { return period_; }
    std::uint64_t residue_count() const noexcept { return residue_count_; }
    bool contains_zero() const noexcept { return contains_zero_; }

    /// w_m for 1 <= m <= M.
    Complex weight(std::uint64_t m) const;
    /// w_1 .. w_M.
    std::vector<Complex> values() const;

    /// For k-free sets, w_m = sum over subsets D of the prime powers of
    /// (-1)^|D| (M/d_D) [M/d_D divides m], which is an exact integer.
    bool is_integral() const noexcept { return !kfree_moduli_.empty() || integral_; }

    // Representation, shared with the evaluation engine.
    const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }
    /// (M / d_D, (-1)^|D|) pairs for k-free sets.
    const std::vector<std::pair<std::uint64_t, int>>& kfree_terms() const noexcept { return kfree_moduli_; }

private:
    std::uint64_t period_ = 1;
    std::uint64_t residue_count_ = 0;
    bool contains_zero_ = false;
    bool integral_ = false;
    std::vector<std::uint64_t> residues_;
    std::vector<std::pair<std::uint64_t, int>> kfree_moduli_;
};

/// F_S(q) = (q;q)_inf (1/M) sum_{m=1}^{M} w_m / (zeta_M^m q; q)_inf, minus the
/// n = 0 term (q;q)_inf when 0 is among the residues. Cost O(M T).
EvalResult f_sieve(const subsets::SubsetSpec& spec, ComplexPoint q, const EvalOptions& opts = {});

enum class Route { Direct, Sieve };

EvalResult evaluate(const subsets::SubsetSpec& spec, ComplexPoint q, Route route,
                    const EvalOptions& opts = {});

/// q(z) = exp(-2 pi i / z). Throws std::invalid_argument unless Im z > 0.
ComplexPoint q_of_z(Complex z);

/// zeta = exp(2 pi i h / m) with gcd(h, m) = 1.
class RootOfUnity {
public:
    /// Throws std::invalid_argument if m == 0 or gcd(h, m) != 1.
    RootOfUnity(std::int64_t numerator, std::uint64_t denominator);

    std::int64_t numerator() const noexcept { return h_; }
    std::uint64_t denominator() const noexcept { return m_; }
    /// Exact for quarter turns (1, i, -1, -i).
    Complex value() const;

private:
    std::int64_t h_;
    std::uint64_t m_;
};

struct RadialEntry {
    double radius = 0.0;
    std::optional<EvalResult> result;
    std::string error;  // set when result is empty
};

/// F_S(radius * zeta) for each radius in (0, 1). Evaluation failures are
/// reported per entry. No extrapolation is attempted.
std::vector<RadialEntry> radial_sequence(const subsets::SubsetSpec& spec, const RootOfUnity& root,
                                         const std::vector<double>& radii,
                                         const EvalOptions& opts = {}, Route route = Route::Direct);

/// 1 - 2^{-j}, j = 1..count.
std::vector<double> geometric_radii(unsigned count = 20);

} // namespace qdensity::numeric
