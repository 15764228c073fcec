#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qdensity::subsets {

using Rational = boost::multiprecision::cpp_rational;

/// Default cap on the period M of a sieve reduction.
inline constexpr std::uint64_t kDefaultPeriodCap = 10'000'000;

/// Positive integers n = residue (mod modulus).
struct Progression {
    std::uint64_t residue = 0;
    std::uint64_t modulus = 1;
};

/// Positive integers not divisible by p^power for any prime p <= prime_bound.
struct KFree {
    unsigned power = 2;
    std::uint64_t prime_bound = 2;
};

struct AllPositive {};

/// Finite set, for tests. Has no periodic reduction.
struct Explicit {
    std::set<std::uint64_t> members;
};

class SubsetSpec;

struct UnionOf {
    std::vector<SubsetSpec> terms;
};

/// Declarative description of a set S of positive integers.
///
/// Constructed only through the validating factories below. Membership data
/// for KFree (the prime powers p^k) is computed once on construction, so
/// contains() is cheap enough to call once per term of a long q-series sum.
class SubsetSpec {
public:
    using Variant = std::variant<Progression, KFree, AllPositive, Explicit, UnionOf>;

    static SubsetSpec progression(std::uint64_t residue, std::uint64_t modulus);
    static SubsetSpec kfree(unsigned power, std::uint64_t prime_bound);
    static SubsetSpec all();
    static SubsetSpec explicit_set(std::set<std::uint64_t> members);
    /// Union of non-union, non-explicit specs; nested unions are flattened.
    static SubsetSpec union_of(std::vector<SubsetSpec> terms);

    const Variant& variant() const noexcept { return value_; }

    bool is_explicit() const noexcept { return std::holds_alternative<Explicit>(value_); }

    /// True iff n is in S. Throws std::invalid_argument for n = 0.
    bool contains(std::uint64_t n) const;

    friend bool operator==(const SubsetSpec& a, const SubsetSpec& b);

private:
    explicit SubsetSpec(Variant v);

    bool contains_unchecked(std::uint64_t n) const;

    Variant value_;
    // p^k for each prime p <= N, saturated to UINT64_MAX on overflow.
    std::vector<std::uint64_t> prime_powers_;
};

bool operator==(const Progression& a, const Progression& b);
bool operator==(const KFree& a, const KFree& b);
bool operator==(const AllPositive&, const AllPositive&);
bool operator==(const Explicit& a, const Explicit& b);
bool operator==(const UnionOf& a, const UnionOf& b);

inline bool contains(const SubsetSpec& spec, std::uint64_t n) { return spec.contains(n); }

/// S restricted to its period: n in S iff (n mod period) is in residues (n >= 1).
struct PeriodicReduction {
    std::uint64_t period = 1;
    std::vector<std::uint64_t> residues;  // sorted, unique, each < period

    bool contains_residue(std::uint64_t r) const;
    Rational density() const;
};

/// Reduce a spec to residues modulo its period. Throws ResourceLimitError
/// when the period exceeds `period_cap`, std::invalid_argument for Explicit.
PeriodicReduction period_residues(const SubsetSpec& spec,
                                  std::uint64_t period_cap = kDefaultPeriodCap);

/// Exact arithmetic density. Union densities go through the merged residue
/// set, so they share the period cap.
Rational density(const SubsetSpec& spec);

/// Canonical text form; parse(render(s)) == s for every non-explicit spec.
std::string render(const SubsetSpec& spec);

/// Parse the subset grammar:
///   spec := term { "|" term }
///   term := INT "mod" INT | "kfree" INT INT | "all"
/// Throws ParseError on syntax or semantic errors.
SubsetSpec parse(std::string_view text);

/// Primes p <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Bernoulli number B_k with B_1 = -1/2.
Rational bernoulli(unsigned k);

/// 1/zeta(k) = coefficient / pi^k for even k >= 2.
struct ZetaReciprocal {
    unsigned k = 2;
    Rational coefficient;
    double value = 0.0;
};

/// Throws std::invalid_argument for odd k or k < 2.
ZetaReciprocal zeta_reciprocal_even(unsigned k);

} // namespace qdensity::subsets
