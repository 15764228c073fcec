#include "qdensity/subsets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "qdensity/errors.hpp"

namespace qdensity::subsets {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (out > kSaturated / base) return kSaturated;
        out *= base;
    }
    return out;
}

[[noreturn]] void period_too_large(std::uint64_t cap) {
    throw ResourceLimitError("period exceeds cap of " + std::to_string(cap) +
                             "; use the direct evaluation route instead of the sieve");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    if (a != 0 && b > cap / a) period_too_large(cap);
    return a * b;
}

} // namespace

bool operator==(const Progression& a, const Progression& b) {
    return a.residue == b.residue && a.modulus == b.modulus;
}
bool operator==(const KFree& a, const KFree& b) {
    return a.power == b.power && a.prime_bound == b.prime_bound;
}
bool operator==(const AllPositive&, const AllPositive&) { return true; }
bool operator==(const Explicit& a, const Explicit& b) { return a.members == b.members; }
bool operator==(const UnionOf& a, const UnionOf& b) { return a.terms == b.terms; }
bool operator==(const SubsetSpec& a, const SubsetSpec& b) { return a.value_ == b.value_; }

SubsetSpec::SubsetSpec(Variant v) : value_(std::move(v)) {
    if (const auto* kf = std::get_if<KFree>(&value_)) {
        for (auto p : primes_up_to(kf->prime_bound)) {
            prime_powers_.push_back(saturating_pow(p, kf->power));
        }
    }
}

SubsetSpec SubsetSpec::progression(std::uint64_t residue, std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("progression modulus must be >= 1");
    if (residue >= modulus) throw std::invalid_argument("progression requires 0 <= r < t");
    return SubsetSpec(Progression{residue, modulus});
}

SubsetSpec SubsetSpec::kfree(unsigned power, std::uint64_t prime_bound) {
    if (power < 2) throw std::invalid_argument("kfree requires k >= 2");
    if (prime_bound < 2) throw std::invalid_argument("kfree requires N >= 2");
    return SubsetSpec(KFree{power, prime_bound});
}

SubsetSpec SubsetSpec::all() { return SubsetSpec(AllPositive{}); }

SubsetSpec SubsetSpec::explicit_set(std::set<std::uint64_t> members) {
    if (members.count(0) != 0) throw std::invalid_argument("explicit sets hold positive integers");
    return SubsetSpec(Explicit{std::move(members)});
}

SubsetSpec SubsetSpec::union_of(std::vector<SubsetSpec> terms) {
    if (terms.empty()) throw std::invalid_argument("union needs at least one term");
    std::vector<SubsetSpec> flat;
    for (auto& t : terms) {
        if (t.is_explicit()) throw std::invalid_argument("explicit sets cannot appear in a union");
        if (auto* u = std::get_if<UnionOf>(&t.value_)) {
            for (auto& inner : u->terms) flat.push_back(inner);
        } else {
            flat.push_back(std::move(t));
        }
    }
    return SubsetSpec(UnionOf{std::move(flat)});
}

bool SubsetSpec::contains(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("subsets contain positive integers only; n = 0");
    return contains_unchecked(n);
}

bool SubsetSpec::contains_unchecked(std::uint64_t n) const {
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Progression>) {
                return n % v.modulus == v.residue;
            } else if constexpr (std::is_same_v<T, KFree>) {
                for (auto pk : prime_powers_) {
                    if (pk <= n && n % pk == 0) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, AllPositive>) {
                return true;
            } else if constexpr (std::is_same_v<T, Explicit>) {
                return v.members.count(n) != 0;
            } else {
                return std::any_of(v.terms.begin(), v.terms.end(),
                                   [n](const SubsetSpec& t) { return t.contains_unchecked(n); });
            }
        },
        value_);
}

bool PeriodicReduction::contains_residue(std::uint64_t r) const {
    return std::binary_search(residues.begin(), residues.end(), r);
}

Rational PeriodicReduction::density() const {
    return Rational(static_cast<long long>(residues.size())) / Rational(period);
}

PeriodicReduction period_residues(const SubsetSpec& spec, std::uint64_t period_cap) {
    return std::visit(
        [&](const auto& v) -> PeriodicReduction {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Progression>) {
                if (v.modulus > period_cap) period_too_large(period_cap);
                return {v.modulus, {v.residue}};
            } else if constexpr (std::is_same_v<T, KFree>) {
                std::vector<std::uint64_t> powers;
                std::uint64_t period = 1;
                for (auto p : primes_up_to(v.prime_bound)) {
                    auto pk = saturating_pow(p, v.power);
                    if (pk == kSaturated) period_too_large(period_cap);
                    period = checked_mul(period, pk, period_cap);
                    powers.push_back(pk);
                }
                PeriodicReduction out{period, {}};
                for (std::uint64_t r = 0; r < period; ++r) {
                    bool keep = std::none_of(powers.begin(), powers.end(),
                                             [r](std::uint64_t pk) { return r % pk == 0; });
                    if (keep) out.residues.push_back(r);
                }
                return out;
            } else if constexpr (std::is_same_v<T, AllPositive>) {
                return {1, {0}};
            } else if constexpr (std::is_same_v<T, Explicit>) {
                throw std::invalid_argument("explicit sets have no periodic reduction");
            } else {
                std::vector<PeriodicReduction> parts;
                std::uint64_t period = 1;
                for (const auto& t : v.terms) {
                    parts.push_back(period_residues(t, period_cap));
                    auto g = std::gcd(period, parts.back().period);
                    period = checked_mul(period / g, parts.back().period, period_cap);
                }
                std::vector<bool> member(period, false);
                for (const auto& part : parts) {
                    for (std::uint64_t base = 0; base < period; base += part.period) {
                        for (auto r : part.residues) member[base + r] = true;
                    }
                }
                PeriodicReduction out{period, {}};
                for (std::uint64_t r = 0; r < period; ++r) {
                    if (member[r]) out.residues.push_back(r);
                }
                return out;
            }
        },
        spec.variant());
}

Rational density(const SubsetSpec& spec) {
    return std::visit(
        [&](const auto& v) -> Rational {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Progression>) {
                return Rational(1) / Rational(v.modulus);
            } else if constexpr (std::is_same_v<T, KFree>) {
                Rational d = 1;
                for (auto p : primes_up_to(v.prime_bound)) {
                    boost::multiprecision::cpp_int pk = boost::multiprecision::pow(
                        boost::multiprecision::cpp_int(p), v.power);
                    d *= Rational(pk - 1) / Rational(pk);
                }
                return d;
            } else if constexpr (std::is_same_v<T, AllPositive>) {
                return Rational(1);
            } else if constexpr (std::is_same_v<T, Explicit>) {
                throw std::invalid_argument("explicit sets have no arithmetic density");
            } else {
                return period_residues(spec).density();
            }
        },
        spec.variant());
}

std::string render(const SubsetSpec& spec) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Progression>) {
                return std::to_string(v.residue) + " mod " + std::to_string(v.modulus);
            } else if constexpr (std::is_same_v<T, KFree>) {
                return "kfree " + std::to_string(v.power) + " " + std::to_string(v.prime_bound);
            } else if constexpr (std::is_same_v<T, AllPositive>) {
                return "all";
            } else if constexpr (std::is_same_v<T, Explicit>) {
                std::ostringstream os;
                os << "{";
                bool first = true;
                for (auto m : v.members) {
                    os << (first ? "" : ", ") << m;
                    first = false;
                }
                os << "}";
                return os.str();
            } else {
                std::string out;
                for (std::size_t i = 0; i < v.terms.size(); ++i) {
                    if (i) out += " | ";
                    out += render(v.terms[i]);
                }
                return out;
            }
        },
        spec.variant());
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

Rational bernoulli(unsigned k) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    std::vector<Rational> b(k + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= k; ++m) {
        boost::multiprecision::cpp_int binom = 1;  // C(m+1, 0)
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j) {
            acc += Rational(binom) * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[m] = -acc / Rational(m + 1);
    }
    return b[k];
}

ZetaReciprocal zeta_reciprocal_even(unsigned k) {
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("zeta_reciprocal_even requires an even k >= 2");
    }
    boost::multiprecision::cpp_int factorial = 1;
    for (unsigned i = 2; i <= k; ++i) factorial *= i;
    boost::multiprecision::cpp_int two_pow = boost::multiprecision::cpp_int(1) << (k - 1);
    Rational c = Rational(factorial) / (bernoulli(k) * Rational(two_pow));
    if ((k / 2 + 1) % 2 != 0) c = -c;

    const long double pi = boost::math::constants::pi<long double>();
    long double value = static_cast<long double>(c) / std::pow(pi, static_cast<long double>(k));
    return {k, c, static_cast<double>(value)};
}

} // namespace qdensity::subsets
