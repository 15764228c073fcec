#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qdensity/subsets.hpp"

namespace qdensity::partitions {

/// Largest n the brute-force oracle enumerates by default; p(60) = 966467.
inline constexpr unsigned kDefaultOracleBound = 60;

/// Non-increasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and non-increasing.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }
    std::optional<unsigned> smallest() const;
    std::optional<unsigned> largest() const;
    bool has_repeated_parts() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    friend class PartitionStream;

    std::vector<unsigned> parts_;
    unsigned size_ = 0;
};

/// Streams the partitions of n in descending lexicographic order:
/// (n), (n-1, 1), (n-2, 2), (n-2, 1, 1), ..., (1, ..., 1).
///
/// Usage: `while (s.next()) use(s.current());`
class PartitionStream {
public:
    /// Throws ResourceLimitError if n > bound.
    explicit PartitionStream(unsigned n, unsigned bound = kDefaultOracleBound);

    bool next();
    const Partition& current() const noexcept { return current_; }

private:
    unsigned n_;
    bool started_ = false;
    bool done_ = false;
    Partition current_;
};

/// All partitions of n, in stream order.
std::vector<Partition> enumerate(unsigned n, unsigned bound = kDefaultOracleBound);

/// Partition Moebius function: 0 with a repeated part, else (-1)^length.
int mu_p(const Partition& p);
inline int mu_star_p(const Partition& p) { return -mu_p(p); }

/// Coefficient of q^n in F_S: sum of -mu_p over partitions of n with smallest part in S.
std::int64_t f_s_coefficient_oracle(const subsets::SubsetSpec& spec, unsigned n,
                                    unsigned bound = kDefaultOracleBound);

/// Partitions of n into distinct parts, split by parity of the number of parts
/// (plus = even count, minus = odd count) and parity of the smallest part.
struct DistinctCounts {
    std::uint64_t odd_plus = 0;
    std::uint64_t odd_minus = 0;
    std::uint64_t even_plus = 0;
    std::uint64_t even_minus = 0;

    std::int64_t odd_difference() const {
        return static_cast<std::int64_t>(odd_plus) - static_cast<std::int64_t>(odd_minus);
    }
    std::int64_t even_difference() const {
        return static_cast<std::int64_t>(even_plus) - static_cast<std::int64_t>(even_minus);
    }

    friend bool operator==(const DistinctCounts&, const DistinctCounts&) = default;
};

DistinctCounts distinct_counts(unsigned n, unsigned bound = kDefaultOracleBound);

} // namespace qdensity::partitions
