#include "qdensity/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qdensity/errors.hpp"

namespace qdensity::partitions {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::optional<unsigned> Partition::smallest() const {
    if (parts_.empty()) return std::nullopt;
    return parts_.back();
}

std::optional<unsigned> Partition::largest() const {
    if (parts_.empty()) return std::nullopt;
    return parts_.front();
}

bool Partition::has_repeated_parts() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) != parts_.end();
}

PartitionStream::PartitionStream(unsigned n, unsigned bound) : n_(n) {
    if (n > bound) {
        throw ResourceLimitError("partition enumeration of n = " + std::to_string(n) +
                                 " exceeds the oracle bound " + std::to_string(bound));
    }
}

bool PartitionStream::next() {
    if (done_) return false;
    auto& a = current_.parts_;
    if (!started_) {
        started_ = true;
        a.clear();
        if (n_ > 0) a.push_back(n_);
        current_.size_ = n_;
        return true;
    }
    // Rightmost part greater than 1.
    std::size_t k = a.size();
    while (k > 0 && a[k - 1] == 1) --k;
    if (k == 0) {
        done_ = true;
        return false;
    }
    --k;
    unsigned rem = static_cast<unsigned>(a.size() - k - 1) + 1;
    const unsigned cap = --a[k];
    a.resize(k + 1);
    while (rem > 0) {
        const unsigned part = std::min(cap, rem);
        a.push_back(part);
        rem -= part;
    }
    return true;
}

std::vector<Partition> enumerate(unsigned n, unsigned bound) {
    std::vector<Partition> out;
    PartitionStream s(n, bound);
    while (s.next()) out.push_back(s.current());
    return out;
}

int mu_p(const Partition& p) {
    if (p.has_repeated_parts()) return 0;
    return p.length() % 2 == 0 ? 1 : -1;
}

std::int64_t f_s_coefficient_oracle(const subsets::SubsetSpec& spec, unsigned n, unsigned bound) {
    if (n == 0) throw std::invalid_argument("oracle coefficients are defined for n >= 1");
    std::int64_t total = 0;
    PartitionStream s(n, bound);
    while (s.next()) {
        const auto& p = s.current();
        if (spec.contains(*p.smallest())) total += mu_star_p(p);
    }
    return total;
}

DistinctCounts distinct_counts(unsigned n, unsigned bound) {
    DistinctCounts c;
    PartitionStream s(n, bound);
    while (s.next()) {
        const auto& p = s.current();
        if (p.length() == 0 || p.has_repeated_parts()) continue;
        const bool even_count = p.length() % 2 == 0;
        const bool odd_smallest = *p.smallest() % 2 == 1;
        if (odd_smallest) {
            (even_count ? c.odd_plus : c.odd_minus) += 1;
        } else {
            (even_count ? c.even_plus : c.even_minus) += 1;
        }
    }
    return c;
}

} // namespace qdensity::partitions
