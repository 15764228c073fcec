#pragma once
// Independent reference computations used only by the tests. Nothing here
// calls into the library's series, partition or numeric code paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <vector>

namespace oracle {

/// Recursive partition generator: parts non-increasing, each <= max_part.
inline void each_partition(unsigned n, unsigned max_part, std::vector<unsigned>& parts,
                           const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (n == 0) {
        fn(parts);
        return;
    }
    for (unsigned p = std::min(n, max_part); p >= 1; --p) {
        parts.push_back(p);
        each_partition(n - p, p, parts, fn);
        parts.pop_back();
    }
}

inline void each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> parts;
    each_partition(n, n, parts, fn);
}

inline int mobius(const std::vector<unsigned>& parts) {
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] == parts[i - 1]) return 0;
    }
    return parts.size() % 2 == 0 ? 1 : -1;
}

/// sum over partitions of n of mu_P.
inline long long mobius_sum(unsigned n) {
    long long s = 0;
    each_partition(n, [&](const std::vector<unsigned>& p) { s += mobius(p); });
    return s;
}

/// Coefficient of q^n in F_S, with S given as a predicate on positive integers.
inline long long fs_coefficient(unsigned n, const std::function<bool(unsigned)>& in_s) {
    long long s = 0;
    each_partition(n, [&](const std::vector<unsigned>& p) {
        if (!p.empty() && in_s(p.back())) s -= mobius(p);
    });
    return s;
}

/// Number of partitions of n with largest part in S.
inline long long largest_part_count(unsigned n, const std::function<bool(unsigned)>& in_s) {
    long long s = 0;
    each_partition(n, [&](const std::vector<unsigned>& p) {
        if (!p.empty() && in_s(p.front())) ++s;
    });
    return s;
}

/// sum_{n>=1} (-1)^{n+1} q^{n^2}, summed until terms drop below 1e-300.
inline std::complex<double> theta_alternating(std::complex<double> q) {
    std::complex<double> s = 0.0;
    for (int n = 1; n < 100000; ++n) {
        const auto t = std::pow(q, n * n);
        if (std::abs(t) < 1e-300) break;
        s += (n % 2 == 1 ? 1.0 : -1.0) * t;
    }
    return s;
}

/// prod_{m=0}^{count-1} (1 - a q^m), written independently of the library.
inline std::complex<double> plain_product(std::complex<double> a, std::complex<double> q, int count) {
    std::complex<double> p = 1.0;
    for (int m = 0; m < count; ++m) p *= 1.0 - a * std::pow(q, m);
    return p;
}

} // namespace oracle
