#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qdensity/numeric.hpp"

namespace qdensity::cli {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0.0;

    bool passed() const;
    nlohmann::json to_json() const;
};

struct VerifyParams {
    /// Series order; each suite has its own default.
    std::optional<std::size_t> order;
    /// Enumeration bound for partition oracles.
    std::optional<unsigned> bound;
    /// Restricts spec-driven suites to one subset (DSL).
    std::optional<std::string> subset;
    numeric::EvalOptions eval;
};

/// identities, duality, oracle, corollary12, sieve-vs-direct, qbinomial
const std::vector<std::string>& verify_suites();

/// Throws std::invalid_argument for an unknown suite or a bad subset.
VerifyReport run_verify(std::string_view suite, const VerifyParams& params = {});

} // namespace qdensity::cli
