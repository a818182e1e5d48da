#pragma once

#include "bhverify/groebner.hpp"

#include "json.hpp"

#include <string>

namespace bhv {

inline constexpr const char* kToolVersion = "0.1.0";

/// Worker-thread count used when a config does not pin one: the machine's
/// hardware concurrency, never less than 1.
int default_jobs();

/// Runtime limits and output settings shared by the command-line tool and
/// the python bindings. Every numeric field must be positive.
struct RunConfig {
    std::int64_t max_degree = 80;
    std::int64_t max_terms = 2'000'000;
    int bezout_t_bound = 5;
    int window = 10;
    std::string output_format = "json";  // "json" or "text"
    int jobs = default_jobs();

    /// Throws std::invalid_argument on a non-positive field or an unknown
    /// output format.
    void validate() const;
};

/// Caps for the basis engine induced by a config.
GBOptions gb_options(const RunConfig& config);

nlohmann::ordered_json run_config_to_json(const RunConfig& config);

/// Strict inverse of run_config_to_json: unknown keys, wrong JSON types and
/// non-positive values are all rejected with std::invalid_argument. Absent
/// keys keep their defaults.
RunConfig run_config_from_json(const nlohmann::ordered_json& j);

/// Defaults, overridden by the JSON file named in the BHVERIFY_CONFIG
/// environment variable when that variable is set and non-empty.
RunConfig load_run_config();

}  // namespace bhv
