#include "bhverify/config.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <thread>

namespace bhv {

namespace {

using nlohmann::ordered_json;

std::int64_t read_positive_int(const ordered_json& value, const std::string& key) {
    if (!value.is_number_integer())
        throw std::invalid_argument("config key '" + key + "' must be an integer");
    std::int64_t v = value.get<std::int64_t>();
    if (v <= 0)
        throw std::invalid_argument("config key '" + key + "' must be positive");
    return v;
}

int read_positive_small_int(const ordered_json& value, const std::string& key) {
    std::int64_t v = read_positive_int(value, key);
    if (v > std::numeric_limits<int>::max())
        throw std::invalid_argument("config key '" + key + "' is out of range");
    return static_cast<int>(v);
}

}  // namespace

int default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

void RunConfig::validate() const {
    auto require_positive = [](std::int64_t v, const char* name) {
        if (v <= 0)
            throw std::invalid_argument(std::string("config key '") + name +
                                        "' must be positive");
    };
    require_positive(max_degree, "max_degree");
    require_positive(max_terms, "max_terms");
    require_positive(bezout_t_bound, "bezout_t_bound");
    require_positive(window, "window");
    require_positive(jobs, "jobs");
    if (output_format != "json" && output_format != "text")
        throw std::invalid_argument("config key 'output_format' must be \"json\" or \"text\"");
}

GBOptions gb_options(const RunConfig& config) {
    GBOptions opts;
    opts.max_degree = config.max_degree;
    opts.max_terms = config.max_terms;
    return opts;
}

ordered_json run_config_to_json(const RunConfig& config) {
    return ordered_json{
        {"max_degree", config.max_degree},  {"max_terms", config.max_terms},
        {"bezout_t_bound", config.bezout_t_bound}, {"window", config.window},
        {"output_format", config.output_format},   {"jobs", config.jobs},
    };
}

RunConfig run_config_from_json(const ordered_json& j) {
    if (!j.is_object())
        throw std::invalid_argument("config must be a JSON object");
    RunConfig config;
    for (const auto& [key, value] : j.items()) {
        if (key == "max_degree") {
            config.max_degree = read_positive_int(value, key);
        } else if (key == "max_terms") {
            config.max_terms = read_positive_int(value, key);
        } else if (key == "bezout_t_bound") {
            config.bezout_t_bound = read_positive_small_int(value, key);
        } else if (key == "window") {
            config.window = read_positive_small_int(value, key);
        } else if (key == "output_format") {
            if (!value.is_string())
                throw std::invalid_argument("config key 'output_format' must be a string");
            config.output_format = value.get<std::string>();
        } else if (key == "jobs") {
            config.jobs = read_positive_small_int(value, key);
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    config.validate();
    return config;
}

RunConfig load_run_config() {
    const char* path = std::getenv("BHVERIFY_CONFIG");
    if (path == nullptr || *path == '\0') return RunConfig{};
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument(std::string("cannot open config file '") + path + "'");
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config file '") + path + "': " + e.what());
    }
    return run_config_from_json(j);
}

}  // namespace bhv
