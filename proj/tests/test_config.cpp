#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bhverify/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace bhv;
using nlohmann::ordered_json;

namespace {

struct EnvGuard {
    explicit EnvGuard(const char* value) {
        if (value)
            setenv("BHVERIFY_CONFIG", value, 1);
        else
            unsetenv("BHVERIFY_CONFIG");
    }
    ~EnvGuard() { unsetenv("BHVERIFY_CONFIG"); }
};

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("defaults are positive and json round-trips") {
    RunConfig config;
    CHECK(config.max_degree == 80);
    CHECK(config.max_terms == 2'000'000);
    CHECK(config.bezout_t_bound == 5);
    CHECK(config.window == 10);
    CHECK(config.output_format == "json");
    CHECK(config.jobs >= 1);
    CHECK_NOTHROW(config.validate());

    RunConfig back = run_config_from_json(run_config_to_json(config));
    CHECK(run_config_to_json(back) == run_config_to_json(config));
}

TEST_CASE("unknown keys and wrong types are rejected") {
    CHECK_THROWS_AS(run_config_from_json(ordered_json{{"bogus", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(run_config_from_json(ordered_json{{"max_degree", "80"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_config_from_json(ordered_json{{"max_degree", 2.5}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_config_from_json(ordered_json{{"output_format", 3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_config_from_json(ordered_json::array()), std::invalid_argument);
}

TEST_CASE("non-positive values are rejected everywhere") {
    for (const char* key : {"max_degree", "max_terms", "bezout_t_bound", "window", "jobs"}) {
        CHECK_THROWS_AS(run_config_from_json(ordered_json{{key, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(run_config_from_json(ordered_json{{key, -3}}), std::invalid_argument);
    }
    RunConfig config;
    config.output_format = "yaml";
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("partial overrides keep the remaining defaults") {
    RunConfig config = run_config_from_json(ordered_json{{"max_terms", 12}, {"window", 4}});
    CHECK(config.max_terms == 12);
    CHECK(config.window == 4);
    CHECK(config.max_degree == 80);
    CHECK(config.bezout_t_bound == 5);
}

TEST_CASE("basis caps follow the config") {
    RunConfig config;
    config.max_degree = 7;
    config.max_terms = 99;
    GBOptions opts = gb_options(config);
    CHECK(opts.max_degree == 7);
    CHECK(opts.max_terms == 99);
}

TEST_CASE("environment variable selects a config file") {
    SUBCASE("unset variable gives the defaults") {
        EnvGuard guard(nullptr);
        CHECK(run_config_to_json(load_run_config()) == run_config_to_json(RunConfig{}));
    }
    SUBCASE("valid file overrides") {
        auto path = write_temp("bhverify_config_ok.json", "{\"max_degree\": 11, \"jobs\": 2}");
        EnvGuard guard(path.c_str());
        RunConfig config = load_run_config();
        CHECK(config.max_degree == 11);
        CHECK(config.jobs == 2);
        CHECK(config.max_terms == 2'000'000);
    }
    SUBCASE("missing file throws") {
        EnvGuard guard("/nonexistent/bhverify.json");
        CHECK_THROWS_AS(load_run_config(), std::invalid_argument);
    }
    SUBCASE("malformed json throws") {
        auto path = write_temp("bhverify_config_bad.json", "{\"max_degree\": ");
        EnvGuard guard(path.c_str());
        CHECK_THROWS_AS(load_run_config(), std::invalid_argument);
    }
    SUBCASE("unknown key in file throws") {
        auto path = write_temp("bhverify_config_key.json", "{\"max_depth\": 3}");
        EnvGuard guard(path.c_str());
        CHECK_THROWS_AS(load_run_config(), std::invalid_argument);
    }
}
