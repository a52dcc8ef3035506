#ifndef MULTIWAVE_SCENARIO_HPP
#define MULTIWAVE_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "multiwave/config.hpp"
#include "multiwave/field.hpp"

namespace mw {

struct RunOverrides {
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    int threads{1};
    bool verify{false};  // force verify_solution after solves
};

struct RunResult {
    int exit_code{0};  // 0 ok, 1 config, 2 numerical
    std::string message;
    std::vector<std::string> artifacts;  // paths written
};

// Executes the scenario pipeline owned by the config's kind and writes its
// CSV artifacts (and optional field snapshots) under the output directory.
RunResult run_scenario(const ScenarioConfig& config, const RunOverrides& overrides = {});
RunResult run_scenario_file(const std::string& config_path, const RunOverrides& overrides = {},
                            const std::optional<ScenarioKind>& kind_override = {});

// Deterministic data generation (uniforms drawn from a seeded mt19937_64 via
// fixed bit manipulation, so outputs are platform-identical).
Field make_field_from_config(const DataConfig& data, const GridConfig& grid, int hdim,
                             std::uint64_t fallback_seed, const char* what);

}  // namespace mw

#endif
