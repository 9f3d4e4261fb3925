#pragma once

// Run configuration: INI-style sections [technology], [architecture] and
// [experiment]. Values may carry an engineering suffix and the key's unit
// ("40ns", "0.2fF/um", "900mV"). Unknown sections or keys are errors.

#include "mvroute/arch.hpp"
#include "mvroute/interconnect.hpp"
#include "mvroute/variability.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mvroute {

struct ExperimentConfig {
    std::vector<double> lengths{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1000};
    RepeaterMode mode = RepeaterMode::STD;
    double cycle_s = 0.0;  // 0: the mode's default cycle time
    double unit_length_um = 46.0;
    int loads_per_segment = 4;
    McConfig mc;

    [[nodiscard]] double cycle_time() const noexcept {
        return cycle_s > 0.0 ? cycle_s : default_cycle_time(mode);
    }
    [[nodiscard]] TrackConfig track() const;
};

struct ConfigKey {
    std::string section;
    std::string key;
    std::string unit;  // empty when dimensionless
    std::string help;
};

/// Every accepted key, in documentation order.
[[nodiscard]] const std::vector<ConfigKey>& config_keys();

struct RunConfig {
    Technology tech;
    ArchitectureSpec arch;
    ExperimentConfig exp;

    /// Sets one key from text. Throws ConfigError naming section.key.
    void set(const std::string& section, const std::string& key, const std::string& value);
    /// Cross-field checks. Throws ConfigError.
    void validate() const;
};

/// Defaults overlaid with the file's keys.
[[nodiscard]] RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
[[nodiscard]] RunConfig load_config_file(const std::string& path);
/// Applies a file's keys on top of an existing configuration.
void overlay_config(RunConfig& cfg, const std::string& text, const std::string& source);

/// Name of the environment variable holding the default config path.
inline constexpr const char* kConfigEnvVar = "MVROUTE_CONFIG";

/// Number with optional engineering suffix and optional trailing `unit`.
/// Throws ConfigError mentioning `name`.
[[nodiscard]] double parse_quantity(const std::string& text, const std::string& unit, const std::string& name);

/// "1,2,4" -> {1, 2, 4}; throws ConfigError on bad or empty entries.
[[nodiscard]] std::vector<double> parse_number_list(const std::string& text);

}  // namespace mvroute
