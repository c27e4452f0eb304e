#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "azpp/cognition.hpp"
#include "azpp/conflict.hpp"
#include "azpp/grid.hpp"

namespace azpp {

// Scenario/CLI rejection; maps to exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failure with path context; maps to exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ShockMode : uint8_t { Uniform, PerAgentRandom };

struct ShockParams {
    int period = 200;
    double magnitude = 0.5;
    ShockMode mode = ShockMode::PerAgentRandom;
    bool operator==(const ShockParams&) const = default;
};

// Scripted threat forcing: the rect is held Active (Destroyed stays
// Destroyed) after the environment phases for ticks in [start,end].
struct PulseParams {
    bool enabled = false;
    int start = 100;
    int end = 150;
    int x = 23;
    int y = 23;
    int width = 5;
    int height = 5;
    bool operator==(const PulseParams&) const = default;
};

struct SurfaceParams {
    int resolution = 50;
    double p_fixed = 0.2;
    double c_max = 1.0;
    bool operator==(const SurfaceParams&) const = default;
};

struct ExtensionFlags {
    bool age_impulse = false;
    bool endogenous_radius = false;
    bool flight = false;
    bool memory = false;
    bool retaliation = false;
    bool coupling_surface_output = false;
    bool homophily = false;
    bool shocks = false;
    bool operator==(const ExtensionFlags&) const = default;
};

struct AgentOverride {
    std::optional<double> age;
    std::optional<bool> mobile;
    std::optional<int> memory_length;
    std::optional<int> x;
    std::optional<int> y;
    bool operator==(const AgentOverride&) const = default;
};

struct OutputParams {
    std::string dir;  // empty = derive from config name + seed under the output root
    bool network_dump = false;
    bool operator==(const OutputParams&) const = default;
};

struct SimConfig {
    int grid_width = 50;
    int grid_height = 50;
    int n_agents = 3;
    long n_ticks = 1000;
    uint64_t master_seed = 1;
    EnvParams env;
    RWParams rw;
    ConflictParams conflict;
    double theta_base = 0.6;
    double p_flight = 0.5;
    double alpha_hom = 0.1;
    double damage_penalty_coeff = 0.1;
    int memory_length = 3;
    int sampling_radius = 2;
    int fixed_radius = 1;
    double age_mean = 35.0;
    double age_sd = 12.0;
    ExtensionFlags ext;
    ShockParams shock;
    PulseParams pulse;
    SurfaceParams surface;
    OutputParams output;
    std::map<int, AgentOverride> agents;
    bool operator==(const SimConfig&) const = default;
};

// Parses the INI-style scenario format (see docs/config_keys.md). Unknown
// sections or keys are errors; absent keys take defaults. The result is
// validated.
SimConfig parse_config_text(const std::string& text);

// Reads and parses a scenario file; missing/unreadable file raises IoError.
SimConfig parse_config(const std::string& path);

// Canonical text form; parse(serialize(c)) == c. Doubles use shortest
// round-trip formatting.
std::string serialize_config(const SimConfig& config);

// Every violation names the offending key and constraint.
void validate_config(const SimConfig& config);

// FNV-1a over the canonical serialization.
uint64_t config_hash(const SimConfig& config);
std::string config_hash_hex(const SimConfig& config);

}  // namespace azpp
