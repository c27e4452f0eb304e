#pragma once

#include <optional>
#include <vector>

#include "azpp/cognition.hpp"
#include "azpp/config.hpp"
#include "azpp/conflict.hpp"
#include "azpp/grid.hpp"
#include "azpp/network.hpp"

namespace azpp {

// One tick's committed observables, emitted after all phases.
struct MetricsFrame {
    struct AgentRow {
        double affect = 0.0;
        double probability = 0.0;
        double contagion = 0.0;
        double disposition = 0.0;
        Mode mode = Mode::Quiet;
        int x = 0;
        int y = 0;
        int radius = 0;
        double damage = 0.0;
    };
    long tick = 0;
    std::vector<AgentRow> agents;
    long destroyed_count = 0;
    long active_count = 0;
    std::optional<double> avg_tie_strength;        // absent when n < 2
    std::optional<double> tie_strength_dispersion; // absent when n < 2
    double mean_contagion = 0.0;
};

// Owns model state and the per-tick phase loop. All randomness flows through
// role-separated streams derived from the master seed, so a (config, seed)
// pair fully determines every output byte.
class Model {
public:
    explicit Model(const SimConfig& config);

    // Executes one tick: environment update, perception, affect/probability
    // updates, contagion, disposition and mode selection, id-ordered actions,
    // retaliation accounting, homophily, scheduled shocks, frame emission.
    MetricsFrame step();

    long tick() const { return tick_; }
    const SimConfig& config() const { return config_; }
    const Grid& grid() const { return grid_; }
    const TieMatrix& ties() const { return ties_; }
    const std::vector<AgentProfile>& profiles() const { return profiles_; }
    const std::vector<CognitiveState>& states() const { return states_; }
    const std::vector<AttackEvent>& events() const { return events_; }

    // Per-agent perception from the current tick, for oracles and tests.
    const std::vector<double>& last_observations() const { return last_observations_; }
    const std::vector<double>& last_stimuli() const { return last_stimuli_; }

private:
    void apply_shock(long tick);

    SimConfig config_;
    Grid grid_;
    std::vector<AgentProfile> profiles_;
    std::vector<CognitiveState> states_;
    TieMatrix ties_;
    Rng env_rng_;
    Rng shock_rng_;
    std::vector<Rng> agent_rngs_;
    long tick_ = 0;
    std::vector<AttackEvent> events_;
    std::vector<double> last_observations_;
    std::vector<double> last_stimuli_;
};

struct RunResult {
    std::vector<MetricsFrame> frames;
    std::vector<AttackEvent> events;
};

// Runs config.n_ticks ticks in memory. The final grid/network state is
// available from the model passed back through `final_model` when needed.
RunResult run_model(const SimConfig& config);

}  // namespace azpp
