#pragma once

#include <vector>

#include "azpp/grid.hpp"

namespace azpp {

// Floor for the impulse-control scalar; keeps thresholds finite.
inline constexpr double kGammaMin = 0.05;

struct RWParams {
    double alpha_rw = 0.5;  // learning rate
    double beta_rw = 0.6;   // stimulus salience
    bool operator==(const RWParams&) const = default;
};

// Static per-agent traits, fixed at model init.
struct AgentProfile {
    int agent_id = 0;
    bool mobile = true;
    double age = 35.0;
    double gamma = 1.0;          // impulse control, derived from age
    int memory_length = 3;       // configured m (window capacity gated by the memory flag)
    int sampling_radius = 2;
    double flight_threshold = 0.5;
    double theta_base = 0.6;
};

// gamma = clamp(1 - (age-18)/100, kGammaMin, 1). Defined for age >= 18;
// config validation rejects younger agents.
double impulse_control_from_age(double age);

// A' = A + alpha*beta*(lambda - A), lambda in {0,1}.
double rescorla_wagner_update(double affect, double stimulus, const RWParams& params);

// Ring buffer of the last m local activation fractions. The probability
// estimate is the mean over the entries held so far (no zero padding during
// warm-up).
class MemoryWindow {
public:
    explicit MemoryWindow(int capacity);

    // Push one observation (evicting the oldest when full) and return the
    // new mean.
    double push(double observation);

    double mean() const;
    int size() const { return size_; }
    int capacity() const { return static_cast<int>(buf_.size()); }

    // Entries oldest-first, for tests and oracles.
    std::vector<double> entries() const;

private:
    std::vector<double> buf_;
    int head_ = 0;  // next write slot
    int size_ = 0;
};

// r_d = floor(1 + 4*affect), in {1,...,5} over affect in [0,1].
int destructive_radius(double affect);

// theta_base / gamma when the age extension is on, else theta_base.
double activation_threshold(double theta_base, double gamma, bool age_enabled);

// D = A + P + C - theta - damage_penalty_coeff * damage.
double compute_disposition(double affect, double probability, double contagion, double theta,
                           double damage, double damage_penalty_coeff);

enum class Mode : uint8_t { Quiet = 0, Fight = 1, Flight = 2 };

const char* mode_name(Mode m);

// FIGHT iff D > 0; else FLIGHT iff enabled and P >= p_flight; else QUIET.
Mode choose_mode(double disposition, double probability, double p_flight, bool flight_enabled);

// Dynamic per-agent state, owned by the engine and mutated only inside the
// sequential phase loop.
struct CognitiveState {
    double affect = 0.0;
    MemoryWindow memory;
    double probability = 0.0;
    double contagion_in = 0.0;
    double disposition = 0.0;
    Mode mode = Mode::Quiet;
    double damage = 0.0;
    Coord position;

    explicit CognitiveState(int memory_capacity) : memory(memory_capacity) {}
};

// D[a][c] = A_grid[a] + P_fixed + C_grid[c] - theta_fixed. The D>0 boundary
// is the line A + C = theta_fixed - P_fixed.
std::vector<std::vector<double>> disposition_surface(const std::vector<double>& affect_grid,
                                                     const std::vector<double>& contagion_grid,
                                                     double p_fixed, double theta_fixed);

}  // namespace azpp
