#pragma once

#include <vector>

#include "azpp/grid.hpp"

namespace azpp {

struct ConflictParams {
    double alpha_aggr = 0.5;    // aggression scaling constant
    double beta_ret = 0.5;      // retaliation sensitivity constant
    double damage_decay = 0.98; // per-tick multiplicative decay
    int flight_radius = 5;
    bool operator==(const ConflictParams&) const = default;
};

struct AttackEvent {
    long tick = 0;
    int attacker = 0;
    Coord center;
    int radius = 0;
    int patches_destroyed = 0;
    std::vector<int> harmed;  // other agents within radius at attack time, id order
};

// Damage inflicted on each harmed neighbor: alpha_aggr * (1 - IC_attacker).
double inflicted_damage(double gamma_attacker, double alpha_aggr);

// Retaliation accumulated by the attacker: sum over harmed j of
// beta_ret * (1 - gamma_j).
double retaliation_total(const std::vector<int>& harmed, const std::vector<double>& gammas,
                         double beta_ret);

// Applies destruction at `center` and collects the harmed set from the
// start-of-phase positions snapshot. Does not touch damage accounting.
AttackEvent execute_fight(long tick, int attacker, Coord center, int radius, Grid& grid,
                          const std::vector<Coord>& positions_snapshot);

// Destination minimizing local_activation_fraction at the agent's sampling
// radius over the flight disc; ties broken by one uniform draw over the tied
// candidates in row-major order.
Coord execute_flight(const Grid& grid, Coord position, int flight_radius, int sampling_radius,
                     Rng& rng);

// One uniform step to one of the 8 Moore neighbors, toroidal wrap.
Coord random_walk(Coord position, int width, int height, Rng& rng);

}  // namespace azpp
