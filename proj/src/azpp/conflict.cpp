#include "azpp/conflict.hpp"

namespace azpp {

double inflicted_damage(double gamma_attacker, double alpha_aggr) {
    return alpha_aggr * (1.0 - gamma_attacker);
}

double retaliation_total(const std::vector<int>& harmed, const std::vector<double>& gammas,
                         double beta_ret) {
    double r = 0.0;
    for (int j : harmed) r += beta_ret * (1.0 - gammas[static_cast<size_t>(j)]);
    return r;
}

AttackEvent execute_fight(long tick, int attacker, Coord center, int radius, Grid& grid,
                          const std::vector<Coord>& positions_snapshot) {
    AttackEvent ev;
    ev.tick = tick;
    ev.attacker = attacker;
    ev.center = center;
    ev.radius = radius;
    ev.patches_destroyed = destroy_disc(grid, center, radius);
    for (int j = 0; j < static_cast<int>(positions_snapshot.size()); ++j) {
        if (j == attacker) continue;
        if (chebyshev_torus(positions_snapshot[static_cast<size_t>(j)], center, grid.width(),
                            grid.height()) <= radius)
            ev.harmed.push_back(j);
    }
    return ev;
}

Coord execute_flight(const Grid& grid, Coord position, int flight_radius, int sampling_radius,
                     Rng& rng) {
    const auto candidates =
        toroidal_neighborhood(position, flight_radius, grid.width(), grid.height());
    double best = 2.0;  // fractions are in [0,1]
    std::vector<Coord> tied;
    for (Coord c : candidates) {
        const double f = local_activation_fraction(grid, c, sampling_radius);
        if (f < best) {
            best = f;
            tied.clear();
            tied.push_back(c);
        } else if (f == best) {
            tied.push_back(c);
        }
    }
    // one draw per flight regardless of tie count, keeping stream
    // consumption independent of grid state
    return tied[static_cast<size_t>(rng.index(static_cast<int>(tied.size())))];
}

Coord random_walk(Coord position, int width, int height, Rng& rng) {
    static constexpr int kMoore[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                         {1, 0},   {-1, 1}, {0, 1},  {1, 1}};
    const int k = rng.index(8);
    return {wrap(position.x + kMoore[k][0], width), wrap(position.y + kMoore[k][1], height)};
}

}  // namespace azpp
