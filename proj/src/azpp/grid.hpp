#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "azpp/rng.hpp"

namespace azpp {

// Patch states. Destroyed is absorbing: no operation transitions out of it.
enum class PatchState : uint8_t { Calm = 0, Active = 1, Destroyed = 2 };

struct Coord {
    int x = 0;
    int y = 0;
    bool operator==(const Coord&) const = default;
};

struct EnvParams {
    double attack_rate = 0.01;
    double extinction_rate = 0.05;
    bool operator==(const EnvParams&) const = default;
};

struct PatchCounts {
    long calm = 0;
    long active = 0;
    long destroyed = 0;
};

// Toroidal lattice of patches, dense row-major storage.
class Grid {
public:
    Grid(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }

    PatchState at(int x, int y) const { return cells_[static_cast<size_t>(y) * width_ + x]; }
    void set(int x, int y, PatchState s) { cells_[static_cast<size_t>(y) * width_ + x] = s; }

    PatchCounts counts() const;

private:
    int width_;
    int height_;
    std::vector<PatchState> cells_;
};

inline int wrap(int v, int extent) {
    int m = v % extent;
    return m < 0 ? m + extent : m;
}

// Chebyshev distance with toroidal wrap.
int chebyshev_torus(Coord a, Coord b, int width, int height);

// All (2r+1)^2 wrapped coordinates within Chebyshev distance <= radius of
// center, in deterministic row-major order (dy outer, dx inner). Requires
// 2*radius+1 <= min(width,height) so the coordinates are distinct.
std::vector<Coord> toroidal_neighborhood(Coord center, int radius, int width, int height);

// Each Calm patch independently becomes Active with probability attack_rate.
// Draws happen in row-major patch order from the given stream. Returns the
// number of patches flipped.
int seed_attacks(Grid& grid, double attack_rate, Rng& rng);

// Each Active patch independently reverts to Calm with probability
// extinction_rate; same draw-order contract. Returns the number reverted.
int extinguish(Grid& grid, double extinction_rate, Rng& rng);

// Fraction of Active patches within Chebyshev distance <= radius of center
// (center cell included), over the full (2r+1)^2 neighborhood.
double local_activation_fraction(const Grid& grid, Coord center, int radius);

// Destroys every non-Destroyed patch within Chebyshev distance <= radius.
// Returns the number of state changes; idempotent on a second application.
int destroy_disc(Grid& grid, Coord center, int radius);

// Plain-text snapshot: header "tick=<t> w=<w> h=<h>" then one row per grid
// row, '.'=Calm 'o'=Active 'X'=Destroyed.
std::string render_text(const Grid& grid, long tick);

// Binary PPM (P6): Calm=(255,255,0) Active=(255,165,0) Destroyed=(139,0,0).
std::string render_ppm(const Grid& grid);

}  // namespace azpp
