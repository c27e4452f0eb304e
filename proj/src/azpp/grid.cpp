#include "azpp/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace azpp {

Grid::Grid(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1) throw std::invalid_argument("grid dimensions must be positive");
    cells_.assign(static_cast<size_t>(width) * height, PatchState::Calm);
}

PatchCounts Grid::counts() const {
    PatchCounts c;
    for (PatchState s : cells_) {
        switch (s) {
            case PatchState::Calm: ++c.calm; break;
            case PatchState::Active: ++c.active; break;
            case PatchState::Destroyed: ++c.destroyed; break;
        }
    }
    return c;
}

int chebyshev_torus(Coord a, Coord b, int width, int height) {
    int dx = std::abs(a.x - b.x);
    int dy = std::abs(a.y - b.y);
    dx = std::min(dx, width - dx);
    dy = std::min(dy, height - dy);
    return std::max(dx, dy);
}

std::vector<Coord> toroidal_neighborhood(Coord center, int radius, int width, int height) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    if (2 * radius + 1 > std::min(width, height))
        throw std::invalid_argument("radius too large for grid: 2*radius+1 must not exceed min(width,height)");
    std::vector<Coord> out;
    out.reserve(static_cast<size_t>(2 * radius + 1) * (2 * radius + 1));
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx)
            out.push_back({wrap(center.x + dx, width), wrap(center.y + dy, height)});
    return out;
}

int seed_attacks(Grid& grid, double attack_rate, Rng& rng) {
    int flipped = 0;
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x) {
            if (grid.at(x, y) != PatchState::Calm) continue;
            if (rng.bernoulli(attack_rate)) {
                grid.set(x, y, PatchState::Active);
                ++flipped;
            }
        }
    return flipped;
}

int extinguish(Grid& grid, double extinction_rate, Rng& rng) {
    int reverted = 0;
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x) {
            if (grid.at(x, y) != PatchState::Active) continue;
            if (rng.bernoulli(extinction_rate)) {
                grid.set(x, y, PatchState::Calm);
                ++reverted;
            }
        }
    return reverted;
}

double local_activation_fraction(const Grid& grid, Coord center, int radius) {
    int active = 0;
    const auto cells = toroidal_neighborhood(center, radius, grid.width(), grid.height());
    for (Coord c : cells)
        if (grid.at(c.x, c.y) == PatchState::Active) ++active;
    return static_cast<double>(active) / static_cast<double>(cells.size());
}

int destroy_disc(Grid& grid, Coord center, int radius) {
    int changed = 0;
    for (Coord c : toroidal_neighborhood(center, radius, grid.width(), grid.height())) {
        if (grid.at(c.x, c.y) != PatchState::Destroyed) {
            grid.set(c.x, c.y, PatchState::Destroyed);
            ++changed;
        }
    }
    return changed;
}

std::string render_text(const Grid& grid, long tick) {
    char header[64];
    std::snprintf(header, sizeof(header), "tick=%ld w=%d h=%d\n", tick, grid.width(), grid.height());
    std::string out(header);
    out.reserve(out.size() + static_cast<size_t>(grid.height()) * (grid.width() + 1));
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            switch (grid.at(x, y)) {
                case PatchState::Calm: out += '.'; break;
                case PatchState::Active: out += 'o'; break;
                case PatchState::Destroyed: out += 'X'; break;
            }
        }
        out += '\n';
    }
    return out;
}

std::string render_ppm(const Grid& grid) {
    char header[64];
    std::snprintf(header, sizeof(header), "P6\n%d %d\n255\n", grid.width(), grid.height());
    std::string out(header);
    out.reserve(out.size() + static_cast<size_t>(grid.width()) * grid.height() * 3);
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x) {
            switch (grid.at(x, y)) {
                case PatchState::Calm: out += '\xff'; out += '\xff'; out += '\x00'; break;
                case PatchState::Active: out += '\xff'; out += '\xa5'; out += '\x00'; break;
                case PatchState::Destroyed: out += '\x8b'; out += '\x00'; out += '\x00'; break;
            }
        }
    return out;
}

}  // namespace azpp
