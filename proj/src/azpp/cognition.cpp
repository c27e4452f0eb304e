#include "azpp/cognition.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace azpp {

double impulse_control_from_age(double age) {
    assert(age >= 18.0);
    const double raw = 1.0 - (age - 18.0) / 100.0;
    return std::clamp(raw, kGammaMin, 1.0);
}

double rescorla_wagner_update(double affect, double stimulus, const RWParams& params) {
    return affect + params.alpha_rw * params.beta_rw * (stimulus - affect);
}

MemoryWindow::MemoryWindow(int capacity) {
    if (capacity < 1) throw std::invalid_argument("memory capacity must be >= 1");
    buf_.resize(static_cast<size_t>(capacity));
}

double MemoryWindow::push(double observation) {
    buf_[static_cast<size_t>(head_)] = observation;
    head_ = (head_ + 1) % static_cast<int>(buf_.size());
    if (size_ < static_cast<int>(buf_.size())) ++size_;
    return mean();
}

double MemoryWindow::mean() const {
    if (size_ == 0) return 0.0;
    // oldest-first summation, matching the brute-force oracle
    double sum = 0.0;
    for (double v : entries()) sum += v;
    return sum / static_cast<double>(size_);
}

std::vector<double> MemoryWindow::entries() const {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(size_));
    const int cap = static_cast<int>(buf_.size());
    int start = (head_ - size_ + cap) % cap;
    for (int k = 0; k < size_; ++k) out.push_back(buf_[static_cast<size_t>((start + k) % cap)]);
    return out;
}

int destructive_radius(double affect) {
    return static_cast<int>(std::floor(1.0 + 4.0 * affect));
}

double activation_threshold(double theta_base, double gamma, bool age_enabled) {
    return age_enabled ? theta_base / gamma : theta_base;
}

double compute_disposition(double affect, double probability, double contagion, double theta,
                           double damage, double damage_penalty_coeff) {
    return affect + probability + contagion - theta - damage_penalty_coeff * damage;
}

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::Quiet: return "QUIET";
        case Mode::Fight: return "FIGHT";
        case Mode::Flight: return "FLIGHT";
    }
    return "QUIET";
}

Mode choose_mode(double disposition, double probability, double p_flight, bool flight_enabled) {
    if (disposition > 0.0) return Mode::Fight;
    if (flight_enabled && probability >= p_flight) return Mode::Flight;
    return Mode::Quiet;
}

std::vector<std::vector<double>> disposition_surface(const std::vector<double>& affect_grid,
                                                     const std::vector<double>& contagion_grid,
                                                     double p_fixed, double theta_fixed) {
    if (affect_grid.empty() || contagion_grid.empty())
        throw std::invalid_argument("surface grids must be nonempty");
    std::vector<std::vector<double>> surface(affect_grid.size(),
                                             std::vector<double>(contagion_grid.size()));
    for (size_t a = 0; a < affect_grid.size(); ++a)
        for (size_t c = 0; c < contagion_grid.size(); ++c)
            surface[a][c] = affect_grid[a] + p_fixed + contagion_grid[c] - theta_fixed;
    return surface;
}

}  // namespace azpp
