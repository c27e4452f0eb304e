#include "azpp/network.hpp"

#include <cmath>
#include <stdexcept>

namespace azpp {

TieMatrix::TieMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("agent count must be >= 1");
    w_.assign(static_cast<size_t>(n) * n, 0.0);
    if (n > 1) {
        const double uniform = 1.0 / static_cast<double>(n - 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) set_weight(i, j, uniform);
    }
}

double TieMatrix::row_sum(int i) const {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += weight(i, j);
    return s;
}

double contagion_input(int i, const TieMatrix& ties, const std::vector<double>& solo) {
    double c = 0.0;
    for (int j = 0; j < ties.size(); ++j) {
        if (j == i) continue;
        c += ties.weight(i, j) * solo[static_cast<size_t>(j)];
    }
    return c;
}

void homophily_update(TieMatrix& ties, const std::vector<double>& affects, double alpha_hom) {
    const int n = ties.size();
    if (n < 2) return;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double raw = ties.weight(i, j) +
                               homophily_increment(alpha_hom, affects[static_cast<size_t>(i)],
                                                   affects[static_cast<size_t>(j)]);
            ties.set_weight(i, j, raw);
        }
        const double sum = ties.row_sum(i);
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            ties.set_weight(i, j, ties.weight(i, j) / sum);
        }
    }
}

std::optional<double> average_tie_strength(const TieMatrix& ties) {
    const int n = ties.size();
    if (n < 2) return std::nullopt;
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += ties.weight(i, j);
    return s / static_cast<double>(n) / static_cast<double>(n - 1);
}

std::optional<double> tie_strength_dispersion(const TieMatrix& ties) {
    const int n = ties.size();
    if (n < 2) return std::nullopt;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        double mean = 0.0;
        for (int j = 0; j < n; ++j)
            if (i != j) mean += ties.weight(i, j);
        mean /= static_cast<double>(n - 1);
        double var = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = ties.weight(i, j) - mean;
            var += d * d;
        }
        total += std::sqrt(var / static_cast<double>(n - 1));
    }
    return total / static_cast<double>(n);
}

}  // namespace azpp
