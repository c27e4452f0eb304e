#pragma once

#include <optional>
#include <vector>

namespace azpp {

// Directed weighted ties; weights[i][j] is the influence of j on i. The
// diagonal is fixed at zero and rows are kept normalized to sum 1 (n > 1).
class TieMatrix {
public:
    explicit TieMatrix(int n);

    int size() const { return n_; }
    double weight(int i, int j) const { return w_[static_cast<size_t>(i) * n_ + j]; }
    void set_weight(int i, int j, double v) { w_[static_cast<size_t>(i) * n_ + j] = v; }
    double row_sum(int i) const;

private:
    int n_;
    std::vector<double> w_;
};

// C_i = sum over j != i of w_ij * solo_j, where solo_j = A_j + P_j from the
// previous tick's committed state.
double contagion_input(int i, const TieMatrix& ties, const std::vector<double>& solo);

// Raw affective-homophily increment for one directed tie.
inline double homophily_increment(double alpha_hom, double affect_i, double affect_j) {
    double d = affect_i - affect_j;
    if (d < 0) d = -d;
    return alpha_hom * (1.0 - d);
}

// w_ij += alpha*(1 - |A_i - A_j|) for all i != j, then each row is
// renormalized to sum 1 so dissimilar ties weaken relative to similar ones.
void homophily_update(TieMatrix& ties, const std::vector<double>& affects, double alpha_hom);

// Mean off-diagonal weight; absent when n < 2.
std::optional<double> average_tie_strength(const TieMatrix& ties);

// Mean over i of the population standard deviation of row i's off-diagonal
// entries; absent when n < 2. Row normalization pins the mean tie strength,
// so this is the companion observable that moves.
std::optional<double> tie_strength_dispersion(const TieMatrix& ties);

}  // namespace azpp
