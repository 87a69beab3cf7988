#pragma once

#include <vector>

#include "qlab/cmpp.hpp"
#include "qlab/series.hpp"

namespace qlab {

enum class RootType { B, D };

// x_i = q^{exps_i} and base p = q^base, base >= 1.
// B: (p;p)^n prod_i theta(x_i;p) prod_{i<j} theta(x_i/x_j, x_i x_j; p), zero for sigma = -1.
// D: (p;p)^n prod_{i<j} theta(x_i/x_j, x_i x_j; p), zero for sigma = -1 or tau = -1; n >= 2.
QSeries pi_product(RootType type, const std::vector<int>& exps, int base, int sigma, int tau, int N);

// Determinant form of the lattice sum over r in Z^n; equals 2 pi_product (B)
// or 4 pi_product (D). The box of r is derived from the quadratic form so that
// no omitted r reaches q^N.
QSeries macdonald_sum(RootType type, const std::vector<int>& exps, int base, int sigma, int tau, int N);

// Doubled coordinates: k = two_k / 2, lambda_i = two_lambda_i / 2.
struct HalfWeight {
    int two_k = 0;
    std::vector<int> two_lambda;

    bool k_integral() const { return two_k % 2 == 0; }
    bool lambda_integral() const;
};

// Well-formedness for the given family and rank; throws std::invalid_argument.
void check_half_weight(Family f, int n, const HalfWeight& hw);
// CMPP coordinates (k_0, ..., k_n) of an integral weight.
std::vector<int> half_weight_coordinates(const HalfWeight& hw);

// phi_n(chi_Lambda) from the specialised determinant sums: A for n >= 1, D for n >= 2.
QSeries specialized_character_sum(Family f, int n, const HalfWeight& hw, int N);

}  // namespace qlab
