#pragma once

#include <string>
#include <vector>

#include "qlab/cmpp.hpp"
#include "qlab/series.hpp"

namespace qlab {

// theta(q^a; q^m)^power
struct ThetaFactor {
    int a;
    int m;
    int power = 1;
};

// (q^c; q^m)_inf^power
struct PochFactor {
    int c;
    int m;
    int power = 1;
};

struct ProductSpec {
    std::vector<ThetaFactor> thetas;
    std::vector<PochFactor> pochs;
};

enum class SpecKind { nonstandard, principal };

// theta(q^a; q^m) = (q^a, q^{m-a}; q^m)_inf for 0 < a < m, zero for a = 0 mod m,
// otherwise reduced through theta(x; p) = -x theta(xp; p). Valid to order N.
QSeries theta_q(int a, int m, int N);

QSeries quotient_product(const ProductSpec& spec, int N);

// lambda_i = k_i + ... + k_n for i = 1..n (index 0 unused).
std::vector<int> weight_lambdas(const std::vector<int>& weight);

// Closed-form character products. C has a single (principal) form and
// requires n >= 1; A and D require n >= 1.
ProductSpec char_product_spec(Family f, SpecKind kind, int n, const std::vector<int>& weight);
QSeries char_product(Family f, SpecKind kind, int n, const std::vector<int>& weight, int N);

// (q^{a+1}, q^{2k-a+2}, q^{2k+3}; q^{2k+3})_inf / (q;q)_inf
ProductSpec gordon_spec(int k, int a);
// level-one A: (q^{2a+1}, q^{2n-2a+2}, q^{2n+3}; q^{2n+3})_inf / (q;q)_inf
ProductSpec jms_spec(int n, int a);
// level-one C: (q^{2a+2}, q^{2n-2a+2}, q^{2n+4}; q^{2n+4})_inf / (q;q)_inf
ProductSpec c_level1_spec(int n, int a);
// level-one D: (q^{2a+1}, q^{2n-2a+1}, q^{2n+2}; q^{2n+2})_inf / (q;q)_inf
ProductSpec dk1_spec(int n, int a);
// C at rank 0: (q^{k+1}; q^{2k+2})_inf / (q; q^2)_inf
ProductSpec c_rank0_spec(int k);
// D at rank 1: (q^{2k+2}; q^{2k+2})_inf / (q^2; q^2)_inf
ProductSpec d_rank1_spec(int k);
// C at rank 1: (q^{k0+1}, q^{k1+1}, q^{k+2}; q^{k+2})_inf / ((q;q^2)_inf (q;q)_inf)
ProductSpec c_rank1_spec(int k0, int k1);

// Andrews-Gordon-type products attached to the interwoven multisums.
enum class AGProduct { shun, k_lambda0, k_lambda1, omega };
ProductSpec ag_type_spec(AGProduct kind, int k);
// (q^{a+1}, q^{a+2}, q^{2k-a+2}, q^{2k-a+3}, q^{2k+4}, q^{2k+4}; q^{2k+4})_inf
//   / ((q^2;q^2)_inf (q;q)_inf)
ProductSpec ag_general_spec(int k, int a);

}  // namespace qlab
