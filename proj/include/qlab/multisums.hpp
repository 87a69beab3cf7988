#pragma once

#include <array>
#include <string>
#include <vector>

#include "qlab/series.hpp"

namespace qlab {

// F^{(n)}_{a,delta}(z,q): sum over r_1 >= ... >= r_n >= 0 of
// z^{r_1} q^{r_1^2+...+r_n^2+r_{a+1}+...+r_n} / ((q)_{r_1-r_2} ... (q^{2-delta};q^{2-delta})_{r_n}).
QSeries f_sum(int n, int a, int delta, int N);

// Andrews-Gordon k-fold sum with z^{r_1+...+r_k}, 0 <= a <= k.
QSeries ag_sum(int k, int a, int N);

// Sums over r_1 >= ... >= r_k >= 0 and 0 <= s_1 <= ... <= s_k of
//   weight * prod_i z^{r_i} w^{s_i} q^{(r_i+s_i)^2+s_i^2+alpha_i r_i+beta_i s_i}
//          / ((q;q)_{r_i-r_{i+1}} (q^2;q^2)_{s_i-s_{i-1}}),
// r_{k+1} = s_0 = 0. The result is in (z, w, q).
enum class InterwovenWeight {
    none,
    omega,  // sum_{i<k} q^{r_i+2s_i}(1-q^{2s_{i+1}-2s_i}) + q^{r_k+2s_k}
    tail,   // 1 + w q^{2+sum_i(r_i+2s_i)}
};

struct InterwovenSpec {
    int k = 0;
    std::vector<int> alpha;  // per i, size k; empty means zeros
    std::vector<int> beta;
    InterwovenWeight weight = InterwovenWeight::none;
};

QSeries interwoven_sum(const InterwovenSpec& spec, int N);

// Eq. with z^{r_i+s_i} q^{(r_i+s_i)^2+s_i^2+s_i}; single variable z.
QSeries shun_sum(int k, int N);

enum class Shun2Variant { k_lambda0, k_lambda1, mixed };
QSeries shun2_sum(int k, Shun2Variant v, int N);

// A-D: the four k = 2 series in (z, w, q); guess_B and guess_Omega take k >= 1.
enum class WZVariant { A, B, C, D, guess_B, guess_Omega };
QSeries wz_sum(WZVariant v, int k, int N);

// Alternative Omega-type rewritings at k = 2 (single variable z).
enum class AltForm { lambda0_lambda1, lambda0_lambda2 };
QSeries alt_form_sum(AltForm f, int N);

// S_{k1,k2,l1,l2}(z, w); integer parameters of any sign.
QSeries s_series(int k1, int k2, int l1, int l2, int N);

enum class Atomic { R1, R2, R3, R4, toshow1, toshow2, toshow3, toshow4 };
Atomic atomic_from_name(const std::string& name);
std::string atomic_name(Atomic a);

// Residual of the relation in (z, w, q); toshow3 is multiplied by z to clear w/z.
QSeries atomic_residual(Atomic which, const std::array<int, 4>& params, int N);

// Exact check, at the level of S symbols, that a toshow equation equals its
// stated linear combination of atomic relations.
bool atomic_span_check(Atomic toshow);

}  // namespace qlab
