#pragma once

#include <optional>
#include <vector>

#include "qlab/partitions.hpp"
#include "qlab/series.hpp"

namespace qlab {

// All operations specialise t = q^m.

// t^{n(lambda)} (t;t)_kvars / prod_{i>=0} (t;t)_{f_i}, f_0 = kvars - l(lambda);
// zero when l(lambda) > kvars.
QSeries hl_principal_finite(const Partition& lambda, int kvars, int m, int N);

// Lassalle-Schlosser single sum for P_{(2^r,1^s)}(1, q, ..., q^{kvars-1}; t).
QSeries hl_ls_2r1s(int r, int s, int kvars, int m, int N);

// Coset symmetrisation at x_i = q^{i-1}; L <= 9.
QSeries hl_symmetrization(const Partition& lambda, int L, int m, int N);

// P_lambda(1, q, q^2, ...; t) through the horizontal-strip branching rule.
QSeries hl_inf_spec(const Partition& lambda, int m, int N);

// sum over lambda with lambda_1 <= k of (z q^shift)^{|lambda|} P_{2 lambda}(1, q, q^2, ...; q^m).
QSeries hl_even_sum(int k, int m, int shift, int N);

// sum over r >= r_1 >= ... >= r_n >= 0 of
// q^{r^2-r+sum r_j^2+r_j} / ((q)_{r-r_1} ... (q)_{r_{n-1}-r_n} (q^{2-delta};q^{2-delta})_{r_n}).
QSeries prop_gow_sum(int r, int n, int delta, int N);

// HL_{k,n}(z, q): sum over chains 0 = mu^(n) <= ... <= mu^(0) with (mu^(0))' even
// and l(mu^(0)) <= 2k.
QSeries hl_chain_sum(int k, int n, int N);

// v1: sum over S_{1,n} of q^{n mu0_1 - n mu1_1} HL_{1,n;mu}(z/q, q).
// v2: sum over S_{k,2} of q^{|mu0| - 2 mu1_1} HL_{k,2;mu}(z/q, q).
enum class HLVariant { v1, v2 };
QSeries hl_weighted_chain(HLVariant variant, int param, int N);

struct BaileyRow {
    int r;
    bool equal;
    std::optional<Mismatch> mismatch;
};

// Compares beta_r from the defining Bailey sum over alpha (a = q^s) against
// q^{-C(r,2)-C(r+s,2)} (q;q)_s P_{(2^r,1^s)}(1,q,...;q^m) for r <= r_max <= 6.
std::vector<BaileyRow> bailey_beta_check(int s, int m, int r_max, int N);

}  // namespace qlab
