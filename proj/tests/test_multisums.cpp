#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "qlab/cmpp.hpp"
#include "qlab/hall_littlewood.hpp"
#include "qlab/multisums.hpp"

using namespace qlab;

namespace {

using Bivariate = std::map<std::tuple<int, int, int>, mpz_class>;

// 1 / (q^m; q^m)_r as a truncated polynomial
oracle::Poly inv_finite(int r, int m, int N)
{
    oracle::Poly p = oracle::one(N);
    for (int j = 1; j <= r; ++j) p = oracle::over_one_minus(p, m * j);
    return p;
}

void add_shifted(Bivariate& out, int z, int e, const oracle::Poly& p, int N)
{
    for (int i = 0; i + e <= N; ++i)
        if (p[i] != 0) out[{z, 0, i + e}] += p[i];
}

// F^{(n)}_{a,delta} straight from its definition.
Bivariate f_oracle(int n, int a, int delta, int N)
{
    Bivariate out;
    std::vector<int> r(n);
    std::function<void(int, int)> rec = [&](int i, int bound) {
        if (i == n) {
            long long e = 0;
            for (int j = 0; j < n; ++j) e += static_cast<long long>(r[j]) * r[j] + (j >= a ? r[j] : 0);
            if (e > N) return;
            oracle::Poly p = oracle::one(N);
            for (int j = 0; j + 1 < n; ++j) p = oracle::mul(p, inv_finite(r[j] - r[j + 1], 1, N));
            p = oracle::mul(p, inv_finite(r[n - 1], 2 - delta, N));
            add_shifted(out, r[0], static_cast<int>(e), p, N);
            return;
        }
        for (int x = 0; x <= bound && x * x <= N; ++x) {
            r[i] = x;
            rec(i + 1, x);
        }
    };
    rec(0, N);
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// S_{k1,k2,l1,l2} over a fixed box; the box must exceed every index reaching q^N.
Bivariate s_oracle(int k1, int k2, int l1, int l2, int N, int box)
{
    Bivariate out;
    for (int m1 = 0; m1 <= box; ++m1)
        for (int m2 = 0; m2 <= box; ++m2)
            for (int n1 = 0; n1 <= box; ++n1)
                for (int n2 = 0; n2 <= box; ++n2) {
                    long M1 = m1 + m2, M2 = m2, N1 = n1 + n2, N2 = n2;
                    long e = (M1 + N2) * (M1 + N2) + (M2 + N1) * (M2 + N1) + N1 * N1 + N2 * N2 + long(k1) * m1 +
                             long(k2) * m2 + 2L * l1 * n1 + 2L * l2 * n2;
                    if (e > N) continue;
                    EXPECT_LT(std::max({m1, m2, n1, n2}), box) << "oracle box too small";
                    int M = N - static_cast<int>(e);
                    oracle::Poly p = oracle::mul(oracle::mul(inv_finite(m1, 1, M), inv_finite(m2, 1, M)),
                                                 oracle::mul(inv_finite(n1, 2, M), inv_finite(n2, 2, M)));
                    for (int i = 0; i <= M; ++i)
                        if (p[i] != 0) out[{static_cast<int>(M1 + M2), static_cast<int>(N1 + N2), static_cast<int>(e) + i}] += p[i];
                }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

oracle::Poly z1(const QSeries& s, int N) { return oracle::at_one(s, N); }

}  // namespace

TEST(Multisums, FSumMatchesDefinition)
{
    const int N = 20;
    for (int n = 1; n <= 3; ++n)
        for (int a = 0; a <= n; ++a)
            for (int d = 0; d <= 1; ++d) EXPECT_EQ(oracle::terms(f_sum(n, a, d, N)), f_oracle(n, a, d, N)) << n << a << d;
}

TEST(Multisums, FSumExamples)
{
    EXPECT_EQ(z1(f_sum(1, 1, 1, 6), 6), oracle::from_ints({1, 1, 1, 1, 2, 2, 3}));
    EXPECT_EQ(oracle::terms(f_sum(3, 1, 0, 0)), oracle::terms(QSeries::one(0)));
    EXPECT_FALSE(compare(f_sum(2, 0, 0, 20), gen_fun(Family::D, 2, Boundary{{1, 0, 0}}, 20), 20));
}

TEST(Multisums, AndrewsGordonSum)
{
    EXPECT_EQ(oracle::terms(ag_sum(0, 0, 10)), oracle::terms(QSeries::one(10)));
    const int N = 18;
    for (int k = 1; k <= 3; ++k)
        for (int a = 0; a <= k; ++a) {
            Bivariate expect;
            for (const auto& [key, c] : oracle::gordon_bivariate(k, a, N)) expect[{key.first, 0, key.second}] = c;
            EXPECT_EQ(oracle::terms(ag_sum(k, a, N)), expect) << k << " " << a;
        }
}

TEST(Multisums, ShunSum)
{
    EXPECT_EQ(oracle::terms(shun_sum(0, 8)), oracle::terms(QSeries::one(8)));
    EXPECT_EQ(z1(shun_sum(1, 4), 4), oracle::from_ints({1, 1, 1, 2, 2}));
    // z^1 coefficient is the lambda = (1) HL term q P_(2)(1, q, ...; q^2)
    const int N = 14;
    QSeries s = shun_sum(1, N);
    QSeries hl = hl_inf_spec(Partition{{2}}, 2, N).shifted(0, 0, 1);
    for (int q = 0; q <= N; ++q) EXPECT_EQ(s.coeff(1, 0, q), hl.coeff(0, 0, q)) << q;
    EXPECT_FALSE(compare(shun_sum(1, N), hl_even_sum(1, 2, 1, N), N));
}

TEST(Multisums, Shun2)
{
    for (auto v : {Shun2Variant::k_lambda0, Shun2Variant::k_lambda1, Shun2Variant::mixed})
        for (int k = 1; k <= 3; ++k) EXPECT_EQ(oracle::terms(shun2_sum(k, v, 0)), oracle::terms(QSeries::one(0)));
    EXPECT_EQ(z1(shun2_sum(1, Shun2Variant::k_lambda1, 20), 20), z1(gen_fun(Family::D, 2, Boundary{{0, 1, 0}}, 20), 20));
}

TEST(Multisums, SSeriesLowTerms)
{
    const int N = 12;
    for (int k1 = -1; k1 <= 2; ++k1) {
        QSeries s = s_series(k1, 0, 0, 0, N);
        EXPECT_EQ(s.coeff(0, 0, 0).str(), "1");
        for (int q = 0; q <= N; ++q) EXPECT_EQ(s.coeff(1, 0, q).str(), q >= 1 + k1 ? "1" : "0") << k1 << " " << q;
    }
}

TEST(Multisums, SSeriesMatchesDirectSum)
{
    const int N = 16;
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (int i = 0; i < 25; ++i) {
        int k1 = pick(rng), k2 = pick(rng), l1 = pick(rng), l2 = pick(rng);
        EXPECT_EQ(oracle::terms(s_series(k1, k2, l1, l2, N)), s_oracle(k1, k2, l1, l2, N, 8))
            << k1 << " " << k2 << " " << l1 << " " << l2;
    }
    EXPECT_EQ(oracle::terms(s_series(2, 4, -2, 0, 22)), s_oracle(2, 4, -2, 0, 22, 9));
}

TEST(Multisums, AtomicRelations)
{
    EXPECT_TRUE(atomic_residual(Atomic::R1, {0, 0, 0, 0}, 20).is_zero());
    EXPECT_TRUE(atomic_residual(Atomic::R3, {2, 3, 0, 1}, 20).is_zero());
    EXPECT_TRUE(atomic_residual(Atomic::toshow3, {0, 0, 0, 0}, 15).is_zero());
    for (auto t : {Atomic::toshow1, Atomic::toshow2, Atomic::toshow3, Atomic::toshow4}) EXPECT_TRUE(atomic_span_check(t));
    EXPECT_EQ(atomic_from_name(atomic_name(Atomic::R4)), Atomic::R4);
    EXPECT_THROW(atomic_from_name("R9"), std::invalid_argument);
}

TEST(Multisums, WzAtWEqualsZ)
{
    const int N = 16;
    EXPECT_FALSE(compare(substitute(wz_sum(WZVariant::A, 2, N), Subst::w_to_z()), gen_fun(Family::D, 2, Boundary{{2, 0, 0}}, N), N));
    EXPECT_FALSE(compare(substitute(wz_sum(WZVariant::D, 2, N), Subst::w_to_z()), gen_fun(Family::D, 2, Boundary{{1, 0, 1}}, N), N));
}

TEST(Multisums, GuessReductions)
{
    const int N = 16;
    for (int k = 1; k <= 3; ++k) {
        EXPECT_FALSE(compare(w_zero(wz_sum(WZVariant::guess_B, k, N)), ag_sum(k, k, N), N)) << k;
        EXPECT_FALSE(compare(w_zero(wz_sum(WZVariant::guess_Omega, k, N)), ag_sum(k, k - 1, N), N)) << k;
        Subst zw{0, 1, 0, 0, 1, 0, 2};
        EXPECT_FALSE(compare(z_zero(wz_sum(WZVariant::guess_B, k, N)), substitute(ag_sum(k, k, N / 2), zw), N)) << k;
    }
}

TEST(Multisums, Errors)
{
    EXPECT_THROW(f_sum(0, 0, 1, 5), std::invalid_argument);
    EXPECT_THROW(f_sum(2, 3, 1, 5), std::invalid_argument);
    EXPECT_THROW(ag_sum(2, 3, 5), std::invalid_argument);
    EXPECT_THROW(shun2_sum(0, Shun2Variant::mixed, 5), std::invalid_argument);
}
