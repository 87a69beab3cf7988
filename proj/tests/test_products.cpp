#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qlab/products.hpp"

using namespace qlab;

namespace {

oracle::Poly u(const QSeries& s, int N) { return oracle::univariate(s, N); }

// Partitions with every part congruent (mod m) to a member of residues.
oracle::Poly parts_in_classes(int N, int m, std::vector<int> residues)
{
    return oracle::count_partitions(N, [&](const std::vector<int>& p) {
        for (int x : p)
            if (std::find(residues.begin(), residues.end(), x % m) == residues.end()) return false;
        return true;
    });
}

}  // namespace

TEST(Products, ThetaExamples)
{
    EXPECT_EQ(u(theta_q(1, 5, 6), 6), oracle::from_ints({1, -1, 0, 0, -1, 1, -1}));
    EXPECT_TRUE(theta_q(5, 5, 10).is_zero());
    EXPECT_TRUE(theta_q(0, 5, 10).is_zero());
    // theta(q^6; q^5) = -q^{-1} theta(q; q^5)
    QSeries t6 = theta_q(6, 5, 12);
    QSeries t1 = theta_q(1, 5, 13).shifted(0, 0, -1);
    t1.scale(Coeff(-1));
    EXPECT_FALSE(compare(t6, t1, 12));
}

TEST(Products, ThetaJacobiTripleProduct)
{
    const int N = 60;
    for (int m = 2; m <= 7; ++m)
        for (int a = 1; a < m; ++a) {
            QSeries lhs = theta_q(a, m, N) * poch(m, m, kInfinite, N);
            EXPECT_EQ(u(lhs, N), oracle::jtp(a, m, N)) << a << " " << m;
        }
}

TEST(Products, ThetaQuasiPeriodicity)
{
    const int N = 30;
    for (int m = 3; m <= 5; ++m)
        for (int a = -2 * m; a <= 3 * m; ++a) {
            if (a % m == 0) continue;
            // theta(x; p) = -x theta(xp; p)
            QSeries lhs = theta_q(a, m, N);
            QSeries rhs = theta_q(a + m, m, N + std::max(0, a) + 2 * m).shifted(0, 0, a);
            rhs.scale(Coeff(-1));
            EXPECT_FALSE(compare(lhs, rhs, N)) << a << " " << m;
        }
}

TEST(Products, RogersRamanujanProducts)
{
    const int N = 30;
    EXPECT_EQ(u(char_product(Family::A, SpecKind::nonstandard, 1, {1, 0}, 6), 6), oracle::from_ints({1, 0, 1, 1, 1, 1, 2}));
    EXPECT_EQ(u(char_product(Family::A, SpecKind::nonstandard, 1, {0, 1}, 6), 6), oracle::from_ints({1, 1, 1, 1, 2, 2, 3}));
    EXPECT_EQ(u(char_product(Family::A, SpecKind::nonstandard, 1, {1, 0}, N), N), parts_in_classes(N, 5, {2, 3}));
    EXPECT_EQ(u(char_product(Family::A, SpecKind::nonstandard, 1, {0, 1}, N), N), parts_in_classes(N, 5, {1, 4}));
    EXPECT_EQ(u(quotient_product(gordon_spec(1, 1), 6), 6), oracle::from_ints({1, 1, 1, 1, 2, 2, 3}));
    EXPECT_EQ(u(quotient_product(ProductSpec{}, 10), 10), oracle::one(10));
}

TEST(Products, GordonProductIsPartsAvoidingClasses)
{
    const int N = 30;
    for (int k = 1; k <= 3; ++k)
        for (int a = 0; a <= k; ++a) {
            int m = 2 * k + 3;
            std::vector<int> allowed;
            for (int r = 0; r < m; ++r)
                if (r != 0 && r != (a + 1) % m && r != (2 * k - a + 2) % m) allowed.push_back(r);
            EXPECT_EQ(u(quotient_product(gordon_spec(k, a), N), N), parts_in_classes(N, m, allowed)) << k << " " << a;
        }
}

TEST(Products, DRankOneClosedForm)
{
    const int N = 24;
    for (int k0 = 0; k0 <= 2; ++k0)
        for (int k1 = 0; k1 <= 2; ++k1) {
            if (k0 + k1 == 0) continue;
            int k = k0 + k1;
            auto expect = oracle::mul(oracle::poch_inf(2 * k + 2, 2 * k + 2, N), oracle::inv_poch_inf(2, 2, N));
            EXPECT_EQ(u(char_product(Family::D, SpecKind::nonstandard, 1, {k0, k1}, N), N), expect);
            EXPECT_EQ(u(quotient_product(d_rank1_spec(k), N), N), expect);
        }
}

TEST(Products, CPrincipalRoutesToSameFormula)
{
    const int N = 20;
    EXPECT_FALSE(compare(char_product(Family::C, SpecKind::principal, 2, {1, 0, 1}, N),
                         char_product(Family::C, SpecKind::nonstandard, 2, {1, 0, 1}, N), N));
}

TEST(Products, LevelOneSpecsAsFactorLists)
{
    const int N = 30;
    // jms(n, a) = (q^{2a+1}, q^{2n-2a+2}, q^{2n+3}; q^{2n+3}) / (q;q)
    for (int n = 1; n <= 3; ++n)
        for (int a = 0; a <= n; ++a) {
            int m = 2 * n + 3;
            auto expect = oracle::mul(oracle::mul(oracle::poch_inf(2 * a + 1, m, N), oracle::poch_inf(2 * n - 2 * a + 2, m, N)),
                                      oracle::mul(oracle::poch_inf(m, m, N), oracle::inv_poch_inf(1, 1, N)));
            EXPECT_EQ(u(quotient_product(jms_spec(n, a), N), N), expect);
        }
    auto c0 = oracle::mul(oracle::poch_inf(3, 6, N), oracle::inv_poch_inf(1, 2, N));
    EXPECT_EQ(u(quotient_product(c_rank0_spec(2), N), N), c0);
}

TEST(Products, RejectsInvalid)
{
    EXPECT_THROW(char_product(Family::A, SpecKind::nonstandard, 0, {1}, 5), std::invalid_argument);
    EXPECT_THROW(char_product(Family::A, SpecKind::nonstandard, 2, {1, 0}, 5), std::invalid_argument);
    EXPECT_THROW(gordon_spec(2, 3), std::invalid_argument);
    EXPECT_THROW(theta_q(1, 0, 5), std::invalid_argument);
}
