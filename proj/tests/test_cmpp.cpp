#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qlab/cmpp.hpp"

using namespace qlab;

namespace {

oracle::Poly z1(const QSeries& s, int N) { return oracle::at_one(s, N); }

FrequencyArray single_part(Family f, int n, int colour, int size)
{
    FrequencyArray a;
    a.family = f;
    a.n = n;
    a.freq[{colour, size}] = 1;
    return a;
}

}  // namespace

TEST(Cmpp, EmptyArrayPathSumIsLevel)
{
    FrequencyArray empty;
    empty.family = Family::A;
    empty.n = 3;
    EXPECT_EQ(max_path_sum(empty, Boundary{{1, 2, 0, 3}}), 6);
    EXPECT_EQ(max_path_sum(empty, Boundary{{0, 0, 0, 0}}), 0);
}

TEST(Cmpp, SinglePartPathSums)
{
    for (int k = 1; k <= 3; ++k) {
        Boundary b{{0, 0, k}};
        EXPECT_EQ(max_path_sum(single_part(Family::A, 2, 1, 1), b), k + 1);
        EXPECT_FALSE(admissible(single_part(Family::A, 2, 1, 1), b));
        EXPECT_EQ(max_path_sum(single_part(Family::A, 2, 2, 1), b), k);
        EXPECT_TRUE(admissible(single_part(Family::A, 2, 2, 1), b));
    }
}

TEST(Cmpp, RogersRamanujanCounts)
{
    EXPECT_EQ(z1(gen_fun(Family::A, 1, Boundary{{0, 1}}, 6), 6), oracle::from_ints({1, 1, 1, 1, 2, 2, 3}));
}

TEST(Cmpp, ZeroBoundaryIsOne)
{
    EXPECT_EQ(oracle::terms(gen_fun(Family::A, 2, Boundary{{0, 0, 0}}, 10)), oracle::terms(QSeries::one(10)));
    EXPECT_EQ(oracle::terms(gen_fun(Family::C, 1, Boundary{{0, 0}}, 10)), oracle::terms(QSeries::one(10)));
    EXPECT_EQ(oracle::terms(gen_fun(Family::D, 2, Boundary{{0, 0, 0}}, 10)), oracle::terms(QSeries::one(10)));
}

TEST(Cmpp, DRankOneDistinctEvenParts)
{
    EXPECT_EQ(z1(gen_fun(Family::D, 1, Boundary{{1, 0}}, 6), 6), oracle::from_ints({1, 0, 1, 0, 1, 0, 2}));
    // even parts, each used at most k times
    for (int k = 1; k <= 3; ++k) {
        auto expect = oracle::count_partitions(16, [&](const std::vector<int>& p) {
            for (auto [part, f] : oracle::freqs(p))
                if (part % 2 || f > k) return false;
            return true;
        });
        EXPECT_EQ(z1(gen_fun(Family::D, 1, Boundary{{k - 1, 1}}, 16), 16), expect) << k;
    }
}

TEST(Cmpp, CRankZeroOddParts)
{
    // odd parts with multiplicity <= k, graded by length
    for (int k = 1; k <= 3; ++k) {
        const int N = 15;
        std::map<std::tuple<int, int, int>, mpz_class> expect;
        oracle::partitions(N, N, [&](const std::vector<int>& p) {
            for (auto [part, f] : oracle::freqs(p))
                if (part % 2 == 0 || f > k) return;
            int w = 0;
            for (int x : p) w += x;
            expect[{static_cast<int>(p.size()), 0, w}] += 1;
        });
        EXPECT_EQ(oracle::terms(gen_fun(Family::C, 0, Boundary{{k}}, N)), expect) << k;
    }
}

TEST(Cmpp, ARankOneIsGordonBivariate)
{
    const int N = 18;
    for (int k = 0; k <= 3; ++k)
        for (int a = 0; a <= k; ++a) {
            std::map<std::tuple<int, int, int>, mpz_class> expect;
            for (const auto& [key, c] : oracle::gordon_bivariate(k, a, N)) expect[{key.first, 0, key.second}] = c;
            EXPECT_EQ(oracle::terms(gen_fun(Family::A, 1, Boundary{{k - a, a}}, N)), expect) << k << " " << a;
            EXPECT_EQ(oracle::terms(gordon_frequency_series(k, a, N)), expect);
        }
}

TEST(Cmpp, TransferMatchesReferenceEnumerator)
{
    struct Case {
        Family f;
        int n;
        std::vector<int> k;
        int N;
    };
    std::vector<Case> cases = {
        {Family::A, 2, {1, 0, 1}, 12}, {Family::A, 2, {0, 2, 0}, 10}, {Family::A, 3, {1, 0, 0, 0}, 10},
        {Family::C, 1, {1, 1}, 12},    {Family::C, 2, {0, 1, 1}, 10}, {Family::C, 0, {2}, 12},
        {Family::D, 2, {1, 0, 1}, 12}, {Family::D, 3, {0, 1, 0, 1}, 10}, {Family::D, 1, {2, 1}, 12},
    };
    for (const auto& c : cases) {
        auto fast = gen_fun(c.f, c.n, Boundary{c.k}, c.N);
        auto slow = gen_fun_reference(c.f, c.n, Boundary{c.k}, c.N);
        EXPECT_FALSE(compare(fast, slow, c.N)) << family_tag(c.f) << c.n;
    }
}

TEST(Cmpp, CacheReturnsTruncatedPrefix)
{
    auto big = gen_fun(Family::A, 2, Boundary{{1, 1, 0}}, 16);
    auto small = gen_fun(Family::A, 2, Boundary{{1, 1, 0}}, 9);
    EXPECT_EQ(small.order(), 9);
    EXPECT_FALSE(compare(big, small, 9));
}

TEST(Cmpp, DiagramAutomorphism)
{
    EXPECT_FALSE(compare(gen_fun(Family::C, 2, Boundary{{2, 1, 0}}, 12), gen_fun(Family::C, 2, Boundary{{0, 1, 2}}, 12), 12));
    EXPECT_FALSE(compare(gen_fun(Family::D, 3, Boundary{{1, 1, 0, 0}}, 12), gen_fun(Family::D, 3, Boundary{{0, 0, 1, 1}}, 12), 12));
}

TEST(Cmpp, InvalidInputs)
{
    EXPECT_THROW(gen_fun(Family::A, 0, Boundary{{1}}, 5), std::invalid_argument);
    EXPECT_THROW(gen_fun(Family::D, 0, Boundary{{1}}, 5), std::invalid_argument);
    EXPECT_THROW(gen_fun(Family::A, 2, Boundary{{1, 0}}, 5), std::invalid_argument);
    EXPECT_THROW(gen_fun(Family::A, 1, Boundary{{1, -1}}, 5), std::invalid_argument);
    EXPECT_THROW(family_from_tag('B'), std::invalid_argument);
}
