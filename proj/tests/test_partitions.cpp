#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "qlab/partitions.hpp"
#include "qlab/series.hpp"

using namespace qlab;

TEST(Partitions, CountsUpToFour)
{
    EXPECT_EQ(partitions_list(4, kInfinite, kInfinite).size(), 12u);
    auto empty = partitions_list(0, 3, 3);
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_TRUE(empty[0].parts.empty());
}

TEST(Partitions, BoundedPartSize)
{
    std::vector<Partition> expect = {{{}},     {{1}},       {{2}},    {{1, 1}},      {{2, 1}},
                                     {{1, 1, 1}}, {{2, 2}}, {{2, 1, 1}}, {{1, 1, 1, 1}}};
    EXPECT_EQ(partitions_list(4, 2, kInfinite), expect);
}

TEST(Partitions, OrderAndUniquenessAgainstOracle)
{
    const int N = 14;
    std::set<std::vector<int>> oracle_set;
    oracle::partitions(N, 5, [&](const std::vector<int>& p) {
        if (p.size() <= 4) oracle_set.insert(p);
    });
    auto lib = partitions_list(N, 5, 4);
    std::set<std::vector<int>> lib_set;
    int prev_weight = 0;
    for (const auto& p : lib) {
        EXPECT_TRUE(p.valid());
        EXPECT_GE(p.weight(), prev_weight);
        prev_weight = p.weight();
        lib_set.insert(p.parts);
    }
    EXPECT_EQ(lib.size(), lib_set.size());
    EXPECT_EQ(lib_set, oracle_set);
}

TEST(Partitions, Stats)
{
    Partition p{{5, 3, 3, 2, 2, 2, 1}};
    auto st = partition_stats(p);
    EXPECT_EQ(st.frequencies.at(1), 1);
    EXPECT_EQ(st.frequencies.at(5), 1);
    EXPECT_EQ(st.frequencies.at(2), 3);
    EXPECT_EQ(st.frequencies.at(3), 2);
    EXPECT_EQ(st.frequencies.count(4), 0u);
    EXPECT_EQ(frequency(p, 4), 0);
    EXPECT_EQ(st.weight, 18);
    EXPECT_EQ(st.length, 7);
    EXPECT_EQ(conjugate(Partition{{3, 1}}), (Partition{{2, 1, 1}}));
    EXPECT_EQ(n_stat(Partition{{2, 2}}), 2);
}

TEST(Partitions, ConjugateInvolutionAndNStat)
{
    for (const auto& p : partitions_list(12, kInfinite, kInfinite)) {
        Partition c = conjugate(p);
        EXPECT_EQ(conjugate(c), p);
        EXPECT_EQ(c.weight(), p.weight());
        // n(lambda) = sum over columns of C(lambda'_j, 2)
        int ns = 0;
        for (int x : c.parts) ns += x * (x - 1) / 2;
        EXPECT_EQ(n_stat(p), ns);
    }
}

TEST(Partitions, FromFrequenciesRoundTrip)
{
    for (const auto& p : partitions_list(10, kInfinite, kInfinite)) {
        std::vector<int> f(p.largest() + 1, 0);
        for (int i = 1; i <= p.largest(); ++i) f[i] = frequency(p, i);
        EXPECT_EQ(from_frequencies(f), p);
    }
}
