#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "qlab/macdonald.hpp"
#include "qlab/products.hpp"

using namespace qlab;

namespace {

using Laurent = std::map<long long, mpz_class>;

int perm_sign(const std::vector<int>& p)
{
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

// Determinant lattice sum over the box |r_i| <= R by direct expansion; asserts
// that no monomial from the outer shell reaches q^N.
Laurent lattice_oracle(RootType type, const std::vector<int>& a, int b, int sigma, int tau, int N, int R)
{
    const int n = static_cast<int>(a.size());
    const long long g = type == RootType::B ? 2 * n - 1 : 2 * (n - 1);
    Laurent out;
    std::vector<int> r(n, -R);
    std::vector<int> perm(n);
    for (;;) {
        bool shell = false;
        long long pre = 0;
        int pre_sign = 1;
        for (int i = 0; i < n; ++i) {
            shell = shell || std::abs(r[i]) == R;
            long long c2 = static_cast<long long>(r[i]) * (r[i] - 1) / 2;
            pre += static_cast<long long>(b) * (g * c2 + static_cast<long long>(i) * r[i]) + static_cast<long long>(a[i]) * (n - 1 - i);
            int s = type == RootType::B ? -sigma : sigma;
            if (s < 0 && (r[i] % 2 != 0)) pre_sign = -pre_sign;
        }
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int ps = perm_sign(perm) * pre_sign;
            // row i takes column perm[i]
            for (int mask = 0; mask < (1 << n); ++mask) {
                long long e = pre;
                int sgn = ps;
                for (int i = 0; i < n; ++i) {
                    int j = perm[i] + 1;
                    long long rj = r[perm[i]];
                    long long ex;
                    if (!(mask >> i & 1)) {
                        ex = g * rj + j - n;
                    } else if (type == RootType::B) {
                        ex = -g * rj + n - j + 1;
                        sgn = -sgn;
                    } else {
                        ex = -g * rj + n - j;
                        sgn *= tau;
                    }
                    e += static_cast<long long>(a[i]) * ex;
                }
                if (shell) EXPECT_GT(e, N) << "oracle box too small";
                if (e <= N) out[e] += sgn;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        int i = 0;
        while (i < n && r[i] == R) r[i++] = -R;
        if (i == n) break;
        ++r[i];
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Laurent laurent(const QSeries& s, int N)
{
    Laurent out;
    s.for_each_term([&](int, int, int q, const Coeff& c) {
        if (q <= N) out[q] += c.to_mpz();
    });
    return out;
}

// Returns c with a = c * b when c is a signed monomial +-q^e.
std::optional<std::pair<int, int>> monomial_ratio(const QSeries& a, const QSeries& b, int N)
{
    Laurent la = laurent(a, N), lb = laurent(b, N);
    if (la.empty() || lb.empty()) return std::nullopt;
    int e = static_cast<int>(la.begin()->first - lb.begin()->first);
    mpz_class r = la.begin()->second / lb.begin()->second;
    if (r != 1 && r != -1) return std::nullopt;
    QSeries c = b.shifted(0, 0, e);
    c.scale(Coeff(r.get_si()));
    if (compare(a.truncated(std::min(a.order(), c.order())), c, std::min({N, a.order(), c.order()}))) return std::nullopt;
    return std::make_pair(static_cast<int>(r.get_si()), e);
}

}  // namespace

TEST(Macdonald, BRankOneIsTripleProduct)
{
    const int N = 40;
    for (int base = 1; base <= 4; ++base)
        for (int a = 1; a <= 5; ++a) {
            // 2 sum_r (-1)^r q^{base r(r-1)/2 + a r}, negative powers included
            Laurent expect;
            for (int r = -60; r <= 60; ++r) {
                long long e = static_cast<long long>(base) * r * (r - 1) / 2 + static_cast<long long>(a) * r;
                if (e <= N) expect[e] += r % 2 == 0 ? 2 : -2;
            }
            for (auto it = expect.begin(); it != expect.end();) it = it->second == 0 ? expect.erase(it) : std::next(it);
            EXPECT_EQ(laurent(macdonald_sum(RootType::B, {a}, base, 1, 1, N), N), expect) << a << " " << base;
        }
}

TEST(Macdonald, LatticeSumMatchesBruteForce)
{
    struct Case {
        RootType t;
        std::vector<int> a;
        int base, sigma, tau;
    };
    std::vector<Case> cases = {
        {RootType::B, {3, 1}, 5, 1, 1},   {RootType::B, {4, 1}, 7, -1, 1}, {RootType::B, {-2, 4}, 9, 1, 1},
        {RootType::D, {3, 1}, 6, 1, 1},   {RootType::D, {5, 2}, 9, -1, 1}, {RootType::D, {4, 1}, 7, 1, -1},
        {RootType::B, {5, 3, 1}, 11, 1, 1}, {RootType::D, {5, 3, 1}, 10, 1, 1},
    };
    const int N = 30;
    for (const auto& c : cases) {
        int R = c.a.size() == 3 ? 4 : 6;
        EXPECT_EQ(laurent(macdonald_sum(c.t, c.a, c.base, c.sigma, c.tau, N), N),
                  lattice_oracle(c.t, c.a, c.base, c.sigma, c.tau, N, R));
    }
}

TEST(Macdonald, SumEqualsProduct)
{
    const int N = 40;
    for (auto a : std::vector<std::vector<int>>{{2}, {3, 1}, {5, 2}, {4, 3, 1}}) {
        int n = static_cast<int>(a.size());
        int base = 3 * a[0] + 2;
        QSeries two_pi = pi_product(RootType::B, a, base, 1, 1, N);
        two_pi.scale(Coeff(2));
        EXPECT_FALSE(compare(macdonald_sum(RootType::B, a, base, 1, 1, N), two_pi, N)) << n;
        if (n >= 2) {
            QSeries four_pi = pi_product(RootType::D, a, base, 1, 1, N);
            four_pi.scale(Coeff(4));
            EXPECT_FALSE(compare(macdonald_sum(RootType::D, a, base, 1, 1, N), four_pi, N)) << n;
        }
    }
}

TEST(Macdonald, VanishingCases)
{
    const int N = 30;
    EXPECT_TRUE(pi_product(RootType::B, {3, 1}, 5, -1, 1, N).is_zero());
    EXPECT_TRUE(pi_product(RootType::D, {3, 1}, 5, 1, -1, N).is_zero());
    EXPECT_TRUE(macdonald_sum(RootType::B, {3, 1}, 5, -1, 1, N).is_zero());
    EXPECT_TRUE(macdonald_sum(RootType::D, {3, 1}, 5, 1, -1, N).is_zero());
    EXPECT_TRUE(macdonald_sum(RootType::D, {3, 1}, 5, -1, -1, N).is_zero());
    EXPECT_FALSE(pi_product(RootType::B, {2}, 3, 1, 1, N).is_zero());
}

TEST(Macdonald, QuasiPeriodicity)
{
    const int N = 30;
    const int base = 7;
    for (auto t : {RootType::B, RootType::D}) {
        std::vector<int> a = {3, 1};
        std::vector<int> shifted = {3 + base, 1};
        QSeries s0 = macdonald_sum(t, a, base, 1, 1, N + 40), s1 = macdonald_sum(t, shifted, base, 1, 1, N + 40);
        QSeries p0 = pi_product(t, a, base, 1, 1, N + 40), p1 = pi_product(t, shifted, base, 1, 1, N + 40);
        auto rs = monomial_ratio(s1, s0, N), rp = monomial_ratio(p1, p0, N);
        ASSERT_TRUE(rs);
        ASSERT_TRUE(rp);
        EXPECT_EQ(*rs, *rp);
    }
}

TEST(Macdonald, SpecialisedCharacters)
{
    const int N = 30;
    EXPECT_FALSE(compare(specialized_character_sum(Family::A, 1, HalfWeight{2, {2}}, N),
                         char_product(Family::A, SpecKind::nonstandard, 1, {0, 1}, N), N));
    EXPECT_TRUE(specialized_character_sum(Family::A, 1, HalfWeight{1, {0}}, N).is_zero());
    EXPECT_TRUE(specialized_character_sum(Family::D, 2, HalfWeight{2, {1, 1}}, N).is_zero());
    EXPECT_TRUE(specialized_character_sum(Family::D, 2, HalfWeight{3, {2, 0}}, N).is_zero());
    for (int two_k = 0; two_k <= 4; two_k += 2)
        for (int l1 = 0; 2 * l1 <= two_k; ++l1)
            for (int l2 = 0; l2 <= l1; ++l2) {
                HalfWeight hw{two_k, {2 * l1, 2 * l2}};
                auto w = half_weight_coordinates(hw);
                EXPECT_FALSE(compare(specialized_character_sum(Family::A, 2, hw, N),
                                     char_product(Family::A, SpecKind::nonstandard, 2, w, N), N));
                EXPECT_FALSE(compare(specialized_character_sum(Family::D, 2, hw, N),
                                     char_product(Family::D, SpecKind::nonstandard, 2, w, N), N));
            }
}

TEST(Macdonald, HalfWeightValidation)
{
    EXPECT_THROW(check_half_weight(Family::A, 2, HalfWeight{2, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(check_half_weight(Family::D, 2, HalfWeight{2, {2, 1}}), std::invalid_argument);
    EXPECT_THROW(check_half_weight(Family::D, 2, HalfWeight{2, {0, 2}}), std::invalid_argument);
    EXPECT_THROW(half_weight_coordinates(HalfWeight{3, {2}}), std::invalid_argument);
    EXPECT_EQ(half_weight_coordinates(HalfWeight{4, {2, 0}}), (std::vector<int>{1, 1, 0}));
    EXPECT_THROW(macdonald_sum(RootType::D, {1}, 3, 1, 1, 10), std::invalid_argument);
}
