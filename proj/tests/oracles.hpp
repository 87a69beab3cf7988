#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's series arithmetic, so agreement is a genuine cross-check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "qlab/series.hpp"

namespace oracle {

using Poly = std::vector<mpz_class>;  // coefficients of q^0 .. q^N

inline Poly zeros(int N) { return Poly(N + 1, 0); }

inline Poly one(int N)
{
    Poly p = zeros(N);
    p[0] = 1;
    return p;
}

inline Poly mul(const Poly& a, const Poly& b)
{
    int N = static_cast<int>(a.size()) - 1;
    Poly c = zeros(N);
    for (int i = 0; i <= N; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// p * (1 - q^e)
inline Poly times_one_minus(Poly p, int e)
{
    for (int i = static_cast<int>(p.size()) - 1; i >= e; --i) p[i] -= p[i - e];
    return p;
}

// p / (1 - q^e), e >= 1
inline Poly over_one_minus(Poly p, int e)
{
    for (std::size_t i = e; i < p.size(); ++i) p[i] += p[i - e];
    return p;
}

// (q^c; q^m)_inf truncated at N, c >= 1.
inline Poly poch_inf(int c, int m, int N)
{
    Poly p = one(N);
    for (int e = c; e <= N; e += m) p = times_one_minus(p, e);
    return p;
}

inline Poly inv_poch_inf(int c, int m, int N)
{
    Poly p = one(N);
    for (int e = c; e <= N; e += m) p = over_one_minus(p, e);
    return p;
}

// (q^m;q^m)_inf theta(q^a;q^m) by the Jacobi triple product
// sum_n (-1)^n q^{m n(n-1)/2 + a n}; all exponents must be >= 0 within range.
inline Poly jtp(int a, int m, int N)
{
    Poly p = zeros(N);
    for (int n = -200; n <= 200; ++n) {
        long long e = static_cast<long long>(m) * n * (n - 1) / 2 + static_cast<long long>(a) * n;
        if (e < 0 || e > N) continue;
        p[e] += (n % 2 == 0) ? 1 : -1;
    }
    return p;
}

// Independent partition generator: all partitions of total <= N with parts <= part_max.
inline void partitions(int N, int part_max, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        f(cur);
        for (int p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(N, part_max);
}

inline std::map<int, int> freqs(const std::vector<int>& parts)
{
    std::map<int, int> f;
    for (int p : parts) ++f[p];
    return f;
}

// Count by weight of partitions satisfying pred.
inline Poly count_partitions(int N, const std::function<bool(const std::vector<int>&)>& pred)
{
    Poly p = zeros(N);
    partitions(N, N, [&](const std::vector<int>& parts) {
        int w = 0;
        for (int x : parts) w += x;
        if (pred(parts)) p[w] += 1;
    });
    return p;
}

// Gordon's condition f_1 <= a, f_i + f_{i+1} <= k, graded by (length, weight).
inline std::map<std::pair<int, int>, mpz_class> gordon_bivariate(int k, int a, int N)
{
    std::map<std::pair<int, int>, mpz_class> out;
    partitions(N, N, [&](const std::vector<int>& parts) {
        auto f = freqs(parts);
        auto F = [&](int i) { return f.count(i) ? f.at(i) : 0; };
        if (F(1) > a) return;
        for (int i = 1; i <= N; ++i)
            if (F(i) + F(i + 1) > k) return;
        int w = 0;
        for (int x : parts) w += x;
        out[{static_cast<int>(parts.size()), w}] += 1;
    });
    return out;
}

inline Poly univariate(const qlab::QSeries& s, int N)
{
    Poly p = zeros(N);
    s.for_each_term([&](int z, int w, int q, const qlab::Coeff& c) {
        if (z == 0 && w == 0 && q >= 0 && q <= N) p[q] += c.to_mpz();
    });
    return p;
}

// z = 1 (and w = 1) specialisation, computed from the raw terms.
inline Poly at_one(const qlab::QSeries& s, int N)
{
    Poly p = zeros(N);
    s.for_each_term([&](int, int, int q, const qlab::Coeff& c) {
        if (q >= 0 && q <= N) p[q] += c.to_mpz();
    });
    return p;
}

inline std::map<std::tuple<int, int, int>, mpz_class> terms(const qlab::QSeries& s)
{
    std::map<std::tuple<int, int, int>, mpz_class> t;
    s.for_each_term([&](int z, int w, int q, const qlab::Coeff& c) { t[{z, w, q}] = c.to_mpz(); });
    return t;
}

inline Poly from_ints(const std::vector<long long>& v)
{
    Poly p;
    for (long long x : v) p.push_back(mpz_class(static_cast<long>(x)));
    return p;
}

inline std::string show(const Poly& p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
    return s + "]";
}

}  // namespace oracle
