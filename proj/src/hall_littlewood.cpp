#include "qlab/hall_littlewood.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace qlab {

namespace {

long binom2(long x) { return x * (x - 1) / 2; }

// Series cache for one call: Gaussian binomials and 1/(q^m;q^m)_j at order N.
class FactorCache {
public:
    explicit FactorCache(int N) : N_(N) {}

    const QSeries& qbin_t(int n, int k, int m)
    {
        auto key = std::make_tuple(n, k, m);
        auto it = qbin_.find(key);
        if (it == qbin_.end()) it = qbin_.emplace(key, qbin(n, k, m).truncated(N_)).first;
        return it->second;
    }

    const QSeries& inv_tpoch(int j, int m)
    {
        auto key = std::make_pair(j, m);
        auto it = inv_.find(key);
        if (it == inv_.end()) it = inv_.emplace(key, inv_poch(m, m, j, N_)).first;
        return it->second;
    }

private:
    int N_;
    std::map<std::tuple<int, int, int>, QSeries> qbin_;
    std::map<std::pair<int, int>, QSeries> inv_;
};

std::vector<int> conj_of(const std::vector<int>& p, int width)
{
    std::vector<int> c(width + 2, 0);
    for (int x : p)
        for (int j = 1; j <= x && j <= width; ++j) ++c[j];
    return c;
}

// psi_{nu/mu}(t) = prod over j with theta'_j = 0, theta'_{j+1} = 1 of (1 - t^{m_j(mu)}).
std::vector<int> psi_exponents(const std::vector<int>& mu, const std::vector<int>& nu, int width, int m)
{
    auto mc = conj_of(mu, width + 1), nc = conj_of(nu, width + 1);
    std::vector<int> out;
    for (int j = 1; j <= width; ++j) {
        int th_j = nc[j] - mc[j], th_j1 = nc[j + 1] - mc[j + 1];
        if (th_j == 0 && th_j1 == 1) out.push_back(m * (mc[j] - mc[j + 1]));
    }
    return out;
}

// alpha_i of the Bailey pair relative to q^s with t = q^m, shifted series at order N.
QSeries alpha_term(int i, int s, int m, int N)
{
    if (i == 0) return QSeries::one(N);
    long e = m * binom2(i) + static_cast<long>(i) * (i + s);
    if (e > N) return QSeries(N, 0);
    int M = N - static_cast<int>(e);
    QSeries a = qbin(i + s - 1, s, m).truncated(M);
    a.mul_one_minus(m * (2 * i + s));
    a.div_one_minus(m * i);
    if (i % 2 != 0) a.scale(Coeff(-1));
    return a.shifted(0, 0, static_cast<int>(e)).truncated(N);
}

}  // namespace

QSeries hl_principal_finite(const Partition& lambda, int kvars, int m, int N)
{
    if (m < 1) throw std::invalid_argument("hl: m >= 1");
    if (lambda.length() > kvars) return QSeries(N, 0);
    auto st = partition_stats(lambda);
    long e = static_cast<long>(m) * st.n_stat;
    if (e > N) return QSeries(N, 0);
    // (t;t)_k / prod (t;t)_{f_i} as a product of Gaussian binomials.
    QSeries r = QSeries::one();
    int rest = kvars;
    for (const auto& [part, f] : st.frequencies) {
        r *= qbin(rest, f, m).truncated(N);
        rest -= f;
    }
    return r.shifted(0, 0, static_cast<int>(e)).truncated(N);
}

QSeries hl_ls_2r1s(int r, int s, int kvars, int m, int N)
{
    if (r < 0 || s < 0 || m < 1) throw std::invalid_argument("hl_ls_2r1s: r, s >= 0 and m >= 1");
    QSeries total(N, 0);
    for (int i = 0; i <= r; ++i) {
        long e = m * binom2(i) + binom2(r - i) + binom2(r + s + i);
        if (e > N) continue;
        int M = N - static_cast<int>(e);
        QSeries term = qbin(kvars, r - i, 1).truncated(M) * qbin(kvars, r + s + i, 1).truncated(M);
        if (i == 0) {
            term *= qbin(s, s, m);
        } else {
            term *= qbin(i + s - 1, s, m).truncated(M);
            term.mul_one_minus(m * (2 * i + s));
            term.div_one_minus(m * i);
        }
        if (i % 2 != 0) term.scale(Coeff(-1));
        total += term.shifted(0, 0, static_cast<int>(e)).truncated(N);
    }
    return total;
}

QSeries hl_symmetrization(const Partition& lambda, int L, int m, int N)
{
    if (L < lambda.length() || L > 9) throw std::invalid_argument("hl_symmetrization: need l(lambda) <= L <= 9");
    if (m < 1) throw std::invalid_argument("hl: m >= 1");
    std::vector<int> a(L, 0);
    for (int i = 0; i < lambda.length(); ++i) a[i] = lambda.parts[i];
    std::sort(a.begin(), a.end());
    QSeries total(N, 0);
    do {
        // variable p carries x_p = q^p (0-based) and exponent a[p]
        long shift = 0;
        int sign = 1;
        bool zero = false;
        std::vector<int> mul, div;
        for (int p = 0; p < L; ++p) shift += static_cast<long>(a[p]) * p;
        for (int p = 0; p < L && !zero; ++p)
            for (int r = p + 1; r < L; ++r) {
                int d = r - p;
                if (a[p] > a[r]) {
                    // (x_p - t x_r)/(x_p - x_r) = (1 - q^{m+d})/(1 - q^d)
                    mul.push_back(m + d);
                    div.push_back(d);
                } else if (a[r] > a[p]) {
                    // (x_r - t x_p)/(x_r - x_p) = (q^m - q^d)/(1 - q^d)
                    if (m == d) { zero = true; break; }
                    if (m < d) { shift += m; mul.push_back(d - m); }
                    else { shift += d; sign = -sign; mul.push_back(m - d); }
                    div.push_back(d);
                }
            }
        if (zero || shift > N) continue;
        int M = N - static_cast<int>(shift);
        QSeries t = QSeries::one(M);
        for (int e : mul)
            if (e <= M) t.mul_one_minus(e);
        for (int e : div)
            if (e <= M) t.div_one_minus(e);
        if (sign < 0) t.scale(Coeff(-1));
        total += t.shifted(0, 0, static_cast<int>(shift)).truncated(N);
    } while (std::next_permutation(a.begin(), a.end()));
    return total;
}

QSeries hl_inf_spec(const Partition& lambda, int m, int N)
{
    if (m < 1) throw std::invalid_argument("hl: m >= 1");
    if (N < 0) return QSeries(N, 0);
    const int len = lambda.length();
    const int size = lambda.weight();
    const int width = lambda.largest();
    const std::vector<int>& lam = lambda.parts;
    if (len == 0) return QSeries::one(N);

    struct State {
        QSeries s;
        int mindeg;
    };
    std::map<std::vector<int>, State> active;
    active.emplace(std::vector<int>(len, 0), State{QSeries::one(N), 0});
    QSeries result(N, 0);

    for (int ell = 1; !active.empty(); ++ell) {
        // variable x_ell = q^{ell - 1}
        std::map<std::vector<int>, State> next;
        for (const auto& [mu, st] : active) {
            int wmu = 0;
            for (int x : mu) wmu += x;
            std::vector<int> nu(len);
            auto rec = [&](auto&& self, int i, int added) -> void {
                if (i == len) {
                    long deg = st.mindeg + static_cast<long>(ell - 1) * added;
                    int rest = size - wmu - added;
                    if (deg + static_cast<long>(ell) * rest > N) return;
                    QSeries t = st.s;
                    for (int e : psi_exponents(mu, nu, width, m))
                        if (e <= N) t.mul_one_minus(e);
                    if (added > 0) t = t.shifted(0, 0, (ell - 1) * added).truncated(N);
                    if (rest == 0) {
                        result += t;
                        return;
                    }
                    auto it = next.find(nu);
                    if (it == next.end()) next.emplace(nu, State{std::move(t), static_cast<int>(deg)});
                    else {
                        it->second.s += t;
                        it->second.mindeg = std::min(it->second.mindeg, static_cast<int>(deg));
                    }
                    return;
                }
                int hi = lam[i];
                if (i > 0) hi = std::min(hi, mu[i - 1]);
                for (int v = mu[i]; v <= hi; ++v) {
                    nu[i] = v;
                    self(self, i + 1, added + v - mu[i]);
                }
            };
            rec(rec, 0, 0);
        }
        active = std::move(next);
    }
    return result;
}

QSeries hl_even_sum(int k, int m, int shift, int N)
{
    if (k < 0 || m < 1 || shift < 0) throw std::invalid_argument("hl_even_sum: k >= 0, m >= 1, shift >= 0");
    QSeries total(N, 0);
    // lowest term of P_mu(1, q, ...; t) is q^{n(mu)}, and n(2 lambda) = 2 n(lambda)
    std::vector<int> cols(k, 0);  // conjugate of lambda, weakly decreasing
    auto rec = [&](auto&& self, int j, int cap, long size, long nstat) -> void {
        if (j == k) {
            if (k == 0) {
                total += QSeries::one(N);
                return;
            }
            std::vector<int> parts;
            for (int i = 1; i <= cols[0]; ++i) {
                int row = 0;
                while (row < k && cols[row] >= i) ++row;
                parts.push_back(2 * row);
            }
            long e = shift * size;
            int M = N - static_cast<int>(e);
            QSeries t = hl_inf_spec(Partition{parts}, m, M);
            total += t.shifted(static_cast<int>(size), 0, static_cast<int>(e)).truncated(N);
            return;
        }
        for (int len = 0; len <= cap; ++len) {
            long s2 = size + len;
            long n2 = nstat + binom2(len);
            if (shift * s2 + 2 * n2 > N) break;
            cols[j] = len;
            self(self, j + 1, len, s2, n2);
        }
        cols[j] = 0;
    };
    rec(rec, 0, N + 1, 0, 0);
    return total;
}

QSeries prop_gow_sum(int r, int n, int delta, int N)
{
    if (r < 0 || n < 0 || (delta != 0 && delta != 1)) throw std::invalid_argument("prop_gow_sum: r, n >= 0, delta in {0,1}");
    FactorCache cache(N);
    QSeries total(N, 0);
    std::vector<int> rs(n + 1);
    rs[0] = r;
    auto rec = [&](auto&& self, int j, long e) -> void {
        if (e > N) return;
        if (j > n) {
            int M = N - static_cast<int>(e);
            QSeries t = QSeries::one(M);
            for (int i = 1; i <= n; ++i) t *= cache.inv_tpoch(rs[i - 1] - rs[i], 1).truncated(M);
            t *= cache.inv_tpoch(rs[n], 2 - delta).truncated(M);
            total += t.shifted(0, 0, static_cast<int>(e)).truncated(N);
            return;
        }
        for (int v = 0; v <= rs[j - 1]; ++v) {
            rs[j] = v;
            self(self, j + 1, e + static_cast<long>(v) * v + v);
        }
    };
    rec(rec, 1, static_cast<long>(r) * r - r);
    return total;
}

namespace {

// Sum over chains 0 = mu^(n) <= ... <= mu^(0), mu^(0) = (r_1,r_1,...,r_k,r_k), of
// q^{extra} HL_{k,n;mu}(z q^{c-1}, q). extra_kind: 0 none, 1 variant v1, 2 variant v2.
QSeries chain_sum(int k, int n, int c, int extra_kind, int N)
{
    if (k < 0 || n < 1) throw std::invalid_argument("chain sum: k >= 0, n >= 1");
    const int t = n;  // t = q^n
    const int W = 2 * k;
    FactorCache cache(N);
    QSeries total(N, 0);
    std::vector<std::vector<int>> mu(n + 1, std::vector<int>(W + 1, 0));
    std::vector<int> rs(k + 2, 0);

    struct Factor {
        int kind;  // 0 qbin, 1 inverse poch
        int a, b;
    };
    std::vector<Factor> factors;

    auto leaf = [&](long e, int zpow) {
        if (e > N) return;
        int M = N - static_cast<int>(e);
        QSeries s = QSeries::one(M);
        for (const auto& f : factors) {
            if (f.kind == 0) {
                if (f.b == 0 || f.b == f.a) continue;
                s *= cache.qbin_t(f.a, f.b, t).truncated(M);
            } else {
                if (f.a == 0) continue;
                s *= cache.inv_tpoch(f.a, t).truncated(M);
            }
        }
        total += s.shifted(zpow, 0, static_cast<int>(e)).truncated(N);
    };

    // level a >= 1, position i (1-based) within mu^(a)
    auto level = [&](auto&& self, int a, int i, long e, int zpow) -> void {
        if (e > N) return;
        if (a == n) {
            // mu^(n) = 0: remaining factors t^{C(mu^(n-1)_i, 2)}
            long add = 0;
            for (int j = 1; j <= W; ++j) add += t * binom2(mu[n - 1][j]);
            leaf(e + add, zpow);
            return;
        }
        if (i > W) {
            self(self, a + 1, 1, e, zpow);
            return;
        }
        const auto& up = mu[a - 1];
        int hi = up[i];
        if (i > 1) hi = std::min(hi, mu[a][i - 1]);
        for (int v = 0; v <= hi; ++v) {
            mu[a][i] = v;
            long ee = e + v + t * binom2(up[i] - v);
            // factor for position i - 1 needs mu^(a)_i
            if (i > 1) {
                int p = i - 1;
                factors.push_back({0, up[p] - v, up[p] - mu[a][p]});
            }
            if (extra_kind != 0 && a == 1 && i == 1) {
                if (extra_kind == 1) ee += static_cast<long>(n) * (up[1] - v);
                else {
                    long s0 = 0;
                    for (int j = 1; j <= W; ++j) s0 += up[j];
                    ee += s0 - 2L * v;
                }
            }
            if (i == W) {
                factors.push_back({0, up[W], up[W] - v});
                self(self, a, i + 1, ee, zpow);
                factors.pop_back();
            } else {
                self(self, a, i + 1, ee, zpow);
            }
            if (i > 1) factors.pop_back();
        }
        for (int j = i; j <= W; ++j) mu[a][j] = 0;
    };

    // Bound on r_1: c q^{r_1}-growth for c >= 1, and r_1 <= N for the weighted variants.
    auto top = [&](auto&& self, int j, int zpow) -> void {
        if (static_cast<long>(c) * zpow > N) return;
        if (j > k) {
            for (int i = 1; i <= k; ++i) {
                mu[0][2 * i - 1] = rs[i];
                mu[0][2 * i] = rs[i];
            }
            size_t base = factors.size();
            for (int i = 1; i <= k; ++i) factors.push_back({1, rs[i] - rs[i + 1], 0});
            long e = static_cast<long>(c) * zpow;
            if (n == 1) {
                long add = 0;
                for (int i = 1; i <= W; ++i) add += t * binom2(mu[0][i]);
                if (extra_kind == 1) add += static_cast<long>(n) * mu[0][1];
                else if (extra_kind == 2) add += 2L * zpow;
                leaf(e + add, zpow);
            } else {
                level(level, 1, 1, e, zpow);
            }
            factors.resize(base);
            return;
        }
        int hi = (j == 1) ? N : rs[j - 1];
        for (int v = 0; v <= hi; ++v) {
            rs[j] = v;
            rs[j + 1] = 0;
            if (static_cast<long>(c) * (zpow + v) > N) break;
            self(self, j + 1, zpow + v);
        }
        rs[j] = 0;
    };
    if (k == 0) return QSeries::one(N);
    top(top, 1, 0);
    return total;
}

}  // namespace

QSeries hl_chain_sum(int k, int n, int N)
{
    return chain_sum(k, n, 1, 0, N);
}

QSeries hl_weighted_chain(HLVariant variant, int param, int N)
{
    if (param < 1) throw std::invalid_argument("hl_weighted_chain: parameter >= 1");
    if (variant == HLVariant::v1) return chain_sum(1, param, 0, 1, N);
    return chain_sum(param, 2, 0, 2, N);
}

std::vector<BaileyRow> bailey_beta_check(int s, int m, int r_max, int N)
{
    if (r_max < 0 || r_max > 6) throw std::invalid_argument("bailey_beta_check: 0 <= r_max <= 6");
    if (s < 0 || m < 1) throw std::invalid_argument("bailey_beta_check: s >= 0, m >= 1");
    std::vector<BaileyRow> rows;
    for (int r = 0; r <= r_max; ++r) {
        QSeries lhs(N, 0);
        for (int i = 0; i <= r; ++i)
            lhs += alpha_term(i, s, m, N) * inv_poch(1, 1, r - i, N) * inv_poch(s + 1, 1, r + i, N);
        long shift = binom2(r) + binom2(r + s);
        std::vector<int> parts(r, 2);
        parts.insert(parts.end(), s, 1);
        QSeries p = hl_inf_spec(Partition{parts}, m, N + static_cast<int>(shift));
        QSeries rhs = (poch(1, 1, s, N + static_cast<int>(shift)) * p).shifted(0, 0, -static_cast<int>(shift));
        auto mm = compare(lhs, rhs, N);
        rows.push_back({r, !mm.has_value(), mm});
    }
    return rows;
}

}  // namespace qlab
