#include "qlab/macdonald.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qlab/products.hpp"

namespace qlab {

namespace {

long binom2(long x) { return x * (x - 1) / 2; }

struct Mono {
    long coeff;
    long exp;
};

// sum over r in Z^n of prod_i sign(i, r_i) q^{quad(i, r_i)} q^{shift} det(entry(i, j, r_dep)),
// where every entry is two monomials whose exponent has |slope| <= slope_bound in r_dep.
struct LatticeSum {
    int n = 0;
    long shift = 0;
    long slope_bound = 0;
    bool row_dependent = false;
    std::function<long(int, long)> quad;
    std::function<int(int, long)> sign;
    std::function<std::array<Mono, 2>(int, int, long)> entry;
};

long const_floor(const LatticeSum& L)
{
    long c = L.shift;
    for (int i = 0; i < L.n; ++i) {
        long lo = 0;
        bool first = true;
        for (int j = 0; j < L.n; ++j)
            for (const Mono& m : L.entry(i, j, 0)) {
                if (first || m.exp < lo) lo = m.exp;
                first = false;
            }
        c += lo;
    }
    return c;
}

// Lower bound of the exponent contributed by coordinate i at value r.
long coord_bound(const LatticeSum& L, int i, long r) { return L.quad(i, r) - L.slope_bound * std::labs(r); }

std::vector<long> box_radii(const LatticeSum& L, int N)
{
    const long scan = 4096;
    std::vector<long> mins(L.n);
    for (int i = 0; i < L.n; ++i) {
        long best = coord_bound(L, i, 0);
        for (long r = -scan; r <= scan; ++r) best = std::min(best, coord_bound(L, i, r));
        mins[i] = best;
    }
    long base = const_floor(L) + std::accumulate(mins.begin(), mins.end(), 0L);
    std::vector<long> R(L.n, 0);
    for (int i = 0; i < L.n; ++i) {
        long rest = base - mins[i];
        for (long t = 1; t <= scan; ++t)
            if (coord_bound(L, i, t) + rest <= N || coord_bound(L, i, -t) + rest <= N) R[i] = t;
        if (R[i] >= scan - 1) throw std::logic_error("lattice sum: quadratic form is not positive");
    }
    return R;
}

// Determinant of a matrix of two-term Laurent polynomials by permutation expansion.
void add_determinant(const LatticeSum& L, const std::vector<long>& r, long base_exp, int base_sign,
                     std::map<long, long long>& out)
{
    int n = L.n;
    std::vector<std::vector<std::array<Mono, 2>>> M(n, std::vector<std::array<Mono, 2>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = L.entry(i, j, L.row_dependent ? r[i] : r[j]);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inv;
        int psign = (inv % 2 == 0) ? base_sign : -base_sign;
        for (int mask = 0; mask < (1 << n); ++mask) {
            long c = psign;
            long e = base_exp;
            for (int i = 0; i < n; ++i) {
                const Mono& m = M[i][perm[i]][(mask >> i) & 1];
                c *= m.coeff;
                e += m.exp;
            }
            if (c != 0) out[e] += c;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// exponent -> coefficient for every exponent <= N
std::map<long, Coeff> lattice_sum(const LatticeSum& L, int N)
{
    auto R = box_radii(L, N);
    std::map<long, Coeff> acc;
    std::vector<long> r(L.n);
    long outer_min = static_cast<long>(N) + 1;
    auto visit = [&](bool outer) {
        long e = L.shift;
        int s = 1;
        for (int i = 0; i < L.n; ++i) {
            e += L.quad(i, r[i]);
            s *= L.sign(i, r[i]);
        }
        std::map<long, long long> term;
        add_determinant(L, r, e, s, term);
        for (const auto& [ex, c] : term) {
            if (c == 0) continue;
            if (outer) outer_min = std::min(outer_min, ex);
            else if (ex <= N) acc[ex] += Coeff(static_cast<long long>(c));
        }
    };
    // inner box, then the shell of radius R_i + 1 as a truncation guard
    auto walk = [&](auto&& self, int i, bool on_shell) -> void {
        if (i == L.n) {
            visit(on_shell);
            return;
        }
        for (long v = -R[i] - 1; v <= R[i] + 1; ++v) {
            bool edge = std::labs(v) == R[i] + 1;
            r[i] = v;
            self(self, i + 1, on_shell || edge);
        }
    };
    long shell_points = 1;
    for (long x : R) shell_points *= 2 * x + 3;
    if (shell_points <= 200000) {
        walk(walk, 0, false);
        if (outer_min <= N) throw std::logic_error("lattice sum: truncation box too small");
    } else {
        auto inner = [&](auto&& self, int i) -> void {
            if (i == L.n) {
                visit(false);
                return;
            }
            for (long v = -R[i]; v <= R[i]; ++v) {
                r[i] = v;
                self(self, i + 1);
            }
        };
        inner(inner, 0);
    }
    return acc;
}

QSeries to_series(const std::map<long, Coeff>& acc, int N)
{
    int floor = 0;
    for (const auto& [e, c] : acc)
        if (!c.is_zero()) {
            floor = std::min(floor, static_cast<int>(e));
            break;
        }
    QSeries s(N, floor);
    for (const auto& [e, c] : acc)
        if (!c.is_zero() && e <= N) s.add_term(0, 0, static_cast<int>(e), c);
    return s;
}

int checked_sign(int v, const char* what)
{
    if (v != 1 && v != -1) throw std::invalid_argument(std::string(what) + " must be +1 or -1");
    return v;
}

int parity_sign(int s, long r) { return (s < 0 && (r % 2 != 0)) ? -1 : 1; }

void check_type(RootType type, const std::vector<int>& exps, int base)
{
    int n = static_cast<int>(exps.size());
    if (n == 0) throw std::invalid_argument("macdonald: n must be >= 1");
    if (type == RootType::D && n < 2) throw std::invalid_argument("macdonald: type D needs n >= 2");
    if (base < 1) throw std::invalid_argument("macdonald: base must be >= 1");
}

std::map<long, Coeff> divide_exact(const std::map<long, Coeff>& acc, int d)
{
    std::map<long, Coeff> out;
    for (const auto& [e, c] : acc) {
        mpz_class v = c.to_mpz();
        if (v % d != 0) throw std::logic_error("lattice sum: coefficient not divisible");
        out[e] = Coeff(mpz_class(v / d));
    }
    return out;
}

}  // namespace

QSeries pi_product(RootType type, const std::vector<int>& exps, int base, int sigma, int tau, int N)
{
    check_type(type, exps, base);
    checked_sign(sigma, "sigma");
    if (type == RootType::D) checked_sign(tau, "tau");
    if (sigma < 0 || (type == RootType::D && tau < 0)) return QSeries(N, 0);
    int n = static_cast<int>(exps.size());
    ProductSpec s;
    s.pochs.push_back({base, base, n});
    if (type == RootType::B)
        for (int a : exps) s.thetas.push_back({a, base, 1});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            s.thetas.push_back({exps[i] - exps[j], base, 1});
            s.thetas.push_back({exps[i] + exps[j], base, 1});
        }
    return quotient_product(s, N);
}

QSeries macdonald_sum(RootType type, const std::vector<int>& exps, int base, int sigma, int tau, int N)
{
    check_type(type, exps, base);
    checked_sign(sigma, "sigma");
    if (type == RootType::D) checked_sign(tau, "tau");
    int n = static_cast<int>(exps.size());
    LatticeSum L;
    L.n = n;
    long amax = 0;
    for (int a : exps) amax = std::max(amax, std::labs(a));
    for (int i = 0; i < n; ++i) L.shift += static_cast<long>(exps[i]) * (n - 1 - i);
    if (type == RootType::B) {
        long c = 2L * n - 1;
        L.slope_bound = c * amax;
        L.quad = [=](int i, long r) { return base * (c * binom2(r) + i * r); };
        L.sign = [=](int, long r) { return parity_sign(-sigma, r); };
        L.entry = [=](int i, int j, long r) {
            long a = exps[i];
            int jj = j + 1;
            return std::array<Mono, 2>{Mono{1, a * (c * r + jj - n)}, Mono{-1, a * (-c * r + n - jj + 1)}};
        };
    } else {
        long c = 2L * (n - 1);
        L.slope_bound = c * amax;
        L.quad = [=](int i, long r) { return base * (c * binom2(r) + i * r); };
        L.sign = [=](int, long r) { return parity_sign(sigma, r); };
        L.entry = [=](int i, int j, long r) {
            long a = exps[i];
            int jj = j + 1;
            return std::array<Mono, 2>{Mono{1, a * (c * r + jj - n)}, Mono{tau, a * (-c * r + n - jj)}};
        };
    }
    return to_series(lattice_sum(L, N), N);
}

bool HalfWeight::lambda_integral() const
{
    return std::all_of(two_lambda.begin(), two_lambda.end(), [](int v) { return v % 2 == 0; });
}

void check_half_weight(Family f, int n, const HalfWeight& hw)
{
    if (f == Family::C) throw std::invalid_argument("specialized_character_sum: family must be A or D");
    if (f == Family::A && n < 1) throw std::invalid_argument("specialized_character_sum: A needs n >= 1");
    if (f == Family::D && n < 2) throw std::invalid_argument("specialized_character_sum: D needs n >= 2");
    if (hw.two_k < 0) throw std::invalid_argument("half weight: two_k must be >= 0");
    if (static_cast<int>(hw.two_lambda.size()) != n) throw std::invalid_argument("half weight: lambda must have n entries");
    for (std::size_t i = 0; i < hw.two_lambda.size(); ++i) {
        if (hw.two_lambda[i] < 0) throw std::invalid_argument("half weight: lambda entries must be >= 0");
        if (i > 0 && hw.two_lambda[i] > hw.two_lambda[i - 1]) throw std::invalid_argument("half weight: lambda must be weakly decreasing");
    }
    int top = hw.two_lambda.empty() ? 0 : hw.two_lambda[0];
    if (f == Family::A) {
        if (!hw.lambda_integral()) throw std::invalid_argument("half weight: A needs lambda a partition");
        if (top > 2 * (hw.two_k / 2)) throw std::invalid_argument("half weight: A needs lambda_1 <= floor(k)");
    } else {
        for (int v : hw.two_lambda)
            if ((v - hw.two_lambda[0]) % 2 != 0)
                throw std::invalid_argument("half weight: D needs a partition or a half-partition");
        if (top > hw.two_k) throw std::invalid_argument("half weight: D needs lambda_1 <= k");
    }
}

std::vector<int> half_weight_coordinates(const HalfWeight& hw)
{
    if (!hw.k_integral() || !hw.lambda_integral()) throw std::invalid_argument("half weight: not integral");
    int n = static_cast<int>(hw.two_lambda.size());
    std::vector<int> w(n + 1);
    w[0] = hw.two_k / 2 - (n ? hw.two_lambda[0] / 2 : 0);
    for (int i = 1; i <= n; ++i) w[i] = hw.two_lambda[i - 1] / 2 - (i < n ? hw.two_lambda[i] / 2 : 0);
    return w;
}

QSeries specialized_character_sum(Family f, int n, const HalfWeight& hw, int N)
{
    check_half_weight(f, n, hw);
    LatticeSum L;
    L.n = n;
    L.row_dependent = true;
    if (f == Family::A) {
        long kap = hw.two_k + 2L * n + 1;
        int sigma = (kap % 2 != 0) ? 1 : -1;
        long c = 2L * n - 1;
        std::vector<long> y(n);
        for (int i = 0; i < n; ++i) y[i] = hw.two_lambda[i] / 2 + n - (i + 1) + 1;
        long ymax = *std::max_element(y.begin(), y.end());
        for (int i = 0; i < n; ++i) L.shift += y[i] * (n - 1 - i);
        L.slope_bound = c * ymax;
        L.quad = [=](int i, long r) { return kap * (c * binom2(r) + (2L * n - (i + 1)) * r); };
        L.sign = [=](int, long r) { return parity_sign(-sigma, r); };
        L.entry = [=](int i, int j, long r) {
            int ii = i + 1;
            return std::array<Mono, 2>{Mono{1, y[j] * (-c * r + ii - n)}, Mono{-1, y[j] * (c * r + n - ii + 1)}};
        };
        QSeries s = to_series(divide_exact(lattice_sum(L, N), 2), N);
        return (s * pow(inv_poch(1, 1, kInfinite, N - std::min(0, s.floor())), n)).truncated(N);
    }
    // D: exponents in u = q^{1/2}
    long kap = hw.two_k + 2L * n;
    int sigma = (kap % 2 == 0) ? 1 : -1;
    int tau = hw.lambda_integral() ? 1 : -1;
    long c = 2L * (n - 1);
    std::vector<long> y(n);
    for (int i = 0; i < n; ++i) y[i] = hw.two_lambda[i] + 2L * n - 2L * (i + 1) + 1;
    long ymax = *std::max_element(y.begin(), y.end());
    for (int i = 0; i < n; ++i) L.shift += y[i] * (n - 1 - i);
    L.slope_bound = c * ymax;
    L.quad = [=](int i, long r) { return 2 * kap * (c * (r * (r + 1) / 2) - i * r); };
    L.sign = [=](int, long r) { return parity_sign(sigma, r); };
    L.entry = [=](int i, int j, long r) {
        int ii = i + 1;
        return std::array<Mono, 2>{Mono{1, y[j] * (-c * r + ii - n)}, Mono{tau, y[j] * (c * r + n - ii)}};
    };
    auto acc = divide_exact(lattice_sum(L, 2 * N + 1), 4);
    std::map<long, Coeff> halved;
    for (const auto& [e, v] : acc) {
        if (v.is_zero()) continue;
        if (e % 2 != 0) throw std::logic_error("specialized D sum: odd half-exponent survived");
        halved[e / 2] = v;
    }
    QSeries s = to_series(halved, N);
    int M = N - std::min(0, s.floor());
    QSeries den = inv_poch(2, 2, kInfinite, M);
    if (n > 1) den *= pow(inv_poch(1, 1, kInfinite, M), n - 1);
    return (s * den).truncated(N);
}

}  // namespace qlab
