#include "qlab/products.hpp"

#include <numeric>
#include <stdexcept>

namespace qlab {

namespace {

long floordiv(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// theta(q^a; q^m) = sign * q^shift * theta(q^a0; q^m) with 0 <= a0 < m.
struct ThetaReduction {
    int a0;
    int sign;
    long shift;
};

ThetaReduction reduce_theta(int a, int m)
{
    if (m < 1) throw std::invalid_argument("theta: base exponent must be >= 1");
    long j = floordiv(a, m);
    int a0 = static_cast<int>(a - j * m);
    long shift = -(j * a0 + m * j * (j - 1) / 2);
    return {a0, (j % 2 == 0) ? 1 : -1, shift};
}

void apply_linear(QSeries& s, int e, int power)
{
    // factor (1 - q^e)^power, e >= 1
    if (e > s.order()) return;
    for (int p = 0; p < power; ++p) s.mul_one_minus(e);
    for (int p = 0; p < -power; ++p) s.div_one_minus(e);
}

void apply_poch(QSeries& s, int c, int m, int power, int N)
{
    if (c < 1 || m < 1) throw std::invalid_argument("poch factor needs c >= 1, m >= 1");
    for (long e = c; e <= N; e += m) apply_linear(s, static_cast<int>(e), power);
}

}  // namespace

QSeries theta_q(int a, int m, int N)
{
    ProductSpec s;
    s.thetas.push_back({a, m, 1});
    return quotient_product(s, N);
}

QSeries quotient_product(const ProductSpec& spec, int N)
{
    int sign = 1;
    long shift = 0;
    std::vector<ThetaReduction> red;
    for (const auto& t : spec.thetas) {
        ThetaReduction r = reduce_theta(t.a, t.m);
        if (r.a0 == 0) {
            if (t.power > 0) return QSeries(N, 0);
            if (t.power < 0) throw std::domain_error("not invertible at this truncation");
        }
        red.push_back(r);
        if (r.sign < 0 && t.power % 2 != 0) sign = -sign;
        shift += r.shift * t.power;
    }
    long inner = static_cast<long>(N) - shift;
    if (inner < 0) return QSeries(N, static_cast<int>(shift));
    int M = static_cast<int>(inner);
    QSeries s = QSeries::one(M);
    for (std::size_t i = 0; i < spec.thetas.size(); ++i) {
        const auto& t = spec.thetas[i];
        if (t.power == 0) continue;
        apply_poch(s, red[i].a0, t.m, t.power, M);
        apply_poch(s, t.m - red[i].a0, t.m, t.power, M);
    }
    for (const auto& p : spec.pochs)
        if (p.power != 0) apply_poch(s, p.c, p.m, p.power, M);
    if (sign < 0) s.scale(Coeff(-1));
    if (shift != 0) s = s.shifted(0, 0, static_cast<int>(shift));
    return s.truncated(N);
}

std::vector<int> weight_lambdas(const std::vector<int>& weight)
{
    int n = static_cast<int>(weight.size()) - 1;
    std::vector<int> lam(n + 2, 0);
    for (int i = n; i >= 1; --i) lam[i] = lam[i + 1] + weight[i];
    lam.resize(n + 1);
    return lam;
}

ProductSpec char_product_spec(Family f, SpecKind kind, int n, const std::vector<int>& weight)
{
    if (n < 1) throw std::invalid_argument("char_product requires n >= 1");
    if (static_cast<int>(weight.size()) != n + 1) throw std::invalid_argument("weight length must be n+1");
    for (int x : weight)
        if (x < 0) throw std::invalid_argument("weight entries must be >= 0");
    int k = std::accumulate(weight.begin(), weight.end(), 0);
    auto lam = weight_lambdas(weight);
    ProductSpec s;
    if (f == Family::A) {
        int kap = 2 * k + 2 * n + 1;
        s.pochs.push_back({kap, kap, n});
        s.pochs.push_back({1, 1, -n});
        if (kind == SpecKind::principal) {
            s.pochs.push_back({2 * n + 1, 4 * n + 2, 1});
            s.pochs.push_back({1, 2, -1});
        }
        for (int i = 1; i <= n; ++i) {
            s.thetas.push_back({lam[i] + n - i + 1, kap, 1});
            if (kind == SpecKind::principal) s.thetas.push_back({2 * k - 2 * lam[i] + 2 * i - 1, 2 * kap, 1});
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                s.thetas.push_back({lam[i] - lam[j] - i + j, kap, 1});
                s.thetas.push_back({lam[i] + lam[j] + 2 * n - i - j + 2, kap, 1});
            }
    } else if (f == Family::C) {
        int mod = 2 * k + 2 * n + 2;
        s.pochs.push_back({k + n + 1, mod, 1});
        s.pochs.push_back({mod, mod, n});
        s.pochs.push_back({1, 2, -1});
        s.pochs.push_back({1, 1, -n});
        for (int i = 1; i <= n; ++i) s.thetas.push_back({lam[i] + n - i + 1, k + n + 1, 1});
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                s.thetas.push_back({lam[i] - lam[j] - i + j, mod, 1});
                s.thetas.push_back({lam[i] + lam[j] + 2 * n - i - j + 2, mod, 1});
            }
    } else {
        int nu = 2 * k + 2 * n;
        s.pochs.push_back({nu, nu, n});
        if (kind == SpecKind::principal) {
            s.pochs.push_back({1, 2, -1});
            s.pochs.push_back({1, 1, -n});
            for (int i = 1; i <= n; ++i) s.thetas.push_back({2 * lam[i] + 2 * n - 2 * i + 1, nu, 1});
        } else {
            s.pochs.push_back({2, 2, -1});
            if (n > 1) s.pochs.push_back({1, 1, -(n - 1)});
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                s.thetas.push_back({lam[i] - lam[j] - i + j, nu, 1});
                s.thetas.push_back({lam[i] + lam[j] + 2 * n - i - j + 1, nu, 1});
            }
    }
    return s;
}

QSeries char_product(Family f, SpecKind kind, int n, const std::vector<int>& weight, int N)
{
    return quotient_product(char_product_spec(f, kind, n, weight), N);
}

namespace {

ProductSpec triple_over_qq(int a, int b, int m)
{
    ProductSpec s;
    s.pochs.push_back({a, m, 1});
    s.pochs.push_back({b, m, 1});
    s.pochs.push_back({m, m, 1});
    s.pochs.push_back({1, 1, -1});
    return s;
}

}  // namespace

ProductSpec gordon_spec(int k, int a)
{
    if (a < 0 || a > k) throw std::invalid_argument("gordon: need 0 <= a <= k");
    return triple_over_qq(a + 1, 2 * k - a + 2, 2 * k + 3);
}

ProductSpec jms_spec(int n, int a)
{
    if (a < 0 || a > n) throw std::invalid_argument("jms: need 0 <= a <= n");
    return triple_over_qq(2 * a + 1, 2 * n - 2 * a + 2, 2 * n + 3);
}

ProductSpec c_level1_spec(int n, int a)
{
    if (a < 0 || a > n) throw std::invalid_argument("c level one: need 0 <= a <= n");
    return triple_over_qq(2 * a + 2, 2 * n - 2 * a + 2, 2 * n + 4);
}

ProductSpec dk1_spec(int n, int a)
{
    if (a < 0 || a > n) throw std::invalid_argument("dk1: need 0 <= a <= n");
    return triple_over_qq(2 * a + 1, 2 * n - 2 * a + 1, 2 * n + 2);
}

ProductSpec c_rank0_spec(int k)
{
    ProductSpec s;
    s.pochs.push_back({k + 1, 2 * k + 2, 1});
    s.pochs.push_back({1, 2, -1});
    return s;
}

ProductSpec d_rank1_spec(int k)
{
    ProductSpec s;
    s.pochs.push_back({2 * k + 2, 2 * k + 2, 1});
    s.pochs.push_back({2, 2, -1});
    return s;
}

ProductSpec c_rank1_spec(int k0, int k1)
{
    int m = k0 + k1 + 2;
    ProductSpec s;
    s.pochs.push_back({k0 + 1, m, 1});
    s.pochs.push_back({k1 + 1, m, 1});
    s.pochs.push_back({m, m, 1});
    s.pochs.push_back({1, 2, -1});
    s.pochs.push_back({1, 1, -1});
    return s;
}

ProductSpec ag_type_spec(AGProduct kind, int k)
{
    ProductSpec s;
    if (kind == AGProduct::shun) {
        int m = k + 2;
        for (int c : {1, k + 1, k + 2}) s.pochs.push_back({c, m, 1});
        s.pochs.push_back({1, 2, -1});
        s.pochs.push_back({1, 1, -1});
        return s;
    }
    int m = 2 * k + 4;
    std::vector<int> cs;
    if (kind == AGProduct::k_lambda0) cs = {1, 2, 2 * k + 2, 2 * k + 3, m, m};
    else if (kind == AGProduct::k_lambda1) cs = {k + 1, k + 2, k + 2, k + 3, m, m};
    else cs = {k, k + 1, k + 3, k + 4, m, m};
    for (int c : cs) {
        if (c < 1) throw std::invalid_argument("ag-type product: k too small");
        s.pochs.push_back({c, m, 1});
    }
    s.pochs.push_back({2, 2, -1});
    s.pochs.push_back({1, 1, -1});
    return s;
}

ProductSpec ag_general_spec(int k, int a)
{
    if (a < 0 || a > k) throw std::invalid_argument("ag general: need 0 <= a <= k");
    int m = 2 * k + 4;
    ProductSpec s;
    for (int c : {a + 1, a + 2, 2 * k - a + 2, 2 * k - a + 3, m, m}) s.pochs.push_back({c, m, 1});
    s.pochs.push_back({2, 2, -1});
    s.pochs.push_back({1, 1, -1});
    return s;
}

}  // namespace qlab
