#include "qlab/multisums.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qlab {

namespace {

// 1/(q^m;q^m)_j at order N, cached per call.
class InvPochCache {
public:
    explicit InvPochCache(int N) : N_(N) {}
    const QSeries& get(int j, int m)
    {
        auto key = std::make_pair(j, m);
        auto it = map_.find(key);
        if (it == map_.end()) it = map_.emplace(key, inv_poch(m, m, j, N_)).first;
        return it->second;
    }

private:
    int N_;
    std::map<std::pair<int, int>, QSeries> map_;
};

// Sum over r_1 >= ... >= r_n >= 0 of z^{zpow} q^{sum r_i^2 + sum_{i>a} r_i}
// / ((q)_{r_1-r_2} ... (q)_{r_{n-1}-r_n} (q^m;q^m)_{r_n}), zpow = r_1 or sum r_i.
QSeries gordon_chain(int n, int a, int last_m, bool z_total, int N)
{
    InvPochCache cache(N);
    QSeries total(N, 0);
    std::vector<int> r(n + 2, 0);
    auto rec = [&](auto&& self, int i, long e) -> void {
        if (e > N) return;
        if (i > n) {
            int M = N - static_cast<int>(e);
            QSeries t = QSeries::one(M);
            for (int j = 1; j < n; ++j)
                if (r[j] != r[j + 1]) t *= cache.get(r[j] - r[j + 1], 1).truncated(M);
            if (r[n] > 0) t *= cache.get(r[n], last_m).truncated(M);
            int zp = 0;
            if (z_total)
                for (int j = 1; j <= n; ++j) zp += r[j];
            else
                zp = r[1];
            total += t.shifted(zp, 0, static_cast<int>(e)).truncated(N);
            return;
        }
        int hi = (i == 1) ? N : r[i - 1];
        for (int v = 0; v <= hi; ++v) {
            long ee = e + static_cast<long>(v) * v + (i > a ? v : 0);
            if (ee > N) break;
            r[i] = v;
            self(self, i + 1, ee);
        }
        r[i] = 0;
    };
    rec(rec, 1, 0);
    return total;
}

}  // namespace

QSeries f_sum(int n, int a, int delta, int N)
{
    if (n < 1) throw std::invalid_argument("f_sum: n >= 1");
    if (a < 0 || a > n) throw std::invalid_argument("f_sum: a must lie in [0, n]");
    if (delta != 0 && delta != 1) throw std::invalid_argument("f_sum: delta in {0, 1}");
    return gordon_chain(n, a, 2 - delta, false, N);
}

QSeries ag_sum(int k, int a, int N)
{
    if (k < 0 || a < 0 || a > k) throw std::invalid_argument("ag_sum: need 0 <= a <= k");
    if (k == 0) return QSeries::one(N);
    return gordon_chain(k, a, 1, true, N);
}

QSeries interwoven_sum(const InterwovenSpec& spec, int N)
{
    const int k = spec.k;
    if (k < 0) throw std::invalid_argument("interwoven sum: k >= 0");
    if (k == 0) return QSeries::one(N);
    std::vector<int> alpha = spec.alpha, beta = spec.beta;
    alpha.resize(k, 0);
    beta.resize(k, 0);
    for (int i = 0; i < k; ++i)
        if (alpha[i] < 0 || beta[i] < 0) throw std::invalid_argument("interwoven sum: linear exponents must be >= 0");
    InvPochCache cache(N);
    QSeries total(N, 0);
    std::vector<int> r(k + 2, 0), s(k + 2, 0);

    auto leaf = [&](long e) {
        int M = N - static_cast<int>(e);
        QSeries t = QSeries::one(M);
        for (int i = 1; i <= k; ++i) {
            if (r[i] != r[i + 1]) t *= cache.get(r[i] - r[i + 1], 1).truncated(M);
            if (s[i] != s[i - 1]) t *= cache.get(s[i] - s[i - 1], 2).truncated(M);
        }
        int zp = 0, wp = 0;
        for (int i = 1; i <= k; ++i) {
            zp += r[i];
            wp += s[i];
        }
        if (spec.weight == InterwovenWeight::omega) {
            QSeries om(M, 0);
            for (int i = 1; i < k; ++i) {
                om.add_term(0, 0, r[i] + 2 * s[i], Coeff(1));
                om.add_term(0, 0, r[i] + 2 * s[i + 1], Coeff(-1));
            }
            om.add_term(0, 0, r[k] + 2 * s[k], Coeff(1));
            t *= om;
        } else if (spec.weight == InterwovenWeight::tail) {
            long lin = 2;
            for (int i = 1; i <= k; ++i) lin += r[i] + 2 * s[i];
            QSeries tl = QSeries::one(M);
            if (lin <= M) tl.add_term(0, 1, static_cast<int>(lin), Coeff(1));
            t *= tl;
        }
        total += t.shifted(zp, wp, static_cast<int>(e)).truncated(N);
    };

    auto rec = [&](auto&& self, int i, long e) -> void {
        if (i > k) {
            leaf(e);
            return;
        }
        int rhi = (i == 1) ? N : r[i - 1];
        for (int rv = 0; rv <= rhi; ++rv) {
            long base = e + static_cast<long>(rv) * rv + static_cast<long>(alpha[i - 1]) * rv;
            if (base > N) break;
            r[i] = rv;
            for (int sv = s[i - 1];; ++sv) {
                long ee = e + static_cast<long>(rv + sv) * (rv + sv) + static_cast<long>(sv) * sv +
                          static_cast<long>(alpha[i - 1]) * rv + static_cast<long>(beta[i - 1]) * sv;
                if (ee > N) break;
                s[i] = sv;
                self(self, i + 1, ee);
            }
            s[i] = 0;
        }
        r[i] = 0;
    };
    rec(rec, 1, 0);
    return total;
}

QSeries shun_sum(int k, int N)
{
    if (k < 0) throw std::invalid_argument("shun_sum: k >= 0");
    InterwovenSpec sp{k, {}, std::vector<int>(k, 1), InterwovenWeight::none};
    return substitute(interwoven_sum(sp, N), Subst::w_to_z());
}

QSeries shun2_sum(int k, Shun2Variant v, int N)
{
    if (k < 1) throw std::invalid_argument("shun2_sum: k >= 1");
    InterwovenSpec sp;
    sp.k = k;
    if (v == Shun2Variant::k_lambda0) {
        sp.alpha.assign(k, 1);
        sp.beta.assign(k, 2);
    } else if (v == Shun2Variant::mixed) {
        sp.weight = InterwovenWeight::omega;
    }
    return substitute(interwoven_sum(sp, N), Subst::w_to_z());
}

QSeries wz_sum(WZVariant v, int k, int N)
{
    InterwovenSpec sp;
    switch (v) {
    case WZVariant::A: sp = {2, {1, 1}, {2, 2}, InterwovenWeight::none}; break;
    case WZVariant::B: sp = {2, {}, {}, InterwovenWeight::none}; break;
    case WZVariant::C: sp = {2, {0, 1}, {0, 2}, InterwovenWeight::tail}; break;
    case WZVariant::D: sp = {2, {1, 1}, {0, 2}, InterwovenWeight::tail}; break;
    case WZVariant::guess_B:
        if (k < 1) throw std::invalid_argument("wz guess: k >= 1");
        sp = {k, {}, {}, InterwovenWeight::none};
        break;
    case WZVariant::guess_Omega:
        if (k < 1) throw std::invalid_argument("wz guess: k >= 1");
        sp = {k, {}, {}, InterwovenWeight::omega};
        break;
    }
    return interwoven_sum(sp, N);
}

QSeries alt_form_sum(AltForm f, int N)
{
    InterwovenSpec sp{2, {}, {}, InterwovenWeight::omega};
    if (f == AltForm::lambda0_lambda2) sp.alpha = {1, 0};
    return substitute(interwoven_sum(sp, N), Subst::w_to_z());
}

QSeries s_series(int k1, int k2, int l1, int l2, int N)
{
    // E >= g1(m1) + g2(m2) + g3(n1) + g4(n2) with the diagonal parts below.
    auto g1 = [&](long x) { return x * x + static_cast<long>(k1) * x; };
    auto g2 = [&](long x) { return 2 * x * x + static_cast<long>(k2) * x; };
    auto g3 = [&](long x) { return 2 * x * x + 2L * l1 * x; };
    auto g4 = [&](long x) { return 4 * x * x + 2L * l2 * x; };
    // minimum of a convex g over x >= 0 and where it is attained
    auto gmin = [](auto g) {
        long best = g(0), at = 0;
        for (long x = 1; g(x) <= best; ++x) best = g(x), at = x;
        return std::make_pair(best, at);
    };
    auto [min1, at1] = gmin(g1);
    auto [min2, at2] = gmin(g2);
    auto [min3, at3] = gmin(g3);
    auto [min4, at4] = gmin(g4);
    long mins[4] = {min1, min2, min3, min4};
    long floor_total = mins[0] + mins[1] + mins[2] + mins[3];
    if (floor_total > N) return QSeries(N, 0);
    long room = N - floor_total;
    InvPochCache cache(N - static_cast<int>(std::min(floor_total, 0L)));
    QSeries total(N, static_cast<int>(std::min(floor_total, 0L)));
    for (long m1 = 0; m1 <= at1 || g1(m1) - mins[0] <= room; ++m1) {
        long r1 = room - (g1(m1) - mins[0]);
        if (r1 < 0) continue;
        for (long m2 = 0; m2 <= at2 || g2(m2) - mins[1] <= r1; ++m2) {
            long r2 = r1 - (g2(m2) - mins[1]);
            if (r2 < 0) continue;
            for (long n1 = 0; n1 <= at3 || g3(n1) - mins[2] <= r2; ++n1) {
                long r3 = r2 - (g3(n1) - mins[2]);
                if (r3 < 0) continue;
                for (long n2 = 0; n2 <= at4 || g4(n2) - mins[3] <= r3; ++n2) {
                    if (r3 - (g4(n2) - mins[3]) < 0) continue;
                    long M1 = m1 + m2, M2 = m2, N1 = n1 + n2, N2 = n2;
                    long e = (M1 + N2) * (M1 + N2) + (M2 + N1) * (M2 + N1) + N1 * N1 + N2 * N2 + k1 * m1 +
                             k2 * m2 + 2L * l1 * n1 + 2L * l2 * n2;
                    if (e > N) continue;
                    int M = N - static_cast<int>(e);
                    QSeries t = QSeries::one(M);
                    if (m1) t *= cache.get(static_cast<int>(m1), 1).truncated(M);
                    if (m2) t *= cache.get(static_cast<int>(m2), 1).truncated(M);
                    if (n1) t *= cache.get(static_cast<int>(n1), 2).truncated(M);
                    if (n2) t *= cache.get(static_cast<int>(n2), 2).truncated(M);
                    total += t.shifted(static_cast<int>(M1 + M2), static_cast<int>(N1 + N2), static_cast<int>(e))
                                 .truncated(N);
                }
            }
        }
    }
    return total;
}

namespace {

using SIndex = std::array<int, 4>;

// Coefficient monomial c z^a w^b q^d with Laurent exponents.
struct SMono {
    long c;
    int z, w, q;
};

struct STerm {
    SMono m;
    SIndex idx;
};

// Linear combination over S symbols with Laurent polynomial coefficients.
using SExpr = std::map<SIndex, std::map<std::array<int, 3>, long>>;

void add_term(SExpr& e, const SMono& m, const SIndex& idx)
{
    auto& slot = e[idx][{m.z, m.w, m.q}];
    slot += m.c;
}

STerm st(long c, int z, int w, int q, int a, int b, int cc, int d) { return {{c, z, w, q}, {a, b, cc, d}}; }

// R^{(i)} at idx as three S terms.
std::vector<STerm> atomic_terms(int which, const SIndex& p)
{
    int k1 = p[0], k2 = p[1], l1 = p[2], l2 = p[3];
    switch (which) {
    case 1: return {st(1, 0, 0, 0, k1, k2, l1, l2), st(-1, 0, 0, 0, k1 + 1, k2, l1, l2),
                    st(-1, 1, 0, k1 + 1, k1 + 2, k2 + 2, l1, l2 + 1)};
    case 2: return {st(1, 0, 0, 0, k1, k2, l1, l2), st(-1, 0, 0, 0, k1, k2 + 1, l1, l2),
                    st(-1, 2, 0, k2 + 2, k1 + 2, k2 + 4, l1 + 1, l2 + 2)};
    case 3: return {st(1, 0, 0, 0, k1, k2, l1, l2), st(-1, 0, 0, 0, k1, k2, l1 + 1, l2),
                    st(-1, 0, 1, 2 * l1 + 2, k1, k2 + 2, l1 + 2, l2 + 2)};
    default: return {st(1, 0, 0, 0, k1, k2, l1, l2), st(-1, 0, 0, 0, k1, k2, l1, l2 + 1),
                     st(-1, 0, 2, 2 * l2 + 4, k1 + 2, k2 + 4, l1 + 2, l2 + 4)};
    }
}

// The toshow equations as stated (toshow3 keeps its w/z coefficients).
std::vector<STerm> toshow_terms(int which)
{
    switch (which) {
    case 1: return {st(1, 0, 0, 0, 0, 0, 0, 0), st(-1, 0, 0, 0, 1, 2, 0, 0), st(-1, 1, 0, 1, 1, 3, 1, 1),
                    st(-1, 1, 1, 3, 2, 5, 2, 3), st(-1, 2, 0, 2, 2, 4, 1, 2)};
    case 2: return {st(1, 0, 0, 0, 0, 0, 1, 1), st(1, 0, 1, 2, 1, 2, 2, 3), st(-1, 0, 0, 0, 0, 0, 1, 2),
                    st(-1, 0, 1, 2, 1, 3, 2, 3), st(-1, 0, 2, 6, 2, 5, 3, 5), st(-1, 2, 0, 2, 2, 4, 2, 3),
                    st(-1, 2, 1, 6, 3, 6, 3, 5), st(1, 2, 0, 2, 2, 4, 2, 4)};
    case 3: return {st(1, 0, 0, 0, 0, 0, 0, 0),   st(-1, 0, 0, 0, 0, 1, 1, 1),  st(-1, -1, 1, 0, 0, 1, 1, 1),
                    st(-1, 0, 1, 2, 1, 3, 2, 3),  st(-1, -1, 2, 2, 1, 3, 2, 3), st(1, -1, 1, 0, 1, 2, 1, 1),
                    st(1, -1, 2, 2, 2, 4, 2, 3),  st(1, 0, 1, 1, 2, 4, 1, 2),   st(-1, 2, 0, 2, 2, 4, 1, 2)};
    default: return {st(1, 0, 0, 0, 0, 1, 1, 1),  st(1, 0, 1, 2, 1, 3, 2, 3),  st(-1, 0, 0, 0, 1, 2, 1, 1),
                     st(-1, 0, 1, 2, 2, 4, 2, 3), st(-1, 1, 0, 1, 2, 4, 1, 2), st(-1, 2, 0, 3, 2, 5, 2, 3),
                     st(-1, 2, 1, 7, 3, 7, 3, 5), st(-1, 1, 1, 4, 3, 6, 2, 4)};
    }
}

struct Combo {
    SMono m;
    int which;
    SIndex idx;
};

Combo cb(long c, int z, int w, int q, int which, int a, int b, int cc, int d) { return {{c, z, w, q}, which, {a, b, cc, d}}; }

// The stated linear combinations of atomic relations.
std::vector<Combo> toshow_combination(int which)
{
    switch (which) {
    case 1: return {cb(1, 0, 0, 0, 1, 0, 1, 0, 0), cb(-1, 1, 0, 1, 1, 1, 3, 1, 1), cb(1, 0, 0, 0, 2, 0, 0, 0, 0),
                    cb(1, 0, 0, 0, 2, 1, 1, 0, 0), cb(1, 1, 0, 1, 3, 2, 3, 0, 1)};
    case 2: return {cb(1, 0, 0, 0, 2, 0, 0, 1, 1), cb(-1, 0, 0, 0, 2, 0, 0, 1, 2), cb(1, 0, 1, 2, 2, 1, 2, 2, 3),
                    cb(1, 0, 0, 0, 4, 0, 1, 1, 1)};
    case 3:
        return {
            cb(1, -3, 2, 0, 1, 0, 0, 1, 1),  cb(1, 0, 0, 0, 1, 0, 1, 0, 1),   cb(-1, 0, 0, 0, 1, 0, 1, 1, 1),
            cb(-1, -3, 2, 0, 1, 0, 1, 1, 1), cb(1, -2, 2, 1, 1, 0, 1, 1, 2),  cb(-1, -1, 1, 0, 1, 0, 2, 1, 2),
            cb(-1, -2, 2, 1, 1, 0, 2, 1, 2), cb(-1, -1, 1, 0, 1, 1, 1, 0, 1), cb(1, -1, 1, 0, 1, 1, 1, 1, 1),
            cb(-1, -1, 2, 2, 1, 2, 4, 1, 3), cb(1, 0, 0, 0, 2, 0, 0, 0, 0),   cb(-1, -2, 1, -1, 2, 0, 0, 0, 0),
            cb(1, -2, 1, -1, 2, 0, 0, 0, 1), cb(-1, -3, 2, 0, 2, 0, 0, 1, 1), cb(1, -3, 2, 0, 2, 1, 0, 1, 1),
            cb(-1, -1, 1, 0, 2, 0, 1, 1, 2), cb(-1, -2, 2, 1, 2, 0, 1, 1, 2), cb(1, -2, 2, 1, 2, 1, 1, 1, 2),
            cb(1, -2, 2, 1, 2, 2, 2, 0, 2),  cb(1, 0, 0, 0, 3, 1, 1, 0, 1),   cb(1, -1, 1, 0, 3, 1, 1, 0, 1),
            cb(-1, -1, 1, 0, 3, 2, 1, 0, 1), cb(-1, -2, 2, 1, 3, 2, 2, 0, 2), cb(1, 1, 0, 1, 3, 2, 3, 0, 2),
            cb(1, -2, 2, 1, 3, 2, 3, 0, 2),  cb(1, -1, 2, 2, 3, 2, 3, 1, 3),  cb(-1, -1, 2, 2, 3, 3, 4, 1, 3),
            cb(-1, 0, 1, 2, 3, 3, 3, 0, 2),  cb(1, -2, 1, -1, 4, 0, 0, 0, 0), cb(1, 0, 0, 0, 4, 0, 1, 0, 0),
            cb(-1, -2, 1, -1, 4, 0, 1, 0, 0), cb(-1, -1, 1, 0, 4, 0, 1, 1, 1), cb(1, -1, 1, 0, 4, 1, 2, 1, 1),
        };
    default:
        return {cb(1, 0, 0, 0, 1, 0, 1, 1, 1),  cb(1, 0, 0, 0, 1, 1, 2, 0, 1), cb(-1, 0, 0, 0, 1, 1, 2, 1, 1),
                cb(-1, 2, 0, 3, 1, 2, 5, 2, 3), cb(1, 0, 0, 0, 2, 1, 1, 0, 1), cb(1, 1, 0, 1, 2, 2, 3, 1, 2),
                cb(-1, 0, 0, 0, 3, 1, 1, 0, 1), cb(1, 0, 0, 0, 3, 2, 2, 0, 1), cb(1, 1, 0, 2, 3, 3, 4, 0, 2),
                cb(1, 2, 0, 3, 3, 3, 5, 1, 3)};
    }
}

void prune(SExpr& e)
{
    for (auto it = e.begin(); it != e.end();) {
        for (auto jt = it->second.begin(); jt != it->second.end();) {
            if (jt->second == 0) jt = it->second.erase(jt);
            else ++jt;
        }
        if (it->second.empty()) it = e.erase(it);
        else ++it;
    }
}

int toshow_index(Atomic a) { return static_cast<int>(a) - static_cast<int>(Atomic::toshow1) + 1; }

void add_series_term(QSeries& acc, const SMono& m, const SIndex& idx, int zclear, int N)
{
    int z = m.z + zclear;
    if (z < 0 || m.w < 0) throw std::logic_error("clearing monomial leaves a negative exponent");
    // z^z w^w q^d S: S is needed to order N - d.
    int inner = N - m.q;
    QSeries s = s_series(idx[0], idx[1], idx[2], idx[3], inner);
    s.scale(Coeff(m.c));
    acc += s.shifted(z, m.w, m.q).truncated(N);
}

}  // namespace

Atomic atomic_from_name(const std::string& name)
{
    static const char* names[] = {"R1", "R2", "R3", "R4", "toshow1", "toshow2", "toshow3", "toshow4"};
    for (int i = 0; i < 8; ++i)
        if (name == names[i]) return static_cast<Atomic>(i);
    throw std::invalid_argument("unknown atomic relation: " + name);
}

std::string atomic_name(Atomic a)
{
    static const char* names[] = {"R1", "R2", "R3", "R4", "toshow1", "toshow2", "toshow3", "toshow4"};
    return names[static_cast<int>(a)];
}

QSeries atomic_residual(Atomic which, const std::array<int, 4>& params, int N)
{
    QSeries acc(N, 0);
    if (which <= Atomic::R4) {
        for (const auto& t : atomic_terms(static_cast<int>(which) + 1, params)) add_series_term(acc, t.m, t.idx, 0, N);
        return acc;
    }
    int ts = toshow_index(which);
    int zclear = (ts == 3) ? 1 : 0;
    for (const auto& t : toshow_terms(ts)) add_series_term(acc, t.m, t.idx, zclear, N);
    return acc;
}

bool atomic_span_check(Atomic toshow)
{
    if (toshow < Atomic::toshow1) throw std::invalid_argument("atomic_span_check: toshow relation expected");
    int ts = toshow_index(toshow);
    SExpr e;
    for (const auto& t : toshow_terms(ts)) add_term(e, t.m, t.idx);
    for (const auto& c : toshow_combination(ts))
        for (const auto& t : atomic_terms(c.which, c.idx))
            add_term(e, {-c.m.c * t.m.c, c.m.z + t.m.z, c.m.w + t.m.w, c.m.q + t.m.q}, t.idx);
    prune(e);
    return e.empty();
}

}  // namespace qlab
