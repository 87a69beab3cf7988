#include "qlab/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qlab {

namespace {

int ord_add(int o, int f)
{
    if (o >= kExact) return kExact;
    return std::min(o + f, kExact - 1);
}

}  // namespace

QSeries::QSeries(int order, int floor) : floor_(floor), order_(std::min(order, kExact)) {}

QSeries QSeries::one(int order) { return monomial(Coeff(1), 0, 0, 0, order); }

QSeries QSeries::monomial(const Coeff& c, int dz, int dw, int dq, int order)
{
    QSeries s(order, std::min(0, dq));
    s.add_term(dz, dw, dq, c);
    return s;
}

QSeries QSeries::from_coeffs(const std::vector<Coeff>& c, int order)
{
    QSeries s(order, 0);
    int top = std::min<int>(static_cast<int>(c.size()) - 1, order);
    if (top < 0) return s;
    s.reshape(1, 1, 0, top);
    for (int i = 0; i <= top; ++i) s.data_[i] = c[i];
    s.trim();
    return s;
}

void QSeries::reshape(int nz, int nw, int floor, int top)
{
    int len = std::max(0, top - floor + 1);
    if (nz <= 0 || nw <= 0 || len == 0) {
        nz_ = nw_ = len_ = 0;
        data_.clear();
        floor_ = std::min(floor_, floor);
        return;
    }
    if (nz == nz_ && nw == nw_ && floor == floor_ && len == len_) return;
    std::vector<Coeff> d(static_cast<std::size_t>(nz) * nw * len);
    int cz = std::min(nz, nz_), cw = std::min(nw, nw_);
    for (int z = 0; z < cz; ++z)
        for (int w = 0; w < cw; ++w) {
            Coeff* src = block(z, w);
            Coeff* dst = d.data() + (static_cast<std::size_t>(z) * nw + w) * len;
            for (int i = 0; i < len_; ++i) {
                int j = floor_ + i - floor;
                if (j >= 0 && j < len) dst[j] = std::move(src[i]);
            }
        }
    data_ = std::move(d);
    nz_ = nz;
    nw_ = nw;
    len_ = len;
    floor_ = floor;
}

void QSeries::trim()
{
    int mz = -1, mw = -1, hi = -1;
    for (int z = 0; z < nz_; ++z)
        for (int w = 0; w < nw_; ++w) {
            const Coeff* b = block(z, w);
            for (int i = 0; i < len_; ++i)
                if (!b[i].is_zero()) {
                    mz = std::max(mz, z);
                    mw = std::max(mw, w);
                    hi = std::max(hi, i);
                }
        }
    if (hi < 0) {
        nz_ = nw_ = len_ = 0;
        data_.clear();
        return;
    }
    // the floor is semantic; only the stored range shrinks
    if (mz + 1 != nz_ || mw + 1 != nw_ || hi + 1 != len_) reshape(mz + 1, mw + 1, floor_, floor_ + hi);
}

Coeff QSeries::coeff(int dz, int dw, int dq) const
{
    if (dz < 0 || dw < 0 || dz >= nz_ || dw >= nw_) return Coeff();
    int i = dq - floor_;
    if (i < 0 || i >= len_) return Coeff();
    return block(dz, dw)[i];
}

void QSeries::add_term(int dz, int dw, int dq, const Coeff& c)
{
    if (c.is_zero() || dq > order_) return;
    if (dz < 0 || dw < 0) throw std::invalid_argument("negative z/w exponent");
    if (len_ == 0) {
        reshape(dz + 1, dw + 1, std::min(floor_, dq), dq);
    } else if (dz >= nz_ || dw >= nw_ || dq < floor_ || dq > top()) {
        reshape(std::max(nz_, dz + 1), std::max(nw_, dw + 1), std::min(floor_, dq), std::max(top(), dq));
    }
    block(dz, dw)[dq - floor_] += c;
}

bool QSeries::is_zero() const
{
    for (const auto& c : data_)
        if (!c.is_zero()) return false;
    return true;
}

std::size_t QSeries::term_count() const
{
    std::size_t n = 0;
    for (const auto& c : data_)
        if (!c.is_zero()) ++n;
    return n;
}

QSeries QSeries::truncated(int N) const
{
    QSeries r = *this;
    if (N >= r.order_) return r;
    r.order_ = N;
    if (r.len_ > 0 && r.top() > N) {
        r.reshape(r.nz_, r.nw_, r.floor_, N);
        r.trim();
    }
    return r;
}

std::vector<Coeff> QSeries::univariate(int N) const
{
    if (N > order_) throw std::domain_error("insufficient truncation");
    std::vector<Coeff> v(static_cast<std::size_t>(std::max(N + 1, 0)));
    for (int d = 0; d <= N; ++d) v[d] = coeff(0, 0, d);
    return v;
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    int order = std::min(order_, o.order_);
    int floor = std::min(floor_, o.floor_);
    if (o.len_ == 0 && len_ == 0) {
        order_ = order;
        floor_ = floor;
        return *this;
    }
    int top = len_ ? this->top() : o.top();
    if (o.len_) top = std::max(top, o.top());
    top = std::min(top, order);
    reshape(std::max(nz_, o.nz_), std::max(nw_, o.nw_), floor, top);
    order_ = order;
    if (len_ == 0) return *this;
    for (int z = 0; z < o.nz_; ++z)
        for (int w = 0; w < o.nw_; ++w) {
            const Coeff* src = o.block(z, w);
            Coeff* dst = block(z, w);
            for (int i = 0; i < o.len_; ++i) {
                int j = o.floor_ + i - floor_;
                if (j >= len_) break;
                if (!src[i].is_zero()) dst[j] += src[i];
            }
        }
    floor_ = std::min(floor_, floor);
    trim();
    return *this;
}

QSeries QSeries::operator-() const
{
    QSeries r = *this;
    for (auto& c : r.data_) c.negate();
    return r;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::scale(const Coeff& c)
{
    if (c.is_zero()) {
        nz_ = nw_ = len_ = 0;
        data_.clear();
        return *this;
    }
    for (auto& x : data_)
        if (!x.is_zero()) x *= c;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    int floor = a.floor_ + b.floor_;
    int order = std::min(ord_add(a.order_, b.floor_), ord_add(b.order_, a.floor_));
    QSeries r(order, floor);
    if (a.len_ == 0 || b.len_ == 0) return r;
    int top = std::min(a.top() + b.top(), order);
    if (top < floor) return r;
    r.reshape(a.nz_ + b.nz_ - 1, a.nw_ + b.nw_ - 1, floor, top);
    int rlen = r.len_;

    auto range = [](const Coeff* p, int len, int& lo, int& hi) {
        lo = 0;
        while (lo < len && p[lo].is_zero()) ++lo;
        hi = len - 1;
        while (hi >= lo && p[hi].is_zero()) --hi;
    };
    std::vector<int> blo(static_cast<std::size_t>(b.nz_) * b.nw_), bhi(blo.size());
    for (int z = 0; z < b.nz_; ++z)
        for (int w = 0; w < b.nw_; ++w) range(b.block(z, w), b.len_, blo[z * b.nw_ + w], bhi[z * b.nw_ + w]);

    for (int za = 0; za < a.nz_; ++za)
        for (int wa = 0; wa < a.nw_; ++wa) {
            const Coeff* A = a.block(za, wa);
            int alo, ahi;
            range(A, a.len_, alo, ahi);
            if (alo > ahi) continue;
            for (int zb = 0; zb < b.nz_; ++zb)
                for (int wb = 0; wb < b.nw_; ++wb) {
                    int bl = blo[zb * b.nw_ + wb], bh = bhi[zb * b.nw_ + wb];
                    if (bl > bh) continue;
                    const Coeff* B = b.block(zb, wb);
                    Coeff* R = r.block(za + zb, wa + wb);
                    for (int i = alo; i <= ahi; ++i) {
                        if (A[i].is_zero()) continue;
                        int jmax = std::min(bh, rlen - 1 - i);
                        for (int j = bl; j <= jmax; ++j)
                            if (!B[j].is_zero()) R[i + j].addmul(A[i], B[j]);
                    }
                }
        }
    r.trim();
    return r;
}

QSeries& QSeries::operator*=(const QSeries& o)
{
    *this = *this * o;
    return *this;
}

QSeries QSeries::shifted(int dz, int dw, int dq) const
{
    if (dz < 0 || dw < 0) throw std::invalid_argument("negative z/w shift");
    QSeries r(ord_add(order_, dq), floor_ + dq);
    if (len_ == 0) return r;
    r.reshape(nz_ + dz, nw_ + dw, floor_ + dq, top() + dq);
    for (int z = 0; z < nz_; ++z)
        for (int w = 0; w < nw_; ++w) std::copy(block(z, w), block(z, w) + len_, r.block(z + dz, w + dw));
    if (r.top() > r.order_) {
        r.reshape(r.nz_, r.nw_, r.floor_, r.order_);
        r.trim();
    }
    return r;
}

void QSeries::mul_one_minus(int e)
{
    if (e < 1) throw std::invalid_argument("mul_one_minus: e >= 1");
    if (len_ == 0) return;
    int top = std::min(this->top() + e, order_);
    reshape(nz_, nw_, floor_, top);
    for (int z = 0; z < nz_; ++z)
        for (int w = 0; w < nw_; ++w) {
            Coeff* b = block(z, w);
            for (int i = len_ - 1; i >= e; --i)
                if (!b[i - e].is_zero()) b[i] -= b[i - e];
        }
    trim();
}

void QSeries::div_one_minus(int e)
{
    if (e < 1) throw std::invalid_argument("div_one_minus: e >= 1");
    if (len_ == 0) return;
    if (exact()) throw std::domain_error("div_one_minus: exact input needs a truncation order");
    reshape(nz_, nw_, floor_, order_);
    for (int z = 0; z < nz_; ++z)
        for (int w = 0; w < nw_; ++w) {
            Coeff* b = block(z, w);
            for (int i = e; i < len_; ++i)
                if (!b[i - e].is_zero()) b[i] += b[i - e];
        }
    trim();
}

QSeries substitute_impl(const QSeries& s, int za, int zw, int zq, int wz, int ww, int wq, int m)
{
    if (m < 1) throw std::invalid_argument("substitute: q -> q^m needs m >= 1");
    if (za < 0 || zw < 0 || wz < 0 || ww < 0) throw std::invalid_argument("substitute: negative z/w exponent");
    bool nonneg = zq >= 0 && wq >= 0;
    if (!nonneg && !s.exact())
        throw std::domain_error("substitute: negative q-shift on a truncated series is unbounded below");
    int order = s.exact() ? kExact : (s.order_ + 1) * m - 1;
    int floor = s.floor_ * m;
    if (!nonneg) {
        s.for_each_term([&](int z, int w, int q, const Coeff&) { floor = std::min(floor, zq * z + wq * w + m * q); });
    }
    QSeries r(order, floor);
    s.for_each_term([&](int z, int w, int q, const Coeff& c) {
        r.add_term(za * z + wz * w, zw * z + ww * w, zq * z + wq * w + m * q, c);
    });
    r.trim();
    return r;
}

QSeries substitute(const QSeries& s, const Subst& p)
{
    return substitute_impl(s, p.za, p.zw, p.zq, p.wz, p.ww, p.wq, p.m);
}

QSeries z_zero(const QSeries& s)
{
    QSeries r(s.order(), s.floor());
    s.for_each_term([&](int z, int w, int q, const Coeff& c) {
        if (z == 0) r.add_term(0, w, q, c);
    });
    return r;
}

QSeries w_zero(const QSeries& s)
{
    QSeries r(s.order(), s.floor());
    s.for_each_term([&](int z, int w, int q, const Coeff& c) {
        if (w == 0) r.add_term(z, 0, q, c);
    });
    return r;
}

QSeries invert(const QSeries& s)
{
    Coeff c0 = s.coeff(0, 0, 0);
    bool unit = c0 == Coeff(1) || c0 == Coeff(-1);
    bool ok = unit;
    s.for_each_term([&](int z, int w, int q, const Coeff&) {
        if (q < 0 || (q == 0 && (z != 0 || w != 0))) ok = false;
    });
    if (!ok) throw std::domain_error("not invertible at this truncation");
    if (s.exact()) {
        if (s.term_count() == 1) return s;
        throw std::domain_error("invert: exact input needs a truncation order");
    }
    int N = s.order();
    // per-degree slices of s and of the inverse t
    struct Slice {
        int nz = 0, nw = 0;
        std::vector<Coeff> c;
        Coeff& at(int z, int w) { return c[static_cast<std::size_t>(z) * nw + w]; }
    };
    std::vector<Slice> S(N + 1), T(N + 1);
    for (int d = 0; d <= N; ++d) {
        S[d].nz = s.z_extent();
        S[d].nw = s.w_extent();
        S[d].c.assign(static_cast<std::size_t>(S[d].nz) * S[d].nw, Coeff());
    }
    int maxz = 0, maxw = 0;
    s.for_each_term([&](int z, int w, int q, const Coeff& c) {
        S[q].at(z, w) = c;
    });
    for (int d = 1; d <= N; ++d)
        for (int z = 0; z < S[d].nz; ++z)
            for (int w = 0; w < S[d].nw; ++w)
                if (!S[d].at(z, w).is_zero()) {
                    maxz = std::max(maxz, z);
                    maxw = std::max(maxw, w);
                }
    T[0].nz = T[0].nw = 1;
    T[0].c = {c0};
    for (int d = 1; d <= N; ++d) {
        int nz = 1, nw = 1;
        for (int j = 1; j <= d; ++j) {
            nz = std::max(nz, T[d - j].nz + maxz);
            nw = std::max(nw, T[d - j].nw + maxw);
        }
        Slice acc;
        acc.nz = nz;
        acc.nw = nw;
        acc.c.assign(static_cast<std::size_t>(nz) * nw, Coeff());
        for (int j = 1; j <= d; ++j) {
            Slice& a = S[j];
            Slice& b = T[d - j];
            for (int z1 = 0; z1 < a.nz; ++z1)
                for (int w1 = 0; w1 < a.nw; ++w1) {
                    const Coeff& x = a.at(z1, w1);
                    if (x.is_zero()) continue;
                    for (int z2 = 0; z2 < b.nz; ++z2)
                        for (int w2 = 0; w2 < b.nw; ++w2) {
                            const Coeff& y = b.at(z2, w2);
                            if (!y.is_zero()) acc.at(z1 + z2, w1 + w2).addmul(x, y);
                        }
                }
        }
        // t_d = -c0 * acc since c0 = +-1 is its own inverse
        Coeff f = -c0;
        for (auto& c : acc.c)
            if (!c.is_zero()) c *= f;
        T[d] = std::move(acc);
    }
    QSeries r(N, 0);
    for (int d = 0; d <= N; ++d)
        for (int z = 0; z < T[d].nz; ++z)
            for (int w = 0; w < T[d].nw; ++w) r.add_term(z, w, d, T[d].at(z, w));
    return r;
}

QSeries pow(const QSeries& s, int e)
{
    if (e < 0) return pow(invert(s), -e);
    QSeries base = s, r = QSeries::one(s.exact() ? kExact : s.order());
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

QSeries poch(int c, int m, int count, int N)
{
    if (m < 1) throw std::invalid_argument("poch: m >= 1");
    if (count == kInfinite && c < 1) throw std::invalid_argument("poch: infinite product needs c >= 1");
    QSeries r = QSeries::one(N);
    for (int j = 0; count == kInfinite || j < count; ++j) {
        long e = c + static_cast<long>(j) * m;
        if (e > N) break;
        if (e == 0) return QSeries(N, 0);
        if (e < 0) throw std::invalid_argument("poch: negative exponent factor");
        r.mul_one_minus(static_cast<int>(e));
    }
    return r;
}

QSeries inv_poch(int c, int m, int count, int N)
{
    if (m < 1) throw std::invalid_argument("inv_poch: m >= 1");
    if (count == kInfinite && c < 1) throw std::invalid_argument("inv_poch: infinite product needs c >= 1");
    QSeries r = QSeries::one(N);
    if (N < 0) return r.truncated(N);
    r = r.truncated(N);
    for (int j = 0; count == kInfinite || j < count; ++j) {
        long e = c + static_cast<long>(j) * m;
        if (e > N) break;
        if (e <= 0) throw std::domain_error("not invertible at this truncation");
        r.div_one_minus(static_cast<int>(e));
    }
    return r;
}

QSeries qbin(int n, int k, int m)
{
    if (m < 1) throw std::invalid_argument("qbin: m >= 1");
    if (k < 0 || k > n) return QSeries();
    k = std::min(k, n - k);
    std::vector<Coeff> p{Coeff(1)};
    for (int i = 0; i < k; ++i) {
        int e = m * (n - i);
        p.resize(p.size() + e);
        for (int j = static_cast<int>(p.size()) - 1; j >= e; --j)
            if (!p[j - e].is_zero()) p[j] -= p[j - e];
    }
    for (int i = 1; i <= k; ++i) {
        int e = m * i;
        int deg = static_cast<int>(p.size()) - 1 - e;
        std::vector<Coeff> b(deg + 1);
        for (int j = 0; j <= deg; ++j) {
            b[j] = p[j];
            if (j >= e) b[j] += b[j - e];
        }
        p = std::move(b);
    }
    return QSeries::from_coeffs(p, kExact);
}

std::optional<Mismatch> compare(const QSeries& a, const QSeries& b, int up_to)
{
    if (up_to > a.order() || up_to > b.order()) throw std::domain_error("insufficient truncation");
    int nz = std::max(a.z_extent(), b.z_extent());
    int nw = std::max(a.w_extent(), b.w_extent());
    int lo = std::min(a.floor(), b.floor());
    for (int z = 0; z < nz; ++z)
        for (int w = 0; w < nw; ++w)
            for (int q = lo; q <= up_to; ++q) {
                Coeff x = a.coeff(z, w, q), y = b.coeff(z, w, q);
                if (x != y) return Mismatch{z, w, q, x, y};
            }
    return std::nullopt;
}

std::string to_tsv(const QSeries& s)
{
    std::ostringstream out;
    out << "# order=";
    if (s.exact()) out << "inf";
    else out << s.order();
    out << " floor=" << s.floor() << '\n';
    s.for_each_term([&](int z, int w, int q, const Coeff& c) {
        out << z << '\t' << w << '\t' << q << '\t' << c.str() << '\n';
    });
    return out.str();
}

}  // namespace qlab
