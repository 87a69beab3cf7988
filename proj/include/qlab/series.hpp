#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qlab/coeff.hpp"

namespace qlab {

// Order of a series that is an exact polynomial (valid at every q-degree).
inline constexpr int kExact = 1 << 28;
// Count value standing for an infinite Pochhammer product.
inline constexpr int kInfinite = -1;

// Truncated series in q with non-negative exponents in z and w. Coefficients
// are known exactly for floor() <= dq <= order(); storage is dense per (dz, dw)
// block, which is an implementation detail: only nonzero terms are observable.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(int order, int floor = 0);

    static QSeries one(int order = kExact);
    static QSeries monomial(const Coeff& c, int dz, int dw, int dq, int order = kExact);
    // Univariate series with the given coefficients at q^0, q^1, ...
    static QSeries from_coeffs(const std::vector<Coeff>& c, int order);

    int floor() const noexcept { return floor_; }
    int order() const noexcept { return order_; }
    bool exact() const noexcept { return order_ >= kExact; }
    int z_extent() const noexcept { return nz_; }
    int w_extent() const noexcept { return nw_; }

    Coeff coeff(int dz, int dw, int dq) const;
    // Terms with dq > order() are dropped; dq < floor() lowers the floor.
    void add_term(int dz, int dw, int dq, const Coeff& c);

    bool is_zero() const;
    std::size_t term_count() const;

    template <class F>
    void for_each_term(F&& f) const
    {
        for (int z = 0; z < nz_; ++z)
            for (int w = 0; w < nw_; ++w) {
                const Coeff* b = block(z, w);
                for (int i = 0; i < len_; ++i)
                    if (!b[i].is_zero()) f(z, w, floor_ + i, b[i]);
            }
    }

    QSeries truncated(int N) const;
    // Coefficient list of the z^0 w^0 part at q^0..q^N; requires N <= order().
    std::vector<Coeff> univariate(int N) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o);
    QSeries operator-() const;
    friend QSeries operator+(QSeries a, const QSeries& b) { a += b; return a; }
    friend QSeries operator-(QSeries a, const QSeries& b) { a -= b; return a; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    QSeries& scale(const Coeff& c);
    // Multiply by z^dz w^dw q^dq (dq may be negative).
    QSeries shifted(int dz, int dw, int dq) const;
    // In-place multiplication by (1 - q^e) and by 1/(1 - q^e), e >= 1.
    void mul_one_minus(int e);
    void div_one_minus(int e);

private:
    friend QSeries substitute_impl(const QSeries&, int, int, int, int, int, int, int);

    Coeff* block(int z, int w) { return data_.data() + (static_cast<std::size_t>(z) * nw_ + w) * len_; }
    const Coeff* block(int z, int w) const { return data_.data() + (static_cast<std::size_t>(z) * nw_ + w) * len_; }
    void reshape(int nz, int nw, int floor, int top);
    void trim();
    int top() const noexcept { return floor_ + len_ - 1; }

    int floor_ = 0;
    int order_ = kExact;
    int nz_ = 0, nw_ = 0, len_ = 0;
    std::vector<Coeff> data_;
};

// z -> z^za w^zw q^zq, w -> z^wz w^ww q^wq, q -> q^m.
struct Subst {
    int za = 1, zw = 0, zq = 0;
    int wz = 0, ww = 1, wq = 0;
    int m = 1;

    static Subst z_shift(int c) { Subst s; s.zq = c; return s; }
    static Subst zw_shift(int c, int d) { Subst s; s.zq = c; s.wq = d; return s; }
    static Subst q_power(int m) { Subst s; s.m = m; return s; }
    static Subst z_to_one() { Subst s; s.za = 0; return s; }
    static Subst w_to_one() { Subst s; s.ww = 0; return s; }
    static Subst w_to_z() { Subst s; s.wz = 1; s.ww = 0; return s; }
};

QSeries substitute(const QSeries& s, const Subst& map);
// Drops every term containing z (z = 0), or w.
QSeries z_zero(const QSeries& s);
QSeries w_zero(const QSeries& s);

QSeries invert(const QSeries& s);
QSeries pow(const QSeries& s, int e);

// prod_{j < count, c + j m <= N} (1 - q^{c + j m}), truncated at N.
QSeries poch(int c, int m, int count, int N);
// 1 / poch(c, m, count, N).
QSeries inv_poch(int c, int m, int count, int N);
// Gaussian binomial in base q^m; zero outside 0 <= k <= n.
QSeries qbin(int n, int k, int m = 1);

struct Mismatch {
    int dz, dw, dq;
    Coeff lhs, rhs;
};

// Lexicographically first (dz, dw, dq) with dq <= up_to where a and b differ.
std::optional<Mismatch> compare(const QSeries& a, const QSeries& b, int up_to);

std::string to_tsv(const QSeries& s);

}  // namespace qlab
