#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace qlab {

// Exact integer with an int64 fast path. Every operation checks for overflow
// and promotes to GMP; results that fit back into 64 bits are demoted.
class Coeff {
public:
    Coeff() noexcept = default;
    Coeff(long long v) noexcept : small_(v) {}
    Coeff(long v) noexcept : small_(v) {}
    Coeff(int v) noexcept : small_(v) {}
    explicit Coeff(const mpz_class& v);
    static Coeff from_string(const std::string& s);

    Coeff(const Coeff& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
    Coeff(Coeff&&) noexcept = default;
    Coeff& operator=(const Coeff& o);
    Coeff& operator=(Coeff&&) noexcept = default;

    bool is_zero() const noexcept { return !big_ && small_ == 0; }
    bool is_small() const noexcept { return !big_; }
    std::int64_t small_value() const noexcept { return small_; }
    int sign() const noexcept;
    mpz_class to_mpz() const;
    std::string str() const;

    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff& operator*=(const Coeff& o);
    // this += a * b
    void addmul(const Coeff& a, const Coeff& b);
    void negate();

    friend Coeff operator+(Coeff a, const Coeff& b) { a += b; return a; }
    friend Coeff operator-(Coeff a, const Coeff& b) { a -= b; return a; }
    friend Coeff operator*(Coeff a, const Coeff& b) { a *= b; return a; }
    friend Coeff operator-(Coeff a) { a.negate(); return a; }
    friend bool operator==(const Coeff& a, const Coeff& b);
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

private:
    void set_big(mpz_class v);
    void demote();

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

}  // namespace qlab
