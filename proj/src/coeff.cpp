#include "qlab/coeff.hpp"

#include <stdexcept>

namespace qlab {

namespace {

mpz_class from_int128(__int128 v)
{
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    mpz_class r = hi << 64;
    r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    return neg ? mpz_class(-r) : r;
}

bool fits64(__int128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

}  // namespace

Coeff::Coeff(const mpz_class& v) { set_big(v); }

Coeff Coeff::from_string(const std::string& s)
{
    mpz_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad integer: " + s);
    return Coeff(v);
}

Coeff& Coeff::operator=(const Coeff& o)
{
    if (this == &o) return *this;
    small_ = o.small_;
    if (o.big_) {
        if (big_) *big_ = *o.big_;
        else big_ = std::make_unique<mpz_class>(*o.big_);
    } else {
        big_.reset();
    }
    return *this;
}

void Coeff::set_big(mpz_class v)
{
    if (v.fits_slong_p()) {
        small_ = v.get_si();
        big_.reset();
    } else {
        small_ = 0;
        if (big_) *big_ = std::move(v);
        else big_ = std::make_unique<mpz_class>(std::move(v));
    }
}

void Coeff::demote()
{
    if (big_ && big_->fits_slong_p()) {
        small_ = big_->get_si();
        big_.reset();
    }
}

int Coeff::sign() const noexcept
{
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

mpz_class Coeff::to_mpz() const
{
    if (big_) return *big_;
    return mpz_class(static_cast<long>(small_));
}

std::string Coeff::str() const
{
    if (big_) return big_->get_str();
    return std::to_string(small_);
}

Coeff& Coeff::operator+=(const Coeff& o)
{
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        set_big(from_int128(static_cast<__int128>(small_) + o.small_));
        return *this;
    }
    set_big(to_mpz() + o.to_mpz());
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o)
{
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        set_big(from_int128(static_cast<__int128>(small_) - o.small_));
        return *this;
    }
    set_big(to_mpz() - o.to_mpz());
    return *this;
}

Coeff& Coeff::operator*=(const Coeff& o)
{
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        set_big(from_int128(static_cast<__int128>(small_) * o.small_));
        return *this;
    }
    set_big(to_mpz() * o.to_mpz());
    return *this;
}

void Coeff::addmul(const Coeff& a, const Coeff& b)
{
    if (!big_ && !a.big_ && !b.big_) {
        __int128 r = static_cast<__int128>(a.small_) * b.small_ + small_;
        if (fits64(r)) {
            small_ = static_cast<std::int64_t>(r);
            return;
        }
        set_big(from_int128(r));
        return;
    }
    mpz_class acc = to_mpz();
    mpz_addmul(acc.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    set_big(std::move(acc));
}

void Coeff::negate()
{
    if (!big_) {
        if (small_ != INT64_MIN) {
            small_ = -small_;
            return;
        }
        set_big(-mpz_class(static_cast<long>(small_)));
        return;
    }
    *big_ = -*big_;
    demote();
}

bool operator==(const Coeff& a, const Coeff& b)
{
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return a.to_mpz() == b.to_mpz();
}

}  // namespace qlab
