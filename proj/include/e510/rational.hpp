#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace e510 {

// Exact rational number.  Values whose numerator and denominator fit in
// 62 bits are kept inline; everything else lives in an mpq_class.  Both
// representations are always fully reduced with a positive denominator,
// and a value is demoted back to the inline form whenever it fits.
class Rational {
public:
    Rational() = default;
    Rational(int v) : num_(v) {}
    Rational(long v);
    Rational(long long v);
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& q);
    explicit Rational(const std::string& text);

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    std::string to_string() const;  // "p/q", or "p" when q == 1
    double to_double() const;

    // Numerator/denominator as exact integers.
    mpz_class numerator() const;
    mpz_class denominator() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void set_big(mpq_class q);
    void set_small128(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Greatest common divisor / least common multiple of integer-valued rationals.
Rational gcd_integer(const Rational& a, const Rational& b);
Rational lcm_integer(const Rational& a, const Rational& b);

}  // namespace e510
