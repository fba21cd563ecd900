#include "e510/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace e510 {

namespace {

constexpr std::int64_t kLimit = std::int64_t(1) << 62;

bool fits(__int128 v) { return v < kLimit && v > -kLimit; }

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_i64(std::int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

}  // namespace

Rational::Rational(long v) : Rational(static_cast<long long>(v)) {}

Rational::Rational(long long v) {
    if (fits(v)) {
        num_ = v;
    } else {
        set_big(mpq_class(mpz_from_i64(v)));
    }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    set_small128(num, den);
}

Rational::Rational(const mpq_class& q) { set_big(q); }

Rational::Rational(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    set_big(q);
}

void Rational::set_big(mpq_class q) {
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
        long n = mpz_get_si(q.get_num_mpz_t());
        long d = mpz_get_si(q.get_den_mpz_t());
        if (fits(n) && fits(d)) {
            num_ = n;
            den_ = d;
            big_.reset();
            return;
        }
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::set_small128(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    __int128 g = gcd128(n, d);
    if (g != 1) {
        n /= g;
        d /= g;
    }
    if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    // Build the mpq from the two 128-bit halves.
    auto to_mpz = [](__int128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
        mpz_class hi, lo;
        mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
        mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & ~std::uint64_t(0)));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    };
    mpq_class q(to_mpz(n), to_mpz(d));
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(den_); }

std::string Rational::to_string() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.set_big(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (o.num_ == 0) return *this;
        if (num_ == 0) {
            num_ = o.num_;
            den_ = o.den_;
            return *this;
        }
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t s = num_ + o.num_;  // |s| < 2^63
            if (fits(s)) {
                num_ = s;
                return *this;
            }
            set_small128(s, 1);
            return *this;
        }
        std::int64_t g = gcd64(den_, o.den_);
        __int128 n = static_cast<__int128>(num_) * (o.den_ / g) + static_cast<__int128>(o.num_) * (den_ / g);
        __int128 d = static_cast<__int128>(den_) * (o.den_ / g);
        set_small128(n, d);
        return *this;
    }
    set_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (den_ == 1 && o.den_ == 1) {
            __int128 p = static_cast<__int128>(num_) * o.num_;
            if (fits(p)) {
                num_ = static_cast<std::int64_t>(p);
                return *this;
            }
            set_small128(p, 1);
            return *this;
        }
        std::int64_t g1 = gcd64(num_, o.den_);
        std::int64_t g2 = gcd64(o.num_, den_);
        __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
        __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
        set_small128(n, d);
        return *this;
    }
    set_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_ && !o.big_) {
        if (num_ == 0) return *this;
        std::int64_t g1 = gcd64(num_, o.num_);
        std::int64_t g2 = gcd64(den_, o.den_);
        __int128 n = static_cast<__int128>(num_ / g1) * (o.den_ / g2);
        __int128 d = static_cast<__int128>(den_ / g2) * (o.num_ / g1);
        set_small128(n, d);
        return *this;
    }
    set_big(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    // Both forms are canonical, so a big value never equals a small one.
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational gcd_integer(const Rational& a, const Rational& b) {
    if (!a.is_integer() || !b.is_integer()) throw std::domain_error("gcd_integer: non-integer argument");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    return Rational(mpq_class(g));
}

Rational lcm_integer(const Rational& a, const Rational& b) {
    if (!a.is_integer() || !b.is_integer()) throw std::domain_error("lcm_integer: non-integer argument");
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    return Rational(mpq_class(l));
}

}  // namespace e510
