#include "doctest.h"

#include <random>

#include "e510/rational.hpp"

using e510::Rational;

TEST_CASE("small rational arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational(4, 2).is_integer());
    CHECK(Rational(-3, 7).to_string() == "-3/7");
    CHECK(Rational(6).to_string() == "6");
    CHECK(Rational("10/4") == Rational(5, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK_THROWS(Rational("abc"));
}

TEST_CASE("overflow promotes to GMP and demotes back") {
    Rational big = Rational(std::int64_t(1) << 61);
    Rational sq = big * big;
    CHECK(sq.to_mpq() == mpq_class(mpz_class(1) << 122));
    Rational back = sq / big;
    CHECK(back == big);
    CHECK((sq - sq).is_zero());
    Rational frac = Rational(1) / sq;
    CHECK((frac * sq).is_one());
}

TEST_CASE("random arithmetic agrees with mpq") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-(1LL << 40), 1LL << 40);
    for (int it = 0; it < 2000; ++it) {
        long long n1 = dist(rng), d1 = dist(rng), n2 = dist(rng), d2 = dist(rng);
        if (d1 == 0 || d2 == 0) continue;
        Rational a(n1, d1), b(n2, d2);
        mpq_class qa(mpz_class(static_cast<long>(n1)), mpz_class(static_cast<long>(d1)));
        mpq_class qb(mpz_class(static_cast<long>(n2)), mpz_class(static_cast<long>(d2)));
        qa.canonicalize();
        qb.canonicalize();
        Rational acc = a;
        mpq_class qacc = qa;
        for (int k = 0; k < 4; ++k) {
            acc = acc * b + a;
            qacc = qacc * qb + qa;
        }
        CHECK(acc.to_mpq() == qacc);
        CHECK((a < b) == (qa < qb));
        if (!b.is_zero()) CHECK((a / b).to_mpq() == mpq_class(qa / qb));
    }
}
