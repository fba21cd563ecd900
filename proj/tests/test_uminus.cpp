#include "doctest.h"

#include <random>

#include "e510/uminus.hpp"

using namespace e510;

namespace {

long long count_monomials(int d) {
    // direct enumeration, independent of the binomial formula
    long long n = 0;
    for (int mask = 0; mask < 1024; ++mask) {
        int h = __builtin_popcount(mask);
        for (int a = 0; 2 * a + h <= d; ++a)
            for (int b = 0; 2 * (a + b) + h <= d; ++b)
                for (int c = 0; 2 * (a + b + c) + h <= d; ++c)
                    for (int e = 0; 2 * (a + b + c + e) + h <= d; ++e) {
                        int rest = d - h - 2 * (a + b + c + e);
                        if (rest >= 0 && rest % 2 == 0) ++n;
                    }
    }
    return n;
}

PbwMonomial random_monomial(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    const auto& all = monomials_of_degree(d);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

}  // namespace

TEST_CASE("pair table and epsilon") {
    CHECK(pair_index(1, 2) == 0);
    CHECK(pair_index(4, 5) == 9);
    CHECK(pair_name(7) == "34");
    int t = 0;
    CHECK(epsilon_t(pair_index(1, 2), pair_index(3, 4), &t) == 1);
    CHECK(t == 5);
    CHECK(epsilon_t(pair_index(3, 4), pair_index(1, 2), &t) == 1);
    CHECK(epsilon_t(pair_index(1, 3), pair_index(2, 4), &t) == -1);
    CHECK(epsilon_t(pair_index(1, 2), pair_index(1, 3), &t) == 0);
    CHECK(epsilon_t(pair_index(4, 5), pair_index(1, 2), &t) == 1);
    CHECK(t == 3);
}

TEST_CASE("degree and height") {
    CHECK(parse_monomial("p1 p2").degree() == 4);
    CHECK(parse_monomial("p1 p2").height() == 0);
    CHECK(parse_monomial("d12 d13").degree() == 2);
    CHECK(parse_monomial("d12 d13").height() == 2);
    PbwMonomial m = parse_monomial("p5 d23 d24 d25");
    CHECK(m.degree() == 5);
    CHECK(m.height() == 3);
    CHECK(to_text(parse_monomial("p1^2 p3 d12 d34")) == "p1^2 p3 d12 d34");
    CHECK(to_text(PbwMonomial()) == "1");
}

TEST_CASE("normal ordering examples") {
    CHECK(parse_uminus("d34 d12") == parse_uminus("-d12 d34 + p5"));
    CHECK(parse_uminus("d12 d12").is_zero());
    CHECK(pbw_product(parse_uminus("d12 d34"), parse_uminus("d12")) == parse_uminus("p5 d12"));
    CHECK(parse_uminus("d21") == parse_uminus("-d12"));
    CHECK(parse_uminus("d13 d12") == parse_uminus("-d12 d13"));
}

TEST_CASE("super-commutation defect and squares") {
    for (int p = 0; p < kPairs; ++p) {
        UMinusElement dp(PbwMonomial({}, static_cast<std::uint16_t>(1u << p)));
        CHECK(pbw_product(dp, dp).is_zero());
        for (int q = p + 1; q < kPairs; ++q) {
            UMinusElement dq(PbwMonomial({}, static_cast<std::uint16_t>(1u << q)));
            UMinusElement anti = pbw_product(dp, dq) + pbw_product(dq, dp);
            int t = 0;
            int e = epsilon_t(p, q, &t);
            UMinusElement expect;
            if (e) expect = Rational(e) * UMinusElement::partial(t);
            CHECK(anti == expect);
        }
    }
}

TEST_CASE("associativity and centrality on random monomials") {
    std::mt19937 rng(2024);
    for (int it = 0; it < 500; ++it) {
        UMinusElement a(random_monomial(rng, 6)), b(random_monomial(rng, 6)), c(random_monomial(rng, 6));
        CHECK(pbw_product(pbw_product(a, b), c) == pbw_product(a, pbw_product(b, c)));
    }
    for (int it = 0; it < 100; ++it) {
        UMinusElement u(random_monomial(rng, 7));
        for (int i = 1; i <= 5; ++i) {
            UMinusElement p = UMinusElement::partial(i);
            CHECK(pbw_product(p, u) == pbw_product(u, p));
        }
    }
}

TEST_CASE("dimension of graded pieces") {
    CHECK(uminus_dimension(1) == 10);
    CHECK(uminus_dimension(2) == 50);
    CHECK(uminus_dimension(7) == 3530);
    CHECK(uminus_dimension(11) == 20330);
    for (int d = 0; d <= 12; ++d) {
        CHECK(static_cast<long long>(monomials_of_degree(d).size()) == uminus_dimension(d));
        CHECK(count_monomials(d) == uminus_dimension(d));
    }
}

TEST_CASE("monomial order contract") {
    // degree first, then partials lex, then forms lex
    CHECK(parse_monomial("d45") < parse_monomial("p1"));
    CHECK(parse_monomial("d12 d13") < parse_monomial("p1"));  // same degree, partials (0,..) < (1,..)
    CHECK(parse_monomial("p2 d12") < parse_monomial("p1 d12"));  // (0,1,..) < (1,0,..)
    CHECK(parse_monomial("d12 d13") < parse_monomial("d12 d14"));
    CHECK(parse_monomial("d12 d45") < parse_monomial("d13 d14"));
    const auto& m3 = monomials_of_degree(3);
    for (std::size_t i = 1; i < m3.size(); ++i) CHECK(m3[i - 1] < m3[i]);
}
