#include "doctest.h"

#include <random>

#include "e510/algebra.hpp"
#include "e510/linalg.hpp"
#include "e510/uminus.hpp"

using namespace e510;

namespace {

std::vector<SuperElement> negative_part() {
    std::vector<SuperElement> out;
    for (int c = 1; c <= 5; ++c) out.push_back(SuperElement::partial(c));
    for (int p = 0; p < kPairs; ++p) out.push_back(SuperElement::form(pair_at(p).i, pair_at(p).j));
    return out;
}

std::vector<SuperElement> spanning_set() {
    std::vector<SuperElement> out = negative_part();
    for (int i = 1; i <= 4; ++i) {
        out.push_back(chevalley_e(i));
        out.push_back(chevalley_f(i));
        out.push_back(SuperElement::gl(i, i) - SuperElement::gl(i + 1, i + 1));
    }
    for (const auto& x : g1_basis()) out.push_back(x);
    return out;
}

bool jacobi_ok(const SuperElement& a, const SuperElement& b, const SuperElement& c) {
    try {
        return jacobi_residual(a, b, c).is_zero();
    } catch (const UnsupportedDegree&) {
        return true;  // outside the modeled degrees
    }
}

SparseVector coords50(const SuperElement& x) {
    SparseVector v;
    for (int k = 0; k < 5; ++k)
        for (int p = 0; p < 10; ++p)
            if (!x.g1[k][p].is_zero()) v.emplace_back(k * 10 + p, x.g1[k][p]);
    return v;
}

}  // namespace

TEST_CASE("bracket table examples") {
    CHECK(bracket(SuperElement::form(1, 2), SuperElement::form(3, 4)) == SuperElement::partial(5));
    CHECK(bracket(SuperElement::gl(1, 2), SuperElement::form(2, 3)) == SuperElement::form(1, 3));
    CHECK(bracket(lowest_g1(), SuperElement::partial(5)) == Rational(-1) * SuperElement::form(4, 5));
    CHECK(bracket(lowest_g1(), SuperElement::form(1, 2)) == SuperElement::gl(5, 3));
    CHECK(bracket(SuperElement::gl(4, 5), SuperElement::form(4, 5)).is_zero());
    CHECK(bracket(SuperElement::gl(1, 2), SuperElement::partial(1)) == Rational(-1) * SuperElement::partial(2));
    CHECK_THROWS_AS(bracket(lowest_g1(), lowest_g1()), UnsupportedDegree);
}

TEST_CASE("generator parsing") {
    CHECK(parse_generator("x5*d45") == lowest_g1());
    CHECK(parse_generator("p3") == SuperElement::partial(3));
    CHECK(parse_generator("d12") == SuperElement::form(1, 2));
    CHECK(parse_generator("d21") == Rational(-1) * SuperElement::form(1, 2));
    CHECK(parse_generator("E2") == SuperElement::gl(2, 3));
    CHECK(parse_generator("x1*p2 - 1/2 F1") == SuperElement::gl(1, 2) - Rational(1, 2) * SuperElement::gl(2, 1));
    CHECK_THROWS(parse_generator("q7"));
    CHECK(parse_generator("x5*d45").degree() == 1);
    CHECK(parse_generator("p1").degree() == -2);
}

TEST_CASE("g1 basis") {
    const auto& basis = g1_basis();
    CHECK(basis.size() == 40);
    CHECK(lowest_g1().g1_closed());
    CHECK_FALSE(SuperElement::linear_form(1, 2, 3).g1_closed());
    SparseRationalMatrix m(40, 50);
    for (int i = 0; i < 40; ++i) {
        CHECK(basis[i].g1_closed());
        m.set_row(i, coords50(basis[i]));
    }
    CHECK(rank(m) == 40);
}

TEST_CASE("g1 is a g0-module generated by its lowest weight vector") {
    std::vector<SuperElement> ops;
    for (int i = 1; i <= 4; ++i) {
        ops.push_back(chevalley_e(i));
        ops.push_back(chevalley_f(i));
    }
    for (const auto& x : g1_basis())
        for (const auto& e : ops) {
            SuperElement y = bracket(e, x);
            CHECK(y.g1_closed());
            CHECK_FALSE(y.has_degree(0));
        }
    // raising closure of x5 d45
    std::vector<SuperElement> found{lowest_g1()};
    std::vector<SparseVector> rows{coords50(lowest_g1())};
    int r = 1;
    for (std::size_t k = 0; k < found.size(); ++k)
        for (int i = 1; i <= 4; ++i) {
            SuperElement y = bracket(chevalley_e(i), found[k]);
            if (y.is_zero()) continue;
            rows.push_back(coords50(y));
            SparseRationalMatrix m(static_cast<int>(rows.size()), 50);
            for (std::size_t j = 0; j < rows.size(); ++j) m.set_row(static_cast<int>(j), rows[j]);
            int nr = rank(m);
            if (nr > r) {
                r = nr;
                found.push_back(y);
            } else {
                rows.pop_back();
            }
        }
    CHECK(r == 40);
}

TEST_CASE("Jacobi identity examples") {
    CHECK(jacobi_residual(SuperElement::partial(1), SuperElement::form(1, 2), SuperElement::form(3, 4)).is_zero());
    CHECK(jacobi_residual(SuperElement::gl(1, 2), SuperElement::form(2, 3), SuperElement::form(4, 5)).is_zero());
    CHECK(jacobi_residual(lowest_g1(), SuperElement::partial(4), SuperElement::form(1, 2)).is_zero());
}

TEST_CASE("Jacobi identity: all triples with two negative-degree entries") {
    auto neg = negative_part();
    auto all = spanning_set();
    int failures = 0;
    for (const auto& a : neg)
        for (const auto& b : neg)
            for (const auto& c : all) {
                if (!jacobi_ok(a, b, c)) ++failures;
                if (!jacobi_ok(a, c, b)) ++failures;
                if (!jacobi_ok(c, a, b)) ++failures;
            }
    CHECK(failures == 0);
}

TEST_CASE("Jacobi identity: random triples") {
    auto all = spanning_set();
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    int failures = 0;
    for (int it = 0; it < 10000; ++it)
        if (!jacobi_ok(all[pick(rng)], all[pick(rng)], all[pick(rng)])) ++failures;
    CHECK(failures == 0);
}
