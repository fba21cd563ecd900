#include "doctest.h"

#include "e510/sl5.hpp"

using namespace e510;

namespace {

std::map<int, Rational> unit(int i) { return {{i, Rational(1)}}; }

// dim via the hook-content formula on the partition of lambda (rank 5), an
// oracle independent of the root-system product
long long hook_content_dim(const Weight& w) {
    int parts[5];
    parts[4] = 0;
    for (int i = 3; i >= 0; --i) parts[i] = parts[i + 1] + w.c[i];
    mpq_class r = 1;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < parts[i]; ++j) {
            int arm = parts[i] - j - 1;
            int leg = 0;
            for (int k = i + 1; k < 5; ++k)
                if (parts[k] > j) ++leg;
            r *= mpq_class(5 + j - i, arm + leg + 1);
        }
    r.canonicalize();
    return r.get_num().get_si();
}

}  // namespace

TEST_CASE("weights") {
    Weight w(1, 2, 0, 3);
    CHECK(w.lambda(1, 3) == 3);
    CHECK(w.lambda(2, 5) == 5);
    CHECK(parse_weight("0,0,0,1") == Weight(0, 0, 0, 1));
    CHECK(parse_weight("(2,0,0,2)").to_string() == "2,0,0,2");
    CHECK(dual_weight(Weight(1, 0, 0, 0)) == Weight(0, 0, 0, 1));
    CHECK(dual_weight(Weight(2, 0, 0, 2)) == Weight(2, 0, 0, 2));
    CHECK_THROWS(parse_weight("1,2,3"));
}

TEST_CASE("Weyl dimension") {
    CHECK(weyl_dim(Weight(0, 0, 0, 1)) == 5);
    CHECK(weyl_dim(Weight(0, 0, 0, 3)) == 35);
    CHECK(weyl_dim(Weight(2, 0, 0, 0)) == 15);
    CHECK(weyl_dim(Weight(1, 1, 0, 0)) == 40);
    CHECK_THROWS(weyl_dim(Weight(-1, 0, 0, 0)));
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (int d = 0; d <= 3; ++d) CHECK(weyl_dim(Weight(a, b, c, d)) == hook_content_dim(Weight(a, b, c, d)));
}

TEST_CASE("irrep construction matches Weyl dimension") {
    CHECK(IrrepModule(Weight(0, 0, 0, 0)).dim() == 1);
    CHECK(IrrepModule(Weight(1, 0, 0, 0)).dim() == 5);
    CHECK(IrrepModule(Weight(1, 1, 0, 0)).dim() == 40);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (int d = 0; d <= 2; ++d) {
                    Weight w(a, b, c, d);
                    if (weyl_dim(w) > 300) continue;
                    CHECK(irrep(w)->dim() == weyl_dim(w));
                }
    CHECK_THROWS_AS(IrrepModule(Weight(0, -1, 0, 0)), std::domain_error);
}

TEST_CASE("generator action examples") {
    auto F = irrep(Weight(0, 0, 0, 1));
    CHECK(F->act(1, 2, 0).empty());  // hwv x5*
    AmbientPoly x1s = parse_ambient("x1*");
    auto c = F->coordinates(x1s);
    CHECK(F->to_ambient(F->act(1, 2, c)) == parse_ambient("-x2*"));
    auto V = irrep(Weight(1, 0, 0, 0));
    CHECK(F->to_ambient(F->act(1, 2, c)) == parse_ambient("-f2"));
    CHECK(V->to_ambient(V->act(1, 2, V->coordinates(parse_ambient("x2")))) == parse_ambient("x1"));
    CHECK(parse_ambient("x53*") == parse_ambient("-x35*"));
    CHECK_THROWS_AS(V->coordinates(parse_ambient("x1^2")), std::domain_error);
}

TEST_CASE("Serre-type relations and weight shifts") {
    for (Weight w : {Weight(1, 1, 0, 0), Weight(0, 1, 1, 0), Weight(2, 0, 0, 1), Weight(0, 0, 2, 1)}) {
        auto F = irrep(w);
        for (int v = 0; v < F->dim(); ++v) {
            for (int i = 1; i <= 4; ++i)
                for (int j = 1; j <= 4; ++j) {
                    auto ef = F->act(i, i + 1, F->act(j + 1, j, unit(v)));
                    auto fe = F->act(j + 1, j, F->act(i, i + 1, unit(v)));
                    for (auto& [k, x] : fe) ef[k] -= x;
                    std::map<int, Rational> lhs;
                    for (auto& [k, x] : ef)
                        if (!x.is_zero()) lhs[k] = x;
                    std::map<int, Rational> rhs;
                    if (i == j) {
                        auto h1 = F->act(i, i, unit(v));
                        auto h2 = F->act(i + 1, i + 1, unit(v));
                        for (auto& [k, x] : h1) rhs[k] += x;
                        for (auto& [k, x] : h2) rhs[k] -= x;
                        for (auto it = rhs.begin(); it != rhs.end();) it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
                    }
                    CHECK(lhs == rhs);
                }
            for (int a = 1; a <= 5; ++a)
                for (int b = 1; b <= 5; ++b)
                    for (const auto& [k, x] : F->act(a, b, v)) {
                        GlWeight expect = F->gl_weight(v);
                        expect[a - 1] += 1;
                        expect[b - 1] -= 1;
                        CHECK(F->gl_weight(k) == expect);
                    }
        }
    }
}

TEST_CASE("highest weight vectors") {
    auto V = irrep(Weight(1, 0, 0, 0));
    auto h = highest_weight_vectors(*V, Weight(1, 0, 0, 0));
    REQUIRE(h.size() == 1);
    CHECK(V->to_ambient(h[0]) == parse_ambient("x1"));
    CHECK(highest_weight_vectors(*V, Weight(0, 1, 0, 0)).empty());
    auto L = irrep(Weight(0, 1, 0, 0));
    auto hl = highest_weight_vectors(*L, Weight(0, 1, 0, 0));
    REQUIRE(hl.size() == 1);
    CHECK(L->to_ambient(hl[0]) == parse_ambient("x12"));
    for (Weight w : {Weight(1, 1, 0, 0), Weight(1, 0, 0, 1), Weight(0, 0, 1, 2)})
        CHECK(highest_weight_vectors(*irrep(w), w).size() == 1);
    CHECK(irrep(Weight(1, 2, 0, 1))->dim() == irrep(Weight(1, 0, 2, 1))->dim());
}

TEST_CASE("Fischer projection is equivariant") {
    // x1 x45* lies in C^5 (x) L2(C^5)* which contains F(1,0,1,0) plus a copy of C^5*.
    auto F = irrep(Weight(1, 0, 1, 0));
    std::vector<AmbientPoly> samples = {parse_ambient("x1 x45*"), parse_ambient("x2 x12*"),
                                        parse_ambient("x3 x34* + 2 x5 x45*"), parse_ambient("x1 x12*")};
    for (const AmbientPoly& t : samples) {
        auto pt = F->project(t);
        for (int a = 1; a <= 5; ++a)
            for (int b = 1; b <= 5; ++b) {
                auto lhs = F->project(act_ambient(a, b, t));
                auto rhs = F->act(a, b, pt);
                CHECK(lhs == rhs);
            }
    }
    // members project to themselves
    for (int v = 0; v < F->dim(); ++v) CHECK(F->project(F->vector(v)) == unit(v));
}
