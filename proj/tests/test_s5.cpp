#include "doctest.h"

#include <set>

#include "e510/linalg.hpp"
#include "e510/s5.hpp"

using namespace e510;

TEST_CASE("degree-2 fields are divergence free and span a 70-dimensional space") {
    const auto& fields = s5_degree2_fields();
    // index of x^alpha d_k among the 75 quadratic monomial fields
    std::map<std::pair<std::array<int, 5>, int>, int> col;
    for (const VectorField& X : fields) {
        CHECK(X.degree() == 2);
        for (int m = 0; m < 5; ++m) {
            std::array<int, 5> x{};
            x[m] = 1;
            CHECK(X.divergence_coeff(x).is_zero());
        }
        for (const FieldTerm& t : X.terms) col.emplace(std::make_pair(t.x, t.k), static_cast<int>(col.size()));
    }
    SparseRationalMatrix A(static_cast<int>(fields.size()), static_cast<int>(col.size()));
    for (std::size_t r = 0; r < fields.size(); ++r)
        for (const FieldTerm& t : fields[r].terms) A.add(static_cast<int>(r), col.at({t.x, t.k}), t.c);
    CHECK(rank(A) == 70);
}

TEST_CASE("field action is a representation on low degrees") {
    // [e_12, X] acting equals e_12 X - X e_12 on a degree-4 vector of M(1,0,0,0)
    S5Verma M(Weight(1, 0, 0, 0));
    VermaElement w = M.parse("p1 p2 | x3 + p5^2 | x1 - p3 p4 | x4");
    VectorField e = linear_field(1, 2), f = linear_field(2, 1);
    VermaElement lhs = M.act(e, M.act(f, w)) - M.act(f, M.act(e, w));
    VermaElement rhs = M.act(linear_field(1, 1), w) - M.act(linear_field(2, 2), w);
    CHECK(lhs == rhs);
    // constant fields commute with each other
    VectorField d1 = linear_field(1, 1);
    d1.terms[0].x = {0, 0, 0, 0, 0};
    VectorField d3 = d1;
    d3.terms[0].k = 3;
    CHECK(M.act(d1, M.act(d3, w)) == M.act(d3, M.act(d1, w)));
}

TEST_CASE("Rudakov vectors are singular") {
    auto rs = rudakov_vectors();
    REQUIRE(rs.size() == 6);
    for (const RudakovVector& r : rs) {
        INFO(r.name);
        CHECK(s5_is_singular(r.vector, r.lambda));
    }
    CHECK(rs[0].vector.degrees() == std::vector<int>{2});
    CHECK(rs[5].vector.degrees() == std::vector<int>{4});
    CHECK(rs[1].vector.size() == 4);
    S5Verma M0(Weight(0, 0, 0, 0));
    CHECK_FALSE(s5_is_singular(M0.parse("p1 | 1"), Weight(0, 0, 0, 0)));
    S5Verma M4(Weight(0, 0, 0, 1));
    CHECK_FALSE(s5_is_singular(M4.parse("p4 | x5* + p5 | x4*"), Weight(0, 0, 0, 1)));
}

TEST_CASE("exhaustive search finds exactly R1 to R6") {
    auto rs = rudakov_vectors();
    std::set<std::string> found;
    int total = 0;
    for (const Weight& l : {Weight(0, 0, 0, 0), Weight(1, 0, 0, 0), Weight(0, 1, 0, 0), Weight(0, 0, 1, 0), Weight(0, 0, 0, 1)})
        for (int d : {2, 4})
            for (const SingularCertificate& c : s5_find_singular_vectors(l, d)) {
                CHECK(c.kernel_dim == 1);
                ++total;
                for (const RudakovVector& r : rs)
                    if (r.lambda == l && proportional(c.vectors[0], r.vector)) found.insert(r.name);
            }
    CHECK(total == 6);
    CHECK(found == std::set<std::string>{"R1", "R2", "R3", "R4", "R5", "R6"});

    auto c = s5_find_singular_vectors(Weight(1, 0, 0, 0), 4);
    REQUIRE(c.size() == 1);
    CHECK(s5_certificate_json(c[0])["algebra"] == "S5");
    CHECK_THROWS_AS(s5_find_singular_vectors(Weight(0, 0, 0, 0), 3), std::domain_error);
}
