#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "e510/search.hpp"
#include "e510/verma.hpp"

namespace e510 {

// Verma modules C[d1..d5] (x) F(lambda) over S5, the even part.  Elements reuse
// VermaElement restricted to monomials without forms (degree 2|M|).

// Polynomial vector field sum c x^alpha d_k with |alpha| <= 2.
struct FieldTerm {
    Rational c;
    std::array<int, 5> x{};
    int k = 1;
};
struct VectorField {
    std::vector<FieldTerm> terms;
    int degree() const;  // 2|alpha| - 2, all terms equal
    Rational divergence_coeff(const std::array<int, 5>& x) const;
    std::string to_text() const;
};

// x_a d_b, the sl5 generator e_ab.
VectorField linear_field(int a, int b);
// Divergence-free quadratic fields spanning (S5)_2 (70-dimensional).
const std::vector<VectorField>& s5_degree2_fields();

class S5Verma {
public:
    explicit S5Verma(const Weight& lambda);
    const Weight& lambda() const { return lambda_; }
    const VermaModule& module() const { return *M_; }
    // Action of a field of degree -2, 0 or 2.
    VermaElement act(const VectorField& X, const VermaElement& w) const;
    // Pure d-monomials of |M| = k tensor F, as term keys.
    std::vector<std::uint64_t> basis(int k) const;
    VermaElement parse(const std::string& text) const;  // "p4 | x5* - p5 | x4*"

private:
    Weight lambda_;
    std::shared_ptr<VermaModule> M_;
};

// e_i w = 0 for i = 1..4, X w = 0 on (S5)_2, w of positive degree.
bool s5_is_singular(const VermaElement& w, const Weight& lambda);

struct RudakovVector {
    std::string name;  // "R1" .. "R6"
    Weight lambda;
    VermaElement vector;
};
std::vector<RudakovVector> rudakov_vectors();

// Kernel of all the singularity conditions on the degree-d space, split by weight.
std::vector<SingularCertificate> s5_find_singular_vectors(const Weight& lambda, int degree);
nlohmann::json s5_certificate_json(const SingularCertificate& c);

}  // namespace e510
