#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "e510/rational.hpp"
#include "e510/sl5.hpp"

namespace e510 {

class UnsupportedDegree : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Element of g_{-2} + g_{-1} + g_0 + g_1.
//   m2[c-1]       coefficient of d_c (partials)
//   m1[p]         coefficient of d_p (two-forms, pair index p)
//   g0[a-1][b-1]  coefficient of x_a d_b (gl5; true g0 elements are traceless)
//   g1[k-1][p]    coefficient of x_k d_p (linear two-forms; true g1 elements are closed)
struct SuperElement {
    std::array<Rational, 5> m2{};
    std::array<Rational, 10> m1{};
    std::array<std::array<Rational, 5>, 5> g0{};
    std::array<std::array<Rational, 10>, 5> g1{};

    static SuperElement partial(int c);
    static SuperElement form(int i, int j);           // d_ij, antisymmetric in i,j
    static SuperElement gl(int a, int b);             // x_a d_b
    static SuperElement linear_form(int k, int i, int j);  // x_k d_ij

    bool is_zero() const;
    // Degrees with a nonzero component.
    bool has_degree(int deg) const;
    // Returns the unique degree of a homogeneous nonzero element; throws otherwise.
    int degree() const;
    int parity() const { return degree() % 2 != 0 ? 1 : 0; }
    SuperElement component(int deg) const;

    Rational trace() const;
    bool g1_closed() const;

    SuperElement& operator+=(const SuperElement& o);
    SuperElement& operator*=(const Rational& c);
    friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
    friend SuperElement operator-(SuperElement a, SuperElement b) {
        b *= Rational(-1);
        return a += b;
    }
    friend SuperElement operator*(const Rational& c, SuperElement a) { return a *= c; }
    friend bool operator==(const SuperElement& a, const SuperElement& b);

    std::string to_text() const;
};

// Super bracket; throws UnsupportedDegree when a degree-2 component would arise.
SuperElement bracket(const SuperElement& a, const SuperElement& b);
SuperElement jacobi_residual(const SuperElement& a, const SuperElement& b, const SuperElement& c);

// The 40 closed linear two-forms: x_i d_ij and x_j d_ij for each pair, and for each
// triple a<b<c the combinations x_a d_bc + x_b d_ac and x_b d_ac + x_c d_ab.
const std::vector<SuperElement>& g1_basis();
SuperElement lowest_g1();  // x5 d45

// Chevalley generators E_i = x_i d_{i+1}, F_i = x_{i+1} d_i.
SuperElement chevalley_e(int i);
SuperElement chevalley_f(int i);

// Parses "x5*d45", "x5 d45", "p3", "d12", "E2", "F1", "x1*p2" and signed sums of them.
SuperElement parse_generator(const std::string& s);

}  // namespace e510
