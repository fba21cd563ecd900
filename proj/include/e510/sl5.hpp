#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "e510/rational.hpp"

namespace e510 {

// sl5 weight in fundamental coordinates (l12, l23, l34, l45).
struct Weight {
    std::array<int, 4> c{};

    Weight() = default;
    Weight(int a, int b, int c3, int d) : c{a, b, c3, d} {}
    explicit Weight(const std::array<int, 4>& v) : c(v) {}

    bool dominant() const { return c[0] >= 0 && c[1] >= 0 && c[2] >= 0 && c[3] >= 0; }
    int lambda(int i, int j) const;  // l_ij = sum_{k=i}^{j-1} l_{k,k+1}
    int sum() const { return c[0] + c[1] + c[2] + c[3]; }
    std::string to_string() const;  // "a,b,c,d"

    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.c != b.c; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }
    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);
};

using GlWeight = std::array<int, 5>;
Weight to_sl(const GlWeight& w);
Weight parse_weight(const std::string& s);
Weight dual_weight(const Weight& w);
long long weyl_dim(const Weight& w);

// Generating symbols of the ambient space, numbered 0..29:
//   0..4   x_i
//   5..14  x_ij   (pair index p, see uminus.hpp)
//   15..24 x_ij*
//   25..29 x_i*
constexpr int kAmbientVars = 30;
int var_x(int i);
int var_x2(int i, int j);       // requires i<j
int var_xs2(int i, int j);      // requires i<j
int var_xs(int i);
std::string var_name(int v);    // "x1", "x12", "x12*", "x1*"

using AmbientMonomial = std::array<std::uint8_t, kAmbientVars>;
using AmbientPoly = std::map<AmbientMonomial, Rational>;

void poly_add(AmbientPoly& p, const AmbientMonomial& m, const Rational& c);
void poly_add(AmbientPoly& p, const AmbientPoly& q, const Rational& c);
GlWeight ambient_weight(const AmbientMonomial& m);
std::string ambient_text(const AmbientMonomial& m);  // "1" for the unit
std::string poly_text(const AmbientPoly& p);
// Parses "x1^2 x45* f5" style products (f_i is an alias for x_i*).
// Reversed indices pick up a sign.  Returns the monomial and that sign.
std::pair<AmbientMonomial, int> parse_ambient_monomial(const std::string& s);
AmbientPoly parse_ambient(const std::string& s);

// gl5 generator e_ab = x_a d_b acting on the ambient polynomial ring as a derivation.
AmbientPoly act_ambient(int a, int b, const AmbientPoly& p);

// Incremental echelon form inside one weight space of an ambient polynomial space;
// keeps track of how every reduced row is expressed in the inserted vectors.
class AmbientSolver {
public:
    // Returns true and the new index when v is independent of earlier vectors.
    bool insert(const AmbientPoly& v);
    // Coordinates of v in the inserted vectors; false when v is outside the span.
    bool coordinates(const AmbientPoly& v, std::map<int, Rational>& out) const;
    int size() const { return count_; }

private:
    void reduce(AmbientPoly& r, std::map<int, Rational>& combo) const;

    struct Row {
        AmbientPoly poly;
        AmbientMonomial pivot;
        std::map<int, Rational> combo;  // poly = sum combo[j] * inserted_j
    };
    std::vector<Row> rows_;
    int count_ = 0;
};

using SparseColumn = std::vector<std::pair<int, Rational>>;

// Irreducible sl5-module F(lambda) realized inside the ambient tensor space.
class IrrepModule {
public:
    explicit IrrepModule(const Weight& lambda);

    const Weight& highest_weight() const { return lambda_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const AmbientPoly& vector(int i) const { return basis_[i]; }
    const GlWeight& gl_weight(int i) const { return gl_weights_[i]; }
    Weight weight(int i) const { return to_sl(gl_weights_[i]); }
    // (parent, i): basis vector = f_i applied to basis vector parent; (-1,0) for the hwv.
    std::pair<int, int> lowering(int i) const { return lowering_[i]; }

    // Column i of the matrix of e_ab (a,b in 1..5, a == b allowed).
    const SparseColumn& act(int a, int b, int i) const { return action_[(a - 1) * 5 + (b - 1)][i]; }
    // Action of e_ab on a coordinate vector.
    std::map<int, Rational> act(int a, int b, const std::map<int, Rational>& v) const;

    const std::vector<int>& indices_of_weight(const Weight& w) const;

    // Exact coordinates of an ambient polynomial lying in F; throws std::domain_error otherwise.
    std::map<int, Rational> coordinates(const AmbientPoly& p) const;
    bool contains(const AmbientPoly& p) const;
    // Orthogonal projection onto F for the Fischer product <x^a, x^b> = delta_ab a!.
    std::map<int, Rational> project(const AmbientPoly& p) const;

    AmbientPoly to_ambient(const std::map<int, Rational>& coords) const;
    std::string basis_text(int i) const;  // compact label of basis vector i
    std::string to_json() const;

private:
    Weight lambda_;
    std::vector<AmbientPoly> basis_;
    std::vector<GlWeight> gl_weights_;
    std::vector<std::pair<int, int>> lowering_;
    std::map<Weight, std::vector<int>> by_weight_;
    std::map<Weight, AmbientSolver> solvers_;
    std::array<std::vector<SparseColumn>, 25> action_;
};

// Shared, cached irreps.
std::shared_ptr<const IrrepModule> irrep(const Weight& lambda);

// Kernel of all raising operators e_{i,i+1} on the given weight space of F.
std::vector<std::map<int, Rational>> highest_weight_vectors(const IrrepModule& F, const Weight& mu);

}  // namespace e510
