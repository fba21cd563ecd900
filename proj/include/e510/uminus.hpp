#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "e510/rational.hpp"

namespace e510 {

// The ten index pairs i<j of {1..5}, numbered 0..9 in lex order
// 12,13,14,15,23,24,25,34,35,45.
constexpr int kPairs = 10;

struct FormPair {
    int i = 0;
    int j = 0;
};

int pair_index(int i, int j);              // requires i<j, 1-based
FormPair pair_at(int p);                    // inverse of pair_index
std::string pair_name(int p);               // "12"

// Sign of the permutation (i,j,k,l,t) for pairs p=(ij), q=(kl); t is the
// missing index.  Returns 0 (and t=0) when the four indices are not distinct.
int epsilon_t(int p, int q, int* t_out = nullptr);

// PBW monomial d^M d_I: five partial exponents and a set of pairs.  The
// packed key is ordered numerically as: degree, then the partial exponents
// lexicographically, then the sorted pair list lexicographically.
class PbwMonomial {
public:
    static constexpr int kMaxExponent = 31;

    PbwMonomial() = default;
    PbwMonomial(const std::array<int, 5>& partials, std::uint16_t form_mask);
    static PbwMonomial from_key(std::uint64_t key) {
        PbwMonomial m;
        m.key_ = key;
        return m;
    }

    std::uint64_t key() const { return key_; }
    int degree() const { return static_cast<int>((key_ >> 35) & 0xff); }
    int height() const { return __builtin_popcount(forms()); }
    int partial(int c) const { return static_cast<int>((key_ >> (10 + 5 * (5 - c))) & 31); }  // c = 1..5
    std::array<int, 5> partials() const;
    std::uint16_t forms() const;  // bit p set when pair p present
    std::vector<int> form_list() const;

    // gl5 weight: each partial c contributes -e_c, each pair (ij) e_i+e_j.
    std::array<int, 5> gl_weight() const;

    friend bool operator==(PbwMonomial a, PbwMonomial b) { return a.key_ == b.key_; }
    friend bool operator!=(PbwMonomial a, PbwMonomial b) { return a.key_ != b.key_; }
    friend bool operator<(PbwMonomial a, PbwMonomial b) { return a.key_ < b.key_; }

private:
    std::uint64_t key_ = 1023;  // empty form set
};

// The key occupies the low 43 bits; callers may pack extra data above that.
constexpr int kMonomialKeyBits = 43;

std::string to_text(PbwMonomial m);  // "p1^2 p3 d12 d34", "1" for the unit
PbwMonomial parse_monomial(const std::string& text);

// Sparse element of U(g_-) in the PBW basis.
class UMinusElement {
public:
    using Map = std::map<std::uint64_t, Rational>;

    UMinusElement() = default;
    explicit UMinusElement(PbwMonomial m, Rational c = 1) { add(m, c); }

    static UMinusElement one() { return UMinusElement(PbwMonomial()); }
    static UMinusElement partial(int c);
    static UMinusElement form(int i, int j);  // d_ij, with d_ji = -d_ij

    void add(PbwMonomial m, const Rational& c);
    void add(const UMinusElement& o, const Rational& c = 1);
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    Rational coeff(PbwMonomial m) const;

    UMinusElement& operator+=(const UMinusElement& o) {
        add(o);
        return *this;
    }
    UMinusElement& operator-=(const UMinusElement& o) {
        add(o, Rational(-1));
        return *this;
    }
    UMinusElement& operator*=(const Rational& c);

    friend bool operator==(const UMinusElement& a, const UMinusElement& b) { return a.terms_ == b.terms_; }

    std::string to_text() const;

private:
    Map terms_;
};

UMinusElement operator+(UMinusElement a, const UMinusElement& b);
UMinusElement operator-(UMinusElement a, const UMinusElement& b);
UMinusElement operator*(const Rational& c, UMinusElement a);

// Normal-ordered product in U(g_-).
UMinusElement pbw_product(PbwMonomial a, PbwMonomial b);
UMinusElement pbw_product(const UMinusElement& a, const UMinusElement& b);
// Product of a word of generators; word entries are pair indices (0..9)
// or partials encoded as 100+c.
UMinusElement word_product(const std::vector<int>& word);

UMinusElement parse_uminus(const std::string& text);

// dim (U_-)_d and all monomials of degree d in increasing order.
long long uminus_dimension(int d);
const std::vector<PbwMonomial>& monomials_of_degree(int d);

}  // namespace e510
