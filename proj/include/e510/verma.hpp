#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "e510/algebra.hpp"
#include "e510/rational.hpp"
#include "e510/sl5.hpp"
#include "e510/uminus.hpp"

namespace e510 {

// A term of M(mu) = U_- (x) F(mu) is packed as (monomial key << 21) | irrep index,
// so numeric order is (monomial order, irrep index).
constexpr int kIrrepIndexBits = 64 - kMonomialKeyBits;
inline std::uint64_t term_key(PbwMonomial m, int v) { return (m.key() << kIrrepIndexBits) | static_cast<std::uint64_t>(v); }
inline PbwMonomial term_monomial(std::uint64_t k) { return PbwMonomial::from_key(k >> kIrrepIndexBits); }
inline int term_index(std::uint64_t k) { return static_cast<int>(k & ((std::uint64_t(1) << kIrrepIndexBits) - 1)); }

class VermaElement {
public:
    using Map = std::map<std::uint64_t, Rational>;

    VermaElement() = default;
    explicit VermaElement(const Weight& mu) : mu_(mu) {}

    const Weight& mu() const { return mu_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(PbwMonomial m, int v, const Rational& c) { add_key(term_key(m, v), c); }
    void add_key(std::uint64_t k, const Rational& c);
    void add(const VermaElement& o, const Rational& c = 1);
    Rational coeff(PbwMonomial m, int v) const;

    VermaElement& operator*=(const Rational& c);
    friend bool operator==(const VermaElement& a, const VermaElement& b) {
        return a.mu_ == b.mu_ && a.terms_ == b.terms_;
    }
    friend VermaElement operator+(VermaElement a, const VermaElement& b) {
        a.add(b);
        return a;
    }
    friend VermaElement operator-(VermaElement a, const VermaElement& b) {
        a.add(b, Rational(-1));
        return a;
    }

    // Degree-homogeneous component and the set of degrees present.
    VermaElement degree_component(int d) const;
    std::vector<int> degrees() const;

private:
    Weight mu_;
    Map terms_;
};

struct SingularReport {
    bool singular = false;
    bool positive_degree = false;
    // Operator name and its nonzero image.
    std::vector<std::pair<std::string, VermaElement>> residuals;
};

// The finite Verma module M(mu) with exact g_- , g0 and g1 actions.
class VermaModule {
public:
    explicit VermaModule(const Weight& mu);

    const Weight& mu() const { return mu_; }
    const IrrepModule& irrep() const { return *F_; }
    std::shared_ptr<const IrrepModule> irrep_ptr() const { return F_; }

    VermaElement zero() const { return VermaElement(mu_); }
    VermaElement element(const UMinusElement& u, int v) const;

    // Left multiplication by U(g_-).
    VermaElement left_multiply(const UMinusElement& u, const VermaElement& w) const;
    VermaElement act_g0(const SuperElement& E, const VermaElement& w) const;
    VermaElement act_g1(const SuperElement& X, const VermaElement& w) const;
    // Action of an arbitrary (possibly inhomogeneous) element of g_{-2..1}.
    VermaElement act(const SuperElement& X, const VermaElement& w) const;
    // Single gl5 generator e_ab and single linear-form symbol x_k d_p.
    VermaElement act_gl(int a, int b, const VermaElement& w) const;
    VermaElement act_symbol(int k, int p, const VermaElement& w) const;

    // Adjoint action of e_ab on a PBW monomial (memoized).
    const std::vector<std::pair<std::uint64_t, Rational>>& ad_gl(int a, int b, PbwMonomial m) const;

    SingularReport is_singular(const VermaElement& w, bool full_g1 = false) const;

    // Sorted term keys of the (degree d, weight nu) subspace.
    std::vector<std::uint64_t> weight_space(int d, const Weight& nu) const;
    // Dominant weights nu with nonempty degree-d weight space, sorted.
    std::vector<Weight> candidate_weights(int d) const;
    Weight term_weight(std::uint64_t key) const;

    // Text in ambient symbols, e.g. "d12 d13 ⊗ x1^2 x5*"; JSON mirror.
    std::string to_text(const VermaElement& w) const;
    std::string to_json(const VermaElement& w) const;
    // Parses text written with "⊗" (or "|") between the U_- word and the ambient monomial.
    // With project set, ambient parts outside F(mu) are orthogonally projected onto it.
    VermaElement parse(const std::string& text, bool project = false) const;
    // Builds sum_t u_t (x) a_t from pairs of U_- elements and ambient polynomials.
    VermaElement from_ambient(const std::vector<std::pair<UMinusElement, AmbientPoly>>& parts, bool project) const;
    // Groups the element as U_- monomial -> ambient polynomial.
    std::map<std::uint64_t, AmbientPoly> to_ambient(const VermaElement& w) const;

    std::size_t memo_size() const;

private:
    struct OpTerm {
        std::uint64_t mono;
        int gen;  // 0..24 for e_ab with index (a-1)*5+(b-1), 25 for the identity
        Rational c;
    };
    using OpResult = std::vector<OpTerm>;
    const OpResult& symbol_op(int k, int p, PbwMonomial m) const;
    OpResult compute_symbol_op(int k, int p, PbwMonomial m) const;
    std::vector<std::pair<std::uint64_t, Rational>> compute_ad(int a, int b, PbwMonomial m) const;

    Weight mu_;
    std::shared_ptr<const IrrepModule> F_;
    mutable std::mutex memo_mu_;
    mutable std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, Rational>>> ad_memo_;
    mutable std::unordered_map<std::uint64_t, OpResult> op_memo_;
};

int height(const VermaElement& w);
VermaElement highest_term(const VermaElement& w);
VermaElement leading_term(const VermaElement& w, const IrrepModule& F);

// Shared module instances (memo tables are reused across callers).
std::shared_ptr<VermaModule> verma_module(const Weight& mu);

}  // namespace e510
