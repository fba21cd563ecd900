#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "e510/morphism.hpp"
#include "e510/uminus.hpp"
#include "e510/verma.hpp"

namespace e510 {

// Ordered tuple of ordered pairs (i,j), entries in 1..5; (i,j) stands for x_i ^ x_j.
using IndexPair = std::pair<int, int>;
using IndexTuple = std::vector<IndexPair>;

IndexTuple parse_index_tuple(const std::string& s);  // "12,34,21" or "(12,34)"
std::string index_tuple_text(const IndexTuple& I);
IndexTuple tuple_of_mask(std::uint16_t mask);

// x_I = sign * x_{mask} with mask sorted; sign 0 when x_I = 0.
struct WedgeForm {
    int sign = 0;
    std::uint16_t mask = 0;
};
WedgeForm canonical(const IndexTuple& I);
// K with x_I = x_J ^ x_K != 0, returned as sign * x_{mask}; sign 0 when no such K.
WedgeForm wedge_remove(const IndexTuple& I, const IndexTuple& J);

// Sign of the permutation (i,j,k,l,t) of 1..5 (t the missing index), 0 on repeats.
int epsilon4(int i, int j, int k, int l, int* t = nullptr);
int permutation_sign(const std::vector<int>& p);

// Self-intersection free sets: sets of disjoint 2-subsets {k<l} of 1..d.
using SifSet = std::vector<std::pair<int, int>>;
std::vector<SifSet> sif_sets(int d);
int crossing_number(const SifSet& s);

UMinusElement omega_direct(const IndexTuple& I);
UMinusElement omega_recursive(const IndexTuple& I);
UMinusElement omega_symmetrized(const IndexTuple& I);
// Cached omega of the sorted tuple of a mask.
const UMinusElement& omega_mask(std::uint16_t mask);
UMinusElement omega(const IndexTuple& I);
UMinusElement omega_minus(const IndexTuple& I, const IndexTuple& J);  // omega_{I \ J}

// Coefficients over the basis d^M omega_mask, keyed by the PbwMonomial key of d^M d_mask.
using OmegaCoefficients = std::map<std::uint64_t, Rational>;
OmegaCoefficients pbw_to_omega(const UMinusElement& u, int d);
UMinusElement omega_to_pbw(const OmegaCoefficients& c);
std::string omega_text(const OmegaCoefficients& c);

// omega_I - d_{I1} omega_{(I2..)} + 1/2 sum_k eps_{I1,Ik} d_t omega_{(I2..) \ Ik}
UMinusElement omega_recursion_residual(const IndexTuple& I);
// d_ij omega_I - omega_{ij,I} - 1/2 (d_r omega_{I\st} + d_s omega_{I\tr} + d_t omega_{I\rs})
UMinusElement omega_product_residual(int i, int j, const IndexTuple& I);

// Sign of the two correction terms of the x_p d_pq commutator formula.
// General: -1/2 d_q w_{I\(ab,bc,ca)} + 1/4 sum ...; Special: the opposite sign, as
// displayed for x5 d45; Epsilon: General times eps_{pqabc}.  Only General holds.
enum class CorrectionSign { General, Special, Epsilon };
CorrectionSign resolved_correction_sign();

// (LHS - RHS)(1 (x) v) for each basis vector v of the inducing irrep of M.
std::vector<VermaElement> commutator_identity_residual(int p, int q, const IndexTuple& I, const VermaModule& M,
                                                       CorrectionSign sign = resolved_correction_sign());

// theta^M_I : F(lambda) -> F(mu) from phi(v) = sum d^M omega_I (x) theta^M_I(v).
struct ThetaFamily {
    Weight lambda;
    Weight mu;
    int degree = 0;
    int source_dim = 0;
    std::shared_ptr<const IrrepModule> source;
    std::shared_ptr<const IrrepModule> target;
    // key: PbwMonomial(M, mask).key(); value indexed by source basis vector
    std::map<std::uint64_t, std::vector<std::map<int, Rational>>> entries;

    std::map<int, Rational> value(const std::array<int, 5>& upper, const IndexTuple& I, int v) const;
    std::map<int, Rational> value(const std::vector<int>& upper, const IndexTuple& I, int v) const;
    nlohmann::json to_json() const;
};

ThetaFamily theta_from_morphism(const MorphismEvaluator& phi);
ThetaFamily reconstruct_theta(const VermaElement& w, const Weight& lambda);
// The theta family is a g0-module map: Hom action equals the action on indices
// (upper indices as divided powers x^M/M!, lower ones in the dual).
bool theta_equivariant(const ThetaFamily& theta);

struct FundamentalResidual {
    std::string equation;  // fundamental1 .. fundamental4
    std::array<int, 5> pqabc{};
    IndexTuple tuple;      // J or K
    int v = 0;
    std::map<int, Rational> value;
};
// Nonzero residuals of the fundamental equations over all (p,q,a,b,c), all J, K
// and all basis vectors v; empty for a genuine morphism.
std::vector<FundamentalResidual> fundamental_equation_residuals(const ThetaFamily& theta, std::size_t max_report = 20);

// The relation chain for the degree-7 vector, with the evident index typos of
// the printed chain corrected: each entry is (coefficient, upper, I) and all
// c * theta^upper_I(s) must coincide.
struct ChainEntry {
    Rational coeff;
    std::vector<int> upper;
    IndexTuple I;
};
const std::vector<ChainEntry>& degree7_relation_chain();
bool check_chain(const ThetaFamily& theta, const std::vector<ChainEntry>& chain, std::string* detail = nullptr);

}  // namespace e510
