#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "e510/morphism.hpp"
#include "e510/search.hpp"
#include "e510/verma.hpp"

namespace e510 {

// One member of a catalog family: the singular vector of weight `weight` in M(mu)
// of the given degree, i.e. a morphism M(weight) -> M(mu).
struct CatalogFamily {
    std::string tag;
    int m = 0;
    int n = 0;
    Weight mu;
    Weight weight;
    int degree = 0;

    std::string label() const;  // "1B(m=1,n=0)", "7"
    friend bool operator==(const CatalogFamily& a, const CatalogFamily& b) {
        return a.tag == b.tag && a.m == b.m && a.n == b.n;
    }
};

const std::vector<std::string>& family_tags();  // 1A 1B 1C 2BA 2CB 2CA 3CBA 4D 4E 5CD 5EA 7 11
bool family_uses_m(const std::string& tag);
bool family_uses_n(const std::string& tag);
// Throws domain_error on an unknown tag, negative parameters, or a parameter the family does not take.
CatalogFamily catalog_family(const std::string& tag, int m = 0, int n = 0);
// Members for every requested parameter value the family takes.
std::vector<CatalogFamily> family_grid(const std::string& tag, const std::vector<int>& ms, const std::vector<int>& ns);
// All members with coordinate sum of mu <= budget and min_degree <= degree <= max_degree.
std::vector<CatalogFamily> catalog_in_range(int budget, int max_degree, int min_degree = 1);

VermaElement known_vector(const CatalogFamily& f);
MorphismEvaluator catalog_morphism(const CatalogFamily& f);

struct FamilyCheck {
    CatalogFamily family;
    bool singular = false;
    bool weight_ok = false;
    bool degree_ok = false;
    bool leading_nonzero = false;
    int height = 0;
    int terms = 0;
    std::string detail;  // first residual or error text
    bool pass() const { return singular && weight_ok && degree_ok && leading_nonzero; }
};
FamilyCheck verify_family(const CatalogFamily& f);
nlohmann::json family_check_json(const FamilyCheck& c);

// Compositions: chain is applied first to last.
struct CompositionCheck {
    std::vector<CatalogFamily> chain;
    std::optional<CatalogFamily> expected;  // named composite, if any
    bool zero = false;
    bool matches = false;  // hwv image proportional to known_vector(expected)
    Rational scalar;       // composite = scalar * known_vector(expected)
    bool pass() const { return expected ? (!zero && matches) : zero; }
};
CompositionCheck check_composition(const std::vector<CatalogFamily>& chain,
                                   const std::optional<CatalogFamily>& expected = std::nullopt);
// The six named composition identities (2BA, 2CB over the grid values).
std::vector<CompositionCheck> named_compositions(const std::vector<int>& grid);
// Every composable pair among family members with parameters in grid.
std::vector<CompositionCheck> composable_pairs(const std::vector<int>& grid);
nlohmann::json composition_json(const CompositionCheck& c);

// The sequence M(0,1,0,0) -> M(0,0,0,0) -> M(1,0,0,0) named in the closing remarks:
// reported with the catalog arrows actually available, never asserted.
nlohmann::json origin_sequence_report(const std::vector<CompositionCheck>& pairs);
// Nodes and arrows of the catalog morphisms with parameters in grid.
nlohmann::json edge_list_json(const std::vector<int>& grid);

struct SweepCell {
    Weight mu;
    int degree = 0;
    std::vector<SingularCertificate> certificates;
    std::string error;  // resource error text; the sweep goes on
};
struct SweepReport {
    int budget = 0;
    int min_degree = 1;
    int max_degree = 0;
    std::vector<SweepCell> cells;
    std::vector<std::string> matched;      // catalog labels found
    std::vector<std::string> unexplained;  // certificates without a catalog member
    std::vector<std::string> missing;      // catalog members not found
    std::vector<std::string> errors;
    bool pass() const { return unexplained.empty() && missing.empty() && errors.empty(); }
};
SweepReport classification_sweep(int budget, int max_degree, const SearchOptions& opt = {}, int min_degree = 1);
nlohmann::json sweep_json(const SweepReport& r);

}  // namespace e510
