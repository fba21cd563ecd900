#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace e510 {

// One invariant sweep: how many cases ran, how many failed, and the first failure.
struct SuiteResult {
    std::string name;
    long long checked = 0;
    long long failures = 0;
    std::string witness;
    double seconds = 0;
    bool pass() const { return failures == 0 && checked > 0; }
};
nlohmann::json suite_json(const SuiteResult& r);
bool all_pass(const std::vector<SuiteResult>& rs);

// Jacobi, U_- associativity, irrep dimensions for coordinates <= 3, dim g1, dim (U_-)_7.
std::vector<SuiteResult> structure_suites(unsigned seed = 11);

// The three omega constructions (exhaustive up to max_d, random tuples of length 5..8),
// the recursion identities and the x_p d_pq commutator formula for |I| <= max_d.
std::vector<SuiteResult> omega_suites(int max_d = 4, int random_tuples = 1000, unsigned seed = 65);

// Fundamental equations on the theta families of w[1A], w[4D], w[7], w[11] and the
// degree-7 relation chain.
std::vector<SuiteResult> fundamental_suites();

// Number of Gelfand-Tsetlin patterns with top row lambda: dim F(lambda) counted
// without the Weyl product.
long long gelfand_tsetlin_count(int a, int b, int c, int d);

}  // namespace e510
