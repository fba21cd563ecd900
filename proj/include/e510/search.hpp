#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "e510/linalg.hpp"
#include "e510/verma.hpp"

namespace e510 {

inline constexpr const char* kToolVersion = "e510-0.1.0";

// Raised when a weight space exceeds the configured cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    bool full_g1 = true;          // re-check every kernel vector against all of g1
    bool prune_height = false;    // skip weights with no height-d term (d <= 10)
    long long dim_cap = 200000;   // max nonzero entries of one assembled system
    int threads = 1;              // 0 = hardware concurrency; E510_THREADS overrides
    std::string checkpoint;       // JSON file with per-weight results, reused on resume
};

struct SingularCertificate {
    Weight mu;
    int degree = 0;
    Weight weight;
    int kernel_dim = 0;
    std::vector<VermaElement> vectors;
    bool checked_full_g1 = false;
};

struct SystemStats {
    int columns = 0;
    int rows = 0;
    long long nonzeros = 0;
};

// Dominant weights carrying a nonzero degree-d weight space of M(mu).
std::vector<Weight> candidate_weights(const Weight& mu, int d);

// Matrix of w -> (E1 w, .., E4 w, x5 d45 w) on the (d, nu) weight space; columns
// follow VermaModule::weight_space order.
SparseRationalMatrix singular_system(const VermaModule& M, int d, const Weight& nu,
                                     const std::vector<std::uint64_t>& columns, long long dim_cap,
                                     SystemStats* stats = nullptr);

std::vector<SingularCertificate> find_singular_vectors(const Weight& mu, int d, std::optional<Weight> nu = std::nullopt,
                                                       const SearchOptions& opt = {});

bool dual_pair_check(const SingularCertificate& cert, const SearchOptions& opt = {});

int resolve_threads(int requested);

// Scales to a primitive integer vector with positive first coefficient.
VermaElement primitive(const VermaElement& w);
// True when a = c b for a nonzero rational c.
bool proportional(const VermaElement& a, const VermaElement& b);

nlohmann::json certificate_json(const SingularCertificate& c);
SingularCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace e510
