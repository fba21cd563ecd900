#pragma once

#include <memory>
#include <vector>

#include "e510/verma.hpp"

namespace e510 {

// A morphism M(lambda) -> M(mu) given by the images of a basis of F(lambda).
class MorphismEvaluator {
public:
    // Builds the image table from a singular vector w of weight lambda by
    // applying the lowering words of F(lambda) to w.  With verify set, checks
    // g0-equivariance and g1-annihilation on every image.
    static MorphismEvaluator from_singular(const VermaElement& w, const Weight& lambda, bool verify = true);

    const Weight& source() const { return lambda_; }
    const Weight& target() const { return mu_; }
    int degree() const { return degree_; }
    const std::vector<VermaElement>& images() const { return images_; }
    const VermaElement& hwv_image() const { return images_.at(0); }
    const VermaModule& target_module() const { return *target_; }
    const VermaModule& source_module() const { return *source_; }
    bool is_zero() const;

    // Image of an arbitrary element of M(lambda): u (x) v -> u . phi(v).
    VermaElement apply(const VermaElement& x) const;

    // Residual of e_ab phi(v) - phi(e_ab v) (first failure) and of g1 on images.
    bool equivariant() const;
    bool annihilated_by_g1() const;

private:
    friend MorphismEvaluator compose(const MorphismEvaluator& phi2, const MorphismEvaluator& phi1);
    MorphismEvaluator() = default;

    Weight lambda_;
    Weight mu_;
    int degree_ = 0;
    std::shared_ptr<VermaModule> source_;
    std::shared_ptr<VermaModule> target_;
    std::vector<VermaElement> images_;
};

MorphismEvaluator morphism_from_singular(const VermaElement& w, const Weight& lambda);

// phi2 o phi1; requires target(phi1) == source(phi2).
MorphismEvaluator compose(const MorphismEvaluator& phi2, const MorphismEvaluator& phi1);

}  // namespace e510
