#include "e510/morphism.hpp"

#include <stdexcept>

namespace e510 {

namespace {

int degree_of(const VermaElement& w) {
    auto ds = w.degrees();
    if (ds.size() != 1) throw std::domain_error("morphism: image is not homogeneous");
    return ds[0];
}

}  // namespace

MorphismEvaluator MorphismEvaluator::from_singular(const VermaElement& w, const Weight& lambda, bool verify) {
    if (w.is_zero()) throw std::domain_error("morphism_from_singular: zero vector");
    MorphismEvaluator phi;
    phi.mu_ = w.mu();
    phi.lambda_ = lambda;
    phi.target_ = verma_module(w.mu());
    phi.source_ = verma_module(lambda);
    for (const auto& [k, c] : w.terms())
        if (phi.target_->term_weight(k) != lambda)
            throw std::domain_error("morphism_from_singular: vector is not of weight " + lambda.to_string());
    if (!phi.target_->is_singular(w).singular) throw std::domain_error("morphism_from_singular: vector is not singular");
    phi.degree_ = degree_of(w);
    const IrrepModule& F = phi.source_->irrep();
    phi.images_.resize(F.dim());
    phi.images_[0] = w;
    for (int v = 1; v < F.dim(); ++v) {
        auto [parent, i] = F.lowering(v);
        phi.images_[v] = phi.target_->act_gl(i + 1, i, phi.images_[parent]);
    }
    if (verify && (!phi.equivariant() || !phi.annihilated_by_g1()))
        throw std::logic_error("morphism_from_singular: image table fails the morphism checks");
    return phi;
}

MorphismEvaluator morphism_from_singular(const VermaElement& w, const Weight& lambda) {
    return MorphismEvaluator::from_singular(w, lambda, true);
}

bool MorphismEvaluator::is_zero() const {
    for (const auto& im : images_)
        if (!im.is_zero()) return false;
    return true;
}

VermaElement MorphismEvaluator::apply(const VermaElement& x) const {
    VermaElement out = target_->zero();
    for (const auto& [k, c] : x.terms()) {
        UMinusElement u(term_monomial(k));
        out.add(target_->left_multiply(u, images_.at(term_index(k))), c);
    }
    return out;
}

bool MorphismEvaluator::equivariant() const {
    const IrrepModule& F = source_->irrep();
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            if (a == b) continue;
            for (int v = 0; v < F.dim(); ++v) {
                VermaElement lhs = target_->act_gl(a, b, images_[v]);
                for (const auto& [j, x] : F.act(a, b, v)) lhs.add(images_[j], -x);
                if (!lhs.is_zero()) return false;
            }
        }
    return true;
}

bool MorphismEvaluator::annihilated_by_g1() const {
    const int p45 = pair_index(4, 5);
    for (const auto& im : images_)
        if (!target_->act_symbol(5, p45, im).is_zero()) return false;
    // the lowest vector suffices given equivariance; the full sweep on the hwv image is cheap
    for (const auto& X : g1_basis())
        if (!target_->act_g1(X, images_[0]).is_zero()) return false;
    return true;
}

MorphismEvaluator compose(const MorphismEvaluator& phi2, const MorphismEvaluator& phi1) {
    if (phi1.target() != phi2.source())
        throw std::domain_error("compose: target " + phi1.target().to_string() + " differs from source " +
                                phi2.source().to_string());
    MorphismEvaluator out;
    out.lambda_ = phi1.lambda_;
    out.mu_ = phi2.mu_;
    out.degree_ = phi1.degree_ + phi2.degree_;
    out.source_ = phi1.source_;
    out.target_ = phi2.target_;
    for (const auto& im : phi1.images_) out.images_.push_back(phi2.apply(im));
    return out;
}

}  // namespace e510
