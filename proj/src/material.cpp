#include "eap/material.hpp"

#include <cmath>

namespace eap {

namespace {

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

MaterialModel MaterialModel::mooney_rivlin(double c1, double c2) {
    if (!finite_nonneg(c1) || !finite_nonneg(c2)) {
        throw DegenerateMaterial("mooney_rivlin: moduli must be finite and nonnegative");
    }
    if (c1 + c2 <= 0.0) {
        throw DegenerateMaterial("mooney_rivlin: c1 + c2 must be positive");
    }
    MaterialModel m;
    m.kind_ = MaterialKind::MooneyRivlin;
    m.c1_ = c1;
    m.c2_ = c2;
    return m;
}

MaterialModel MaterialModel::neo_hookean(double mu) {
    if (!std::isfinite(mu) || mu <= 0.0) {
        throw DegenerateMaterial("neo_hookean: shear modulus must be positive");
    }
    MaterialModel m;
    m.kind_ = MaterialKind::NeoHookean;
    m.c1_ = mu / 2.0;
    m.c2_ = 0.0;
    return m;
}

MaterialModel MaterialModel::generic(ResponseFunction beta1, ResponseFunction beta2,
                                     std::optional<double> shear_modulus) {
    if (!beta1 || !beta2) {
        throw DegenerateMaterial("generic: both response functions are required");
    }
    if (shear_modulus && !(std::isfinite(*shear_modulus) && *shear_modulus > 0.0)) {
        throw DegenerateMaterial("generic: declared shear modulus must be positive");
    }
    MaterialModel m;
    m.kind_ = MaterialKind::Generic;
    m.beta1_fn_ = std::move(beta1);
    m.beta2_fn_ = std::move(beta2);
    m.declared_mu_ = shear_modulus;
    return m;
}

double MaterialModel::c1() const {
    if (!has_constant_moduli()) throw InvalidArgument("c1: generic model has no constant moduli");
    return c1_;
}

double MaterialModel::c2() const {
    if (!has_constant_moduli()) throw InvalidArgument("c2: generic model has no constant moduli");
    return c2_;
}

std::optional<double> MaterialModel::shear_modulus() const {
    if (has_constant_moduli()) return 2.0 * (c1_ + c2_);
    return declared_mu_;
}

double MaterialModel::beta1(double lambda1, double lambda2) const {
    if (has_constant_moduli()) return 2.0 * c1_;
    const double v = beta1_fn_(lambda1, lambda2);
    if (!std::isfinite(v)) {
        throw MaterialEvaluationError("beta1 returned a non-finite value at (" +
                                      std::to_string(lambda1) + ", " + std::to_string(lambda2) +
                                      ")");
    }
    return v;
}

double MaterialModel::beta2(double lambda1, double lambda2) const {
    if (has_constant_moduli()) return -2.0 * c2_;
    const double v = beta2_fn_(lambda1, lambda2);
    if (!std::isfinite(v)) {
        throw MaterialEvaluationError("beta2 returned a non-finite value at (" +
                                      std::to_string(lambda1) + ", " + std::to_string(lambda2) +
                                      ")");
    }
    return v;
}

double MaterialModel::stress_scale() const {
    const auto mu = shear_modulus();
    return std::max(mu.value_or(1.0), 1.0);
}

}  // namespace eap
