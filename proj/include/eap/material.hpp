#pragma once

#include <functional>
#include <optional>

#include "eap/errors.hpp"

namespace eap {

enum class MaterialKind { MooneyRivlin, NeoHookean, Generic };

/// Response function beta_i(lambda1, lambda2), in stress units.
using ResponseFunction = std::function<double(double, double)>;

/// Incompressible isotropic material described by the response-function pair
/// (beta1, beta2) of the principal-stress representation
///
///     t_i = -p + beta1 * lambda_i^2 + beta2 * lambda_i^-2.
///
/// Mooney-Rivlin materials have constant beta1 = 2 c1 and beta2 = -2 c2; the
/// Neo-Hookean model is the special case c1 = mu/2, c2 = 0. Moduli are
/// unit-agnostic: any consistent pressure unit works, and the activation
/// parameter must be expressed in the same unit.
///
/// Instances are immutable after construction and safe to evaluate
/// concurrently from any number of threads.
class MaterialModel {
public:
    /// Mooney-Rivlin model; requires c1 >= 0, c2 >= 0, c1 + c2 > 0.
    static MaterialModel mooney_rivlin(double c1, double c2);

    /// Neo-Hookean model with shear modulus mu > 0, i.e. MooneyRivlin(mu/2, 0).
    static MaterialModel neo_hookean(double mu);

    /// Model with arbitrary response functions. Callbacks must return finite
    /// values for every stretch pair the solvers query. The shear modulus may
    /// be declared so tolerance scaling and shear_modulus() work.
    static MaterialModel generic(ResponseFunction beta1, ResponseFunction beta2,
                                 std::optional<double> shear_modulus = std::nullopt);

    MaterialKind kind() const { return kind_; }

    /// True for MooneyRivlin and NeoHookean models (constant beta1, beta2).
    bool has_constant_moduli() const { return kind_ != MaterialKind::Generic; }

    /// Mooney-Rivlin moduli; only meaningful when has_constant_moduli().
    double c1() const;
    double c2() const;

    /// 2 (c1 + c2) for constant-moduli models; the declared value for Generic
    /// models, nullopt when none was declared.
    std::optional<double> shear_modulus() const;

    double beta1(double lambda1, double lambda2) const;
    double beta2(double lambda1, double lambda2) const;

    /// max(shear modulus, 1): the stress scale used by solver tolerances.
    double stress_scale() const;

private:
    MaterialModel() = default;

    MaterialKind kind_ = MaterialKind::Generic;
    double c1_ = 0.0;
    double c2_ = 0.0;
    ResponseFunction beta1_fn_;
    ResponseFunction beta2_fn_;
    std::optional<double> declared_mu_;
};

}  // namespace eap
