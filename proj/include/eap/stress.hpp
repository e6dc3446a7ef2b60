#pragma once

#include <optional>

#include "eap/material.hpp"

namespace eap {

/// In-plane principal stretches of the membrane. The through-thickness
/// stretch follows from incompressibility and is never stored.
struct StretchState {
    double lambda1 = 1.0;
    double lambda2 = 1.0;

    StretchState() = default;
    StretchState(double l1, double l2);  // rejects nonpositive or non-finite values

    double lambda3() const { return 1.0 / (lambda1 * lambda2); }
};

/// Electric loading of the film, reduced to the activation parameter
/// k_V = eps * V^2 / (2 h^2) (an energy density, in pressure units).
class ElectricLoad {
public:
    static ElectricLoad from_voltage(double permittivity, double voltage, double thickness);
    static ElectricLoad from_activation(double k_v);

    double activation() const { return k_v_; }

private:
    explicit ElectricLoad(double k_v) : k_v_(k_v) {}
    double k_v_ = 0.0;
};

/// The activation parameter k_V of a load.
double activation_parameter(const ElectricLoad& load);

enum class StressRegime { Tense, WrinkledAlong1, WrinkledAlong2, Slack };

const char* to_string(StressRegime regime);

/// Stretch-space tolerance for on-boundary detection: states within this
/// distance of a t_i = 0 curve are flagged and never reported Tense.
inline constexpr double kBoundaryTol = 1e-9;

struct PlaneStress {
    double t1 = 0.0;
    double t2 = 0.0;
    StressRegime regime = StressRegime::Slack;
    bool on_boundary = false;
};

struct Classification {
    StressRegime regime = StressRegime::Slack;
    bool on_boundary = false;
};

/// In-plane principal Cauchy stresses under activation k_v, with t3 = 0
/// enforced through the pressure multiplier. For Mooney-Rivlin:
///   t1 = 2 [ c1 (l1^2 - l1^-2 l2^-2) - c2 (l1^-2 - l1^2 l2^2) - k_v l1^2 l2^2 ]
/// and symmetrically for t2. The regime tag follows classify().
PlaneStress plane_stress(const MaterialModel& model, const StretchState& s, double k_v);

/// Reduced stored-energy density W(l1, l2) for constant-moduli models,
///   W = c1 (I1 - 3) + c2 (I2 - 3) - k_v l1^2 l2^2,
/// satisfying t_i = lambda_i dW/dlambda_i. Verification oracle; nullopt for
/// Generic models.
std::optional<double> reduced_energy(const MaterialModel& model, const StretchState& s, double k_v);

/// Stress regime from the natural-width form of the tensile domain:
/// Tense iff lambda1 > nu(lambda2) and lambda2 > nu(lambda1) strictly
/// (beyond kBoundaryTol); wrinkled when only one holds; slack otherwise.
Classification classify(const MaterialModel& model, const StretchState& s, double k_v);

enum class RelaxDiagnostic {
    None,
    NaturalWidthUnavailable,  // wrinkled state beyond the asymptote
    TensionNotSustainable,    // relaxed uniaxial tension would be negative
};

struct RelaxedStress {
    double t1 = 0.0;
    double t2 = 0.0;
    StressRegime regime = StressRegime::Slack;
    RelaxDiagnostic diagnostic = RelaxDiagnostic::None;
};

/// Tension-field relaxed stresses: tense states are returned unchanged,
/// wrinkled states carry the uniaxial stress at the natural width with zero
/// transverse stress, slack states carry nothing. States whose relaxed
/// tension does not exist or would be negative are reported Slack with a
/// diagnostic. Components are never negative.
RelaxedStress relaxed_stress(const MaterialModel& model, const StretchState& s, double k_v);

namespace detail {

struct StressPair {
    double t1 = 0.0;
    double t2 = 0.0;
};

/// Principal stresses without classification; used by the domain solvers.
StressPair raw_plane_stress(const MaterialModel& model, double lambda1, double lambda2,
                            double k_v);

}  // namespace detail

}  // namespace eap
