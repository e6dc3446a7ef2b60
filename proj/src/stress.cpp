#include "eap/stress.hpp"

#include <cmath>
#include <limits>

#include "eap/domain.hpp"

namespace eap {

namespace {

void check_activation(double k_v) {
    if (!std::isfinite(k_v) || k_v < 0.0) {
        throw InvalidLoad("activation parameter must be finite and nonnegative");
    }
}

}  // namespace

StretchState::StretchState(double l1, double l2) : lambda1(l1), lambda2(l2) {
    if (!std::isfinite(l1) || !std::isfinite(l2) || l1 <= 0.0 || l2 <= 0.0) {
        throw InvalidStretch("principal stretches must be positive and finite");
    }
}

ElectricLoad ElectricLoad::from_voltage(double permittivity, double voltage, double thickness) {
    if (!std::isfinite(permittivity) || permittivity <= 0.0) {
        throw InvalidLoad("permittivity must be positive");
    }
    if (!std::isfinite(thickness) || thickness <= 0.0) {
        throw InvalidLoad("reference thickness must be positive");
    }
    if (!std::isfinite(voltage) || voltage < 0.0) {
        throw InvalidLoad("voltage must be nonnegative");
    }
    return ElectricLoad(permittivity * voltage * voltage / (2.0 * thickness * thickness));
}

ElectricLoad ElectricLoad::from_activation(double k_v) {
    check_activation(k_v);
    return ElectricLoad(k_v);
}

double activation_parameter(const ElectricLoad& load) { return load.activation(); }

const char* to_string(StressRegime regime) {
    switch (regime) {
        case StressRegime::Tense: return "tense";
        case StressRegime::WrinkledAlong1: return "wrinkled-along-1";
        case StressRegime::WrinkledAlong2: return "wrinkled-along-2";
        case StressRegime::Slack: return "slack";
    }
    return "unknown";
}

namespace detail {

StressPair raw_plane_stress(const MaterialModel& model, double lambda1, double lambda2,
                            double k_v) {
    const double a = lambda1 * lambda1;
    const double b = lambda2 * lambda2;
    const double ab = a * b;
    const double inv_ab = 1.0 / ab;
    if (model.has_constant_moduli()) {
        const double c1 = model.c1();
        const double c2 = model.c2();
        return {2.0 * (c1 * (a - inv_ab) - c2 * (1.0 / a - ab) - k_v * ab),
                2.0 * (c1 * (b - inv_ab) - c2 * (1.0 / b - ab) - k_v * ab)};
    }
    const double b1 = model.beta1(lambda1, lambda2);
    const double b2 = model.beta2(lambda1, lambda2);
    // p eliminated via t3 = 0; the Maxwell term enters as 2 k_v l1^2 l2^2.
    return {b1 * (a - inv_ab) + b2 * (1.0 / a - ab) - 2.0 * k_v * ab,
            b1 * (b - inv_ab) + b2 * (1.0 / b - ab) - 2.0 * k_v * ab};
}

}  // namespace detail

PlaneStress plane_stress(const MaterialModel& model, const StretchState& s, double k_v) {
    check_activation(k_v);
    const auto [t1, t2] = detail::raw_plane_stress(model, s.lambda1, s.lambda2, k_v);
    const auto cls = classify(model, s, k_v);
    return {t1, t2, cls.regime, cls.on_boundary};
}

std::optional<double> reduced_energy(const MaterialModel& model, const StretchState& s,
                                     double k_v) {
    check_activation(k_v);
    if (!model.has_constant_moduli()) return std::nullopt;
    const double a = s.lambda1 * s.lambda1;
    const double b = s.lambda2 * s.lambda2;
    const double ab = a * b;
    const double i1 = a + b + 1.0 / ab;
    const double i2 = 1.0 / a + 1.0 / b + ab;
    return model.c1() * (i1 - 3.0) + model.c2() * (i2 - 3.0) - k_v * ab;
}

Classification classify(const MaterialModel& model, const StretchState& s, double k_v) {
    check_activation(k_v);
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const auto w1 = natural_width(model, s.lambda2, k_v);  // t1 = 0 threshold for lambda1
    const auto w2 = natural_width(model, s.lambda1, k_v);  // t2 = 0 threshold for lambda2
    const double d1 = w1 ? s.lambda1 - *w1 : -kInf;
    const double d2 = w2 ? s.lambda2 - *w2 : -kInf;
    const bool on_boundary = (w1 && std::abs(d1) <= kBoundaryTol) ||
                             (w2 && std::abs(d2) <= kBoundaryTol);
    const bool tense1 = d1 > kBoundaryTol;
    const bool tense2 = d2 > kBoundaryTol;
    StressRegime regime;
    if (tense1 && tense2) {
        regime = StressRegime::Tense;
    } else if (tense1) {
        regime = StressRegime::WrinkledAlong1;
    } else if (tense2) {
        regime = StressRegime::WrinkledAlong2;
    } else {
        regime = StressRegime::Slack;
    }
    return {regime, on_boundary};
}

RelaxedStress relaxed_stress(const MaterialModel& model, const StretchState& s, double k_v) {
    const auto cls = classify(model, s, k_v);
    switch (cls.regime) {
        case StressRegime::Tense: {
            const auto [t1, t2] = detail::raw_plane_stress(model, s.lambda1, s.lambda2, k_v);
            return {t1, t2, StressRegime::Tense, RelaxDiagnostic::None};
        }
        case StressRegime::WrinkledAlong1: {
            const auto w = natural_width(model, s.lambda1, k_v);
            if (!w) {
                return {0.0, 0.0, StressRegime::Slack, RelaxDiagnostic::NaturalWidthUnavailable};
            }
            const double t1 = detail::raw_plane_stress(model, s.lambda1, *w, k_v).t1;
            if (t1 < 0.0) {
                return {0.0, 0.0, StressRegime::Slack, RelaxDiagnostic::TensionNotSustainable};
            }
            return {t1, 0.0, StressRegime::WrinkledAlong1, RelaxDiagnostic::None};
        }
        case StressRegime::WrinkledAlong2: {
            const auto w = natural_width(model, s.lambda2, k_v);
            if (!w) {
                return {0.0, 0.0, StressRegime::Slack, RelaxDiagnostic::NaturalWidthUnavailable};
            }
            const double t2 = detail::raw_plane_stress(model, *w, s.lambda2, k_v).t2;
            if (t2 < 0.0) {
                return {0.0, 0.0, StressRegime::Slack, RelaxDiagnostic::TensionNotSustainable};
            }
            return {0.0, t2, StressRegime::WrinkledAlong2, RelaxDiagnostic::None};
        }
        case StressRegime::Slack:
            break;
    }
    return {0.0, 0.0, StressRegime::Slack, RelaxDiagnostic::None};
}

}  // namespace eap
