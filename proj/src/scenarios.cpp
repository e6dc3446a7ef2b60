#include "eap/scenarios.hpp"

#include <cmath>

#include "eap/rootfind.hpp"

namespace eap {

const char* to_string(Branch branch) {
    return branch == Branch::Lower ? "lower" : "upper";
}

EquilibriumBranch free_actuation(const MaterialModel& model, double k_v) {
    EquilibriumBranch out;
    out.k_v = k_v;
    const auto roots = vertices(model, k_v);
    if (roots.size() == 1) {
        out.states.push_back({roots[0], Branch::Lower});
    } else if (roots.size() >= 2) {
        out.states.push_back({roots.front(), Branch::Lower});
        out.states.push_back({roots.back(), Branch::Upper});
    }
    return out;
}

CriticalResult pull_in(const MaterialModel& model) { return critical_activation(model); }

PrestretchSolution prestretched_actuation(const MaterialModel& model, double prestretch,
                                          double k_v) {
    if (!std::isfinite(prestretch) || prestretch <= 0.0) {
        throw InvalidStretch("prestretch must be positive and finite");
    }
    PrestretchSolution out;
    out.prestretch = prestretch;
    out.k_v = k_v;
    const auto l1 = natural_width(model, prestretch, k_v);  // t1 = 0 curve, by symmetry
    if (!l1) return out;  // beyond the asymptote: no equilibrium
    out.lambda1 = *l1;
    // Closure membership: the state sits on the t1 = 0 boundary, so only the
    // second width condition can fail.
    const auto w2 = natural_width(model, *l1, k_v);
    out.feasible = w2.has_value() && prestretch >= *w2 - kBoundaryTol;
    return out;
}

namespace {

MaxActivation max_activation_to_tolerance(const MaterialModel& model, double prestretch,
                                          double tol) {
    const auto feasible = [&](double k_v) {
        return prestretched_actuation(model, prestretch, k_v).feasible;
    };
    if (!feasible(0.0)) return {MaxActivation::Status::Converged, 0.0};
    const double k_cap = 1e3 * model.stress_scale();
    if (feasible(k_cap)) return {MaxActivation::Status::Unbounded, k_cap};
    double lo = 0.0;
    double hi = k_cap;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    return {MaxActivation::Status::Converged, 0.5 * (lo + hi)};
}

}  // namespace

MaxActivation max_activation_for_prestretch(const MaterialModel& model, double prestretch) {
    return max_activation_to_tolerance(model, prestretch, 1e-9 * model.stress_scale());
}

OptimalPrestretch optimal_prestretch(const MaterialModel& model) {
    const auto crit = critical_activation(model);
    if (!crit.converged()) return {OptimalPrestretch::Status::Unbounded, 0.0, 0.0};
    bool unbounded = false;
    // The search needs the threshold resolved well below the standalone
    // operation's tolerance, or the bisection steps flatten the argmax.
    const double tol = 1e-12 * model.stress_scale();
    const auto survivable = [&](double prestretch) {
        const auto r = max_activation_to_tolerance(model, prestretch, tol);
        if (r.status == MaxActivation::Status::Unbounded) unbounded = true;
        return r.k_v;
    };
    const auto peak = golden_max(survivable, 1.0, 4.0 * crit.point.lambda_crit, 1e-6);
    if (unbounded) return {OptimalPrestretch::Status::Unbounded, peak.x, peak.value};
    return {OptimalPrestretch::Status::Converged, peak.x, peak.value};
}

}  // namespace eap
