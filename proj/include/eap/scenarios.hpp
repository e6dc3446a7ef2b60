#pragma once

#include "eap/domain.hpp"

namespace eap {

enum class Branch { Lower, Upper };

const char* to_string(Branch branch);

struct EquilibriumState {
    double lambda = 0.0;
    Branch branch = Branch::Lower;
};

/// Equibiaxial equilibria of a membrane with free edges under activation k_v.
struct EquilibriumBranch {
    double k_v = 0.0;
    std::vector<EquilibriumState> states;  // empty above the pull-in threshold
};

/// Free (unconstrained) equibiaxial actuation: all equilibria with
/// t1 = t2 = t3 = 0, i.e. the vertices of the tensile domain. The smaller
/// stretch is the physical actuation branch ("lower"); the larger one sits on
/// the receding upper vertex ("upper").
EquilibriumBranch free_actuation(const MaterialModel& model, double k_v);

/// Pull-in instability threshold: the critical activation above which no
/// equilibrium exists. Same result as critical_activation.
CriticalResult pull_in(const MaterialModel& model);

struct PrestretchSolution {
    double prestretch = 0.0;
    double k_v = 0.0;
    std::optional<double> lambda1;  // nullopt beyond the asymptote
    bool feasible = false;          // state lies in the closure of the tensile domain
};

/// Actuation with prestretch imposed in direction 2: the equilibrium solves
/// t1 = t3 = 0, so lambda1 = nu(prestretch, k_v). Feasibility means the state
/// lies in the closure of the tensile domain (the equilibrium sits on its
/// boundary by construction).
PrestretchSolution prestretched_actuation(const MaterialModel& model, double prestretch,
                                          double k_v);

struct MaxActivation {
    enum class Status { Converged, Unbounded };
    Status status = Status::Converged;
    double k_v = 0.0;
};

/// Largest activation that keeps the prestretched equilibrium feasible, found
/// by bisection over k_v (feasibility is monotone in k_v). Returns 0 when the
/// prestretch is infeasible already at zero voltage; Unbounded when still
/// feasible at the activation cap 1e3 * max(mu, 1).
MaxActivation max_activation_for_prestretch(const MaterialModel& model, double prestretch);

struct OptimalPrestretch {
    enum class Status { Converged, Unbounded };
    Status status = Status::Converged;
    double prestretch = 0.0;
    double k_v = 0.0;
};

/// Prestretch maximizing the survivable activation, by golden-section over
/// prestretch in [1, 4 lambda^crit]. Coincides with the critical point
/// (lambda^crit, k_v^crit).
OptimalPrestretch optimal_prestretch(const MaterialModel& model);

}  // namespace eap
