#pragma once

#include <optional>
#include <vector>

#include "eap/stress.hpp"

namespace eap {

/// Residual tolerance, relative to max(mu, 1), met by boundary samples and
/// vertex solves.
inline constexpr double kResidualTol = 1e-10;

/// Stretch cap for bracket expansion in the generic solvers.
inline constexpr double kLambdaCap = 1e6;

/// Natural width nu(lambda1, k_v): the transverse stretch at which the
/// transverse stress vanishes under uniaxial tension. Closed form for
/// constant-moduli models,
///   nu = lambda1^-1/2 [ (c1 + c2 l1^2) / (c1 + c2 l1^2 - k_v l1^2) ]^1/4,
/// solved numerically for Generic models. nullopt when no solution exists
/// (lambda1 at or beyond the vertical asymptote).
std::optional<double> natural_width(const MaterialModel& model, double lambda1, double k_v);

/// Stretch of the vertical asymptote of nu, lambda* = sqrt(c1 / (k_v - c2));
/// nullopt when k_v <= c2 (the tensile domain stays unbounded). For Generic
/// models the no-solution onset is bracketed numerically; nullopt when no
/// onset is found below the stretch cap.
std::optional<double> asymptote(const MaterialModel& model, double k_v);

/// Equibiaxial stretches where both stresses vanish (the vertices of the
/// tensile domain): all lambda > 0 with nu(lambda, k_v) = lambda, i.e. roots
/// of the diagonal stress. Sorted ascending; 0, 1, or 2 entries.
std::vector<double> vertices(const MaterialModel& model, double k_v);

struct BoundarySample {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double t2_residual = 0.0;  // residual of the defining equation t2 = 0
};

/// Sampled lower boundary curve lambda2 = nu(lambda1, k_v) of the tensile
/// domain (the lambda1 >= lambda2 branch; the mirror curve is its swap).
struct DomainBoundary {
    double k_v = 0.0;
    std::vector<BoundarySample> samples;  // strictly increasing in lambda1
    std::vector<double> vertices;
    std::optional<double> asymptote;
    bool truncated = false;  // requested range crossed the asymptote
};

/// Samples the boundary curve at n log-spaced nodes over
/// [lambda1_min, lambda1_max]; nodes at or beyond the asymptote are dropped
/// and flagged via `truncated`.
DomainBoundary boundary(const MaterialModel& model, double k_v, double lambda1_min,
                        double lambda1_max, int n);

/// Membership in the open tensile domain D(k_v):
/// lambda1 > nu(lambda2, k_v) and lambda2 > nu(lambda1, k_v).
bool contains(const MaterialModel& model, const StretchState& s, double k_v);

struct CriticalPoint {
    double k_v_crit = 0.0;
    double lambda_crit = 0.0;
};

/// Result of the critical-activation search. Unbounded means the equibiaxial
/// activation function k_v(lambda) kept growing up to the stretch cap, so no
/// coalescence point exists below it.
struct CriticalResult {
    enum class Status { Converged, Unbounded };
    Status status = Status::Converged;
    CriticalPoint point;

    bool converged() const { return status == Status::Converged; }
};

/// Activation at which the two equibiaxial vertices coalesce and the tensile
/// domain vanishes. Closed form for c2 = 0 models
/// (k_v^crit = 3 mu / 2^(11/3) at lambda^crit = 2^(1/3)); otherwise the
/// generic search below.
CriticalResult critical_activation(const MaterialModel& model);

/// Always uses the generic path: maximize the diagonal activation
/// k_v(lambda) = t_diag(lambda; 0) / (2 lambda^4) over lambda > 1 by a coarse
/// log scan plus golden-section refinement.
CriticalResult critical_activation_generic(const MaterialModel& model);

}  // namespace eap
