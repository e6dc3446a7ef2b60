#include "eap/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eap/rootfind.hpp"

namespace eap {

namespace {

void check_activation(double k_v) {
    if (!std::isfinite(k_v) || k_v < 0.0) {
        throw InvalidLoad("activation parameter must be finite and nonnegative");
    }
}

void check_stretch(double lambda) {
    if (!std::isfinite(lambda) || lambda <= 0.0) {
        throw InvalidStretch("stretch must be positive and finite");
    }
}

double diag_stress(const MaterialModel& model, double lambda, double k_v) {
    return detail::raw_plane_stress(model, lambda, lambda, k_v).t1;
}

/// Magnitude of the terms summed in t2; the evaluation noise floor is a few
/// ulps of this, which can exceed the residual tolerance near the asymptote.
double t2_term_scale(const MaterialModel& model, double lambda1, double lambda2, double k_v) {
    const double a = lambda1 * lambda1;
    const double b = lambda2 * lambda2;
    const double ab = a * b;
    const double b1 = std::abs(model.beta1(lambda1, lambda2));
    const double b2 = std::abs(model.beta2(lambda1, lambda2));
    return b1 * (b + 1.0 / ab) + b2 * (1.0 / b + ab) + 2.0 * k_v * ab;
}

double residual_tolerance(const MaterialModel& model, double lambda1, double lambda2,
                          double k_v) {
    return std::max(kResidualTol * model.stress_scale(),
                    1e-13 * t2_term_scale(model, lambda1, lambda2, k_v));
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < n; ++i) {
        g[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / (n - 1));
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

/// Transverse-stress root for a Generic model: bracket around the
/// zero-voltage seed lambda1^-1/2 and solve t2(lambda1, ., k_v) = 0.
std::optional<double> generic_natural_width(const MaterialModel& model, double lambda1,
                                            double k_v) {
    const auto f = [&](double l2) {
        return detail::raw_plane_stress(model, lambda1, l2, k_v).t2;
    };
    const double seed = 1.0 / std::sqrt(lambda1);
    const double f_seed = f(seed);
    if (std::abs(f_seed) <= residual_tolerance(model, lambda1, seed, k_v)) return seed;

    double lo, hi;
    if (f_seed < 0.0) {
        // The electric term pushes t2 down at the seed; the root sits above.
        lo = seed;
        hi = seed;
        double f_hi = f_seed;
        while (f_hi < 0.0) {
            lo = hi;
            hi *= 2.0;
            if (hi > kLambdaCap) return std::nullopt;  // no onset of tension below the cap
            f_hi = f(hi);
        }
    } else {
        // Root below the seed (possible for non-Mooney-Rivlin responses).
        hi = seed;
        lo = seed;
        double f_lo = f_seed;
        while (f_lo > 0.0) {
            hi = lo;
            lo *= 0.5;
            if (lo < 1.0 / kLambdaCap) {
                throw SolverError("natural_width: no sign change down to " + std::to_string(lo) +
                                  " for lambda1 = " + std::to_string(lambda1));
            }
            f_lo = f(lo);
        }
    }
    const double root = find_root(f, lo, hi);
    if (std::abs(f(root)) > residual_tolerance(model, lambda1, root, k_v)) {
        throw SolverError("natural_width: residual above tolerance at lambda2 = " +
                          std::to_string(root));
    }
    return root;
}

}  // namespace

std::optional<double> natural_width(const MaterialModel& model, double lambda1, double k_v) {
    check_stretch(lambda1);
    check_activation(k_v);
    if (model.has_constant_moduli()) {
        const double l1s = lambda1 * lambda1;
        const double num = model.c1() + model.c2() * l1s;
        const double den = num - k_v * l1s;
        // Denominators within rounding noise of zero count as the asymptote,
        // so lambda1 = lambda* computed in floating point reports NoSolution.
        if (den <= 4e-16 * (num + k_v * l1s)) return std::nullopt;
        return std::pow(num / den, 0.25) / std::sqrt(lambda1);
    }
    return generic_natural_width(model, lambda1, k_v);
}

std::optional<double> asymptote(const MaterialModel& model, double k_v) {
    check_activation(k_v);
    if (model.has_constant_moduli()) {
        if (k_v <= model.c2()) return std::nullopt;
        return std::sqrt(model.c1() / (k_v - model.c2()));
    }
    // Bracket the finite -> NoSolution onset of the natural width.
    const auto exists = [&](double l1) { return natural_width(model, l1, k_v).has_value(); };
    double lo = 1e-3;
    if (!exists(lo)) {
        // Onset below the probe start; bisect down to the stretch floor.
        double hi = lo;
        lo = 1.0 / kLambdaCap;
        if (!exists(lo)) return 0.0;  // width nowhere defined
        while (hi / lo > 1.0 + 1e-12) {
            const double mid = std::sqrt(lo * hi);
            (exists(mid) ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
    double hi = lo;
    while (exists(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > kLambdaCap) return std::nullopt;  // no onset below the cap
    }
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        (exists(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> vertices(const MaterialModel& model, double k_v) {
    check_activation(k_v);
    const auto f = [&](double l) { return diag_stress(model, l, k_v); };

    double hi = 10.0;
    if (const auto as = asymptote(model, k_v)) hi = std::max(hi, 2.0 * *as);
    constexpr int kScanPoints = 256;
    const auto grid = log_grid(0.1, hi, kScanPoints);

    std::vector<double> values(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) values[i] = f(grid[i]);

    std::vector<double> roots;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        if (values[i] == 0.0) {
            roots.push_back(grid[i]);
        } else if ((values[i] < 0.0) != (values[i + 1] < 0.0)) {
            roots.push_back(find_root(f, grid[i], grid[i + 1]));
        }
    }
    if (values.back() == 0.0) roots.push_back(grid.back());

    if (roots.empty()) {
        // A near-coalescent root pair can hide between two grid nodes; refine
        // around the grid maximum and split the bracket if it peaks positive.
        const size_t j = std::distance(values.begin(), std::max_element(values.begin(), values.end()));
        if (j > 0 && j + 1 < grid.size()) {
            const auto peak = golden_max(f, grid[j - 1], grid[j + 1], 1e-12 * grid[j]);
            if (peak.value > 0.0) {
                roots.push_back(find_root(f, grid[j - 1], peak.x));
                roots.push_back(find_root(f, peak.x, grid[j + 1]));
            }
        }
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (const double r : roots) {
        if (!out.empty() && r - out.back() <= 1e-8 * r) continue;  // degenerate double root
        if (std::abs(f(r)) > residual_tolerance(model, r, r, k_v)) {
            throw SolverError("vertices: residual above tolerance at lambda = " +
                              std::to_string(r) + ", |t| = " + std::to_string(std::abs(f(r))));
        }
        out.push_back(r);
    }
    return out;
}

DomainBoundary boundary(const MaterialModel& model, double k_v, double lambda1_min,
                        double lambda1_max, int n) {
    check_activation(k_v);
    if (!(lambda1_min > 0.0) || !(lambda1_max > lambda1_min) || !std::isfinite(lambda1_max)) {
        throw InvalidArgument("boundary: require 0 < lambda1_min < lambda1_max");
    }
    if (n < 2) throw InvalidArgument("boundary: require at least 2 sample nodes");

    DomainBoundary out;
    out.k_v = k_v;
    out.asymptote = asymptote(model, k_v);
    out.vertices = vertices(model, k_v);
    out.samples.reserve(static_cast<size_t>(n));
    for (const double l1 : log_grid(lambda1_min, lambda1_max, n)) {
        const auto w = natural_width(model, l1, k_v);
        if (!w) {
            out.truncated = true;
            continue;
        }
        const double residual = detail::raw_plane_stress(model, l1, *w, k_v).t2;
        out.samples.push_back({l1, *w, residual});
    }
    return out;
}

bool contains(const MaterialModel& model, const StretchState& s, double k_v) {
    const auto w1 = natural_width(model, s.lambda2, k_v);
    if (!w1 || !(s.lambda1 > *w1)) return false;
    const auto w2 = natural_width(model, s.lambda1, k_v);
    return w2.has_value() && s.lambda2 > *w2;
}

CriticalResult critical_activation(const MaterialModel& model) {
    if (model.has_constant_moduli() && model.c2() == 0.0 && model.c1() > 0.0) {
        const double mu = 2.0 * model.c1();
        return {CriticalResult::Status::Converged,
                {3.0 * mu / std::pow(2.0, 11.0 / 3.0), std::cbrt(2.0)}};
    }
    return critical_activation_generic(model);
}

CriticalResult critical_activation_generic(const MaterialModel& model) {
    // The diagonal stress is linear in the activation,
    //   t(lambda; k_v) = t(lambda; 0) - 2 k_v lambda^4,
    // so the activation that annuls it is explicit.
    const auto kv_of = [&](double lambda) {
        const double l2 = lambda * lambda;
        return diag_stress(model, lambda, 0.0) / (2.0 * l2 * l2);
    };

    constexpr int kScanPoints = 64;
    const auto grid = log_grid(1.0001, kLambdaCap, kScanPoints);
    size_t j = 0;
    double best = -std::numeric_limits<double>::infinity();
    double last = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const double v = kv_of(grid[i]);
        if (v > best) {
            best = v;
            j = i;
        }
        last = v;
    }
    // No coalescence when the maximum sits at the stretch cap or is not
    // separated from the cap value (k_v(lambda) saturating towards c2).
    if (j + 1 == grid.size() || best - last <= 1e-9 * std::abs(best)) {
        return {CriticalResult::Status::Unbounded, {}};
    }
    const double lo = (j == 0) ? 1.0 : grid[j - 1];
    const double hi = grid[j + 1];
    const auto peak = golden_max(kv_of, lo, hi, 1e-9);
    return {CriticalResult::Status::Converged, {peak.value, peak.x}};
}

}  // namespace eap
