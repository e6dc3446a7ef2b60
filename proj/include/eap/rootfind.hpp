#pragma once

#include <cmath>
#include <string>

#include "eap/errors.hpp"

namespace eap {

/// Root of f on [lo, hi]; requires a sign change. Bisects until no midpoint
/// is representable, then polishes with a few secant steps, returning the
/// candidate with the smallest residual.
template <class F>
double find_root(F&& f, double lo, double hi, int max_iter = 200) {
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo < 0.0) == (f_hi < 0.0)) {
        throw SolverError("find_root: no sign change on bracket [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], f = " + std::to_string(f_lo) + " .. " +
                          std::to_string(f_hi));
    }
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket is one ulp wide
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    double best = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
    double best_res = std::min(std::abs(f_lo), std::abs(f_hi));
    // Secant polish within the final bracket.
    double a = lo, fa = f_lo, b = hi, fb = f_hi;
    for (int it = 0; it < 3 && fa != fb; ++it) {
        const double x = a - fa * (b - a) / (fb - fa);
        if (!std::isfinite(x)) break;
        const double fx = f(x);
        if (std::abs(fx) < best_res) {
            best = x;
            best_res = std::abs(fx);
        }
        a = b;
        fa = fb;
        b = x;
        fb = fx;
    }
    return best;
}

struct MaxResult {
    double x = 0.0;
    double value = 0.0;
};

/// Golden-section maximization of f on [lo, hi] down to interval width x_tol.
/// Assumes f is unimodal on the bracket; otherwise returns a local maximum.
template <class F>
MaxResult golden_max(F&& f, double lo, double hi, double x_tol, int max_iter = 400) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > x_tol; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    MaxResult r{x1, f1};
    if (f2 > r.value) r = {x2, f2};
    const double xm = 0.5 * (a + b);
    const double fm = f(xm);
    if (fm > r.value) r = {xm, fm};
    return r;
}

}  // namespace eap
