#pragma once

#include <cmath>
#include <random>

#include "eap/stress.hpp"

namespace testsupport {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

/// Central finite-difference stress oracle from the reduced energy:
/// t_i = lambda_i dW/dlambda_i.
struct FdStress {
    double t1;
    double t2;
};

inline FdStress fd_stress(const eap::MaterialModel& model, double l1, double l2, double k_v,
                          double delta = 1e-6) {
    const auto w = [&](double a, double b) {
        return *eap::reduced_energy(model, eap::StretchState(a, b), k_v);
    };
    return {l1 * (w(l1 + delta, l2) - w(l1 - delta, l2)) / (2.0 * delta),
            l2 * (w(l1, l2 + delta) - w(l1, l2 - delta)) / (2.0 * delta)};
}

}  // namespace testsupport
