#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

namespace metapool {

/// Particle-swarm settings. Defaults follow the standard
/// constriction-coefficient parametrization (Clerc & Kennedy).
struct GammaFitConfig {
    int swarm_size = 40;
    int max_iters = 500;
    double inertia = 0.7298;
    double cognitive = 1.49618;
    double social = 1.49618;
    double tolerance = 1e-10; ///< minimum best-value improvement still counted as progress
    std::uint64_t seed = 0;
};

/// Result of a bounded swarm minimization.
struct PsoResult {
    Eigen::VectorXd argmin;
    double value = 0.0;
    bool converged = false; ///< stalled (no improvement > tolerance for 50 iterations)
    int iterations = 0;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Minimizes `objective` over the box [lower, upper] with a global-best
/// particle swarm. Positions are clamped to the box every step. Optional
/// `seeds` are injected as initial particle positions (clamped). Runs until
/// the best value has not improved by more than cfg.tolerance for 50
/// consecutive iterations, or cfg.max_iters. Identical seeds and inputs give
/// bitwise-identical results.
///
/// Throws InvalidBoundsError unless lower < upper componentwise.
PsoResult pso_minimize(const Objective& objective, const Eigen::VectorXd& lower,
                       const Eigen::VectorXd& upper, const GammaFitConfig& cfg,
                       const std::vector<Eigen::VectorXd>& seeds = {});

} // namespace metapool
