#include "metapool/pso.hpp"

#include <cmath>
#include <random>

#include "metapool/errors.hpp"

namespace metapool {

namespace {

// Uniform double in [0, 1) from the raw engine output; avoids
// std::uniform_real_distribution, whose output is implementation-defined.
inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

constexpr int kStallWindow = 50;

} // namespace

PsoResult pso_minimize(const Objective& objective, const Eigen::VectorXd& lower,
                       const Eigen::VectorXd& upper, const GammaFitConfig& cfg,
                       const std::vector<Eigen::VectorXd>& seeds) {
    const Eigen::Index dim = lower.size();
    if (dim == 0 || upper.size() != dim) {
        throw InvalidBoundsError("pso_minimize: bounds must be nonempty and of equal length");
    }
    for (Eigen::Index d = 0; d < dim; ++d) {
        if (!(lower[d] < upper[d])) {
            throw InvalidBoundsError("pso_minimize: lower must be < upper componentwise");
        }
    }
    const int n = std::max(cfg.swarm_size, 2);
    const Eigen::VectorXd range = upper - lower;

    std::mt19937_64 rng(cfg.seed);
    std::vector<Eigen::VectorXd> pos(n), vel(n), best(n);
    std::vector<double> best_val(n);

    auto clamp = [&](Eigen::VectorXd& x, Eigen::VectorXd* v) {
        for (Eigen::Index d = 0; d < dim; ++d) {
            if (x[d] < lower[d]) {
                x[d] = lower[d];
                if (v) (*v)[d] = 0.0;
            } else if (x[d] > upper[d]) {
                x[d] = upper[d];
                if (v) (*v)[d] = 0.0;
            }
        }
    };

    int g = 0;
    for (int i = 0; i < n; ++i) {
        if (i < static_cast<int>(seeds.size())) {
            pos[i] = seeds[i];
            clamp(pos[i], nullptr);
        } else {
            pos[i].resize(dim);
            for (Eigen::Index d = 0; d < dim; ++d) pos[i][d] = lower[d] + unit(rng) * range[d];
        }
        vel[i].resize(dim);
        for (Eigen::Index d = 0; d < dim; ++d) vel[i][d] = (unit(rng) - 0.5) * range[d];
        best[i] = pos[i];
        best_val[i] = objective(pos[i]);
        if (best_val[i] < best_val[g]) g = i;
    }

    double gbest_val = best_val[g];
    Eigen::VectorXd gbest = best[g];
    int stall = 0;
    int iter = 0;
    for (; iter < cfg.max_iters; ++iter) {
        for (int i = 0; i < n; ++i) {
            for (Eigen::Index d = 0; d < dim; ++d) {
                const double r1 = unit(rng);
                const double r2 = unit(rng);
                vel[i][d] = cfg.inertia * vel[i][d] +
                            cfg.cognitive * r1 * (best[i][d] - pos[i][d]) +
                            cfg.social * r2 * (gbest[d] - pos[i][d]);
            }
            pos[i] += vel[i];
            clamp(pos[i], &vel[i]);
            const double f = objective(pos[i]);
            if (f < best_val[i]) {
                best_val[i] = f;
                best[i] = pos[i];
            }
        }
        double round_best = gbest_val;
        for (int i = 0; i < n; ++i) {
            if (best_val[i] < round_best) {
                round_best = best_val[i];
                gbest = best[i];
            }
        }
        if (gbest_val - round_best > cfg.tolerance) {
            stall = 0;
        } else {
            ++stall;
        }
        gbest_val = round_best;
        if (stall >= kStallWindow) {
            ++iter;
            break;
        }
    }

    PsoResult res;
    res.argmin = gbest;
    res.value = gbest_val;
    res.converged = stall >= kStallWindow;
    res.iterations = iter;
    return res;
}

} // namespace metapool
