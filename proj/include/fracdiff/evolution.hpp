#ifndef FRACDIFF_EVOLUTION_HPP
#define FRACDIFF_EVOLUTION_HPP

#include <functional>
#include <utility>
#include <vector>

#include "fracdiff/operator.hpp"

namespace fracdiff {

using Forcing = std::function<GridFunction(double)>;

Forcing zero_forcing(const Grid& g);
Forcing constant_forcing(GridFunction f);

struct EvolutionProblem {
    GridFunction u0;
    Forcing f;
    FracOrder alpha;
    Coefficient p;
    double T = 1.0;
    int steps = 1;
    int store_every = 1; // snapshot stride; first and last states are always kept
};

/// Backward-Euler trajectory.  `times/states/ut_proxy` hold the stored
/// snapshots (u_t is proxied by A_h u + f, zero at the constraint slots);
/// `all_times/all_l2_norms` log every step.
struct Trajectory {
    std::vector<double> times;
    std::vector<GridFunction> states;
    std::vector<GridFunction> ut_proxy;
    std::vector<double> all_times;
    std::vector<double> all_l2_norms;
};

// One implicit Euler step: solves (I - tau A_h) u' = u + tau f_next with the
// constraint rows enforced.
GridFunction step_backward_euler(const OperatorMatrix& A, const GridFunction& u,
                                 double tau, const GridFunction& f_next);

Trajectory evolve(const EvolutionProblem& prob);

struct SmoothingReport {
    double sup_ratio = 0.0;
    std::vector<std::pair<double, double>> table; // (t, t*||u_t||/||u0||)
};

// sup over stored t > 0 of t ||u_t(t)|| / ||u0||, using the stored derivative
// proxy (meaningful for f == 0 trajectories).
SmoothingReport smoothing_probe(const Trajectory& traj);

} // namespace fracdiff

#endif
