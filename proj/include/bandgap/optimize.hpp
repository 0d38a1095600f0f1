#pragma once

#include <vector>

#include "bandgap/entanglement.hpp"

namespace bandgap {

struct OptimalPoint {
    double p_r_star = 0.0;
    double C_opt = 0.0;
    double P_opt = 0.0;
    PostBranch branch = PostBranch::Reversal;
    bool boundary = false;  // closed form undefined (a = 0 or b = 0), grid used
};

// Post-measurement strength maximizing the concurrence:
//   a < b: p_r = 1 - sqrt(a/b) on the WeakMeasurement branch
//   a > b: p_r = 1 - sqrt(b/a) on the Reversal branch
// a = b gives p_r = 0. Degenerate inputs (a = 0 or b = 0) fall back to
// a fine grid scan and are flagged boundary.
OptimalPoint optimal_pr(const XComponents& x);

// Brute-force scan of p_r over [0,1] on both branches; grid_step must
// be in (0, 0.01].
OptimalPoint grid_validate(const XComponents& x, double grid_step = 1e-4);

struct OptimalSample {
    double omega_t = 0.0;
    OptimalPoint opt;
};

// Optimal trapping curve: one OptimalPoint per grid time.
std::vector<OptimalSample> optimal_curves(const InitialState& init, double p,
                                          const PseudomodeParams& params,
                                          const std::vector<double>& t_grid,
                                          const IntegratorOptions& opts = {});

enum class ReversalPolicy { Zero, Optimal };

struct EsdResult {
    double p_star = 0.0;        // smallest pre-measurement strength without ESD
    bool esd_at_zero = false;   // concurrence vanishes at finite time when p = 0
    double t_first_zero = -1.0; // first zero time at p = 0; -1 when none
};

// Bisects the predicate "C(t) stays positive on [0, t_max]" over p.
// The time scan uses a 2000-point grid refined tenfold around sign
// changes; the predicate is checked for monotonicity on a coarse p grid
// before bisection and a NumericalError carries the bracketing data if
// that fails. Returns p_star within tol_p.
EsdResult esd_threshold(const InitialState& init,
                        const PseudomodeParams& params, ReversalPolicy policy,
                        double t_max, double tol_p,
                        const IntegratorOptions& opts = {});

struct SweepSpec {
    std::vector<double> thetas;
    std::vector<double> ps;
    std::vector<double> p_rs;
    std::vector<double> times;
};

struct SweepRow {
    double theta = 0.0;
    double p = 0.0;
    double p_r = 0.0;
    double omega_t = 0.0;
    PostBranch branch = PostBranch::Reversal;
    double C = 0.0;
    double P = 0.0;
};

// Cartesian sweep in the fixed order theta x p x p_r x t. Rows are
// evaluated by a worker pool but returned in input order; threads = 0
// uses BANDGAP_TRAP_THREADS or the hardware concurrency.
std::vector<SweepRow> sweep(const SweepSpec& spec,
                            const PseudomodeParams& params,
                            const IntegratorOptions& opts = {},
                            int threads = 0);

}  // namespace bandgap
