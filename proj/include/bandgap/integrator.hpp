#pragma once

#include <functional>

#include <Eigen/Dense>

#include "bandgap/common.hpp"

namespace bandgap {

struct IntegratorOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double max_step = 0.25;
    double first_step = 0.0;  // 0 = pick automatically
    long long max_steps = 50'000'000;
};

using OdeRhs =
    std::function<void(double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& dydt)>;

// Explicit Dormand-Prince 5(4) pair with an embedded error estimate.
// Grid output is produced by clipping the step to the requested target
// time; there is no interpolation. The adapted step size survives
// across advance_to() calls so dense grids do not reset the controller.
class AdaptiveRk {
public:
    // post_step, when set, is applied to the state after every accepted
    // step (used to re-hermitize density matrices).
    AdaptiveRk(OdeRhs rhs, Eigen::VectorXcd y0, double t0,
               const IntegratorOptions& opts,
               std::function<void(double, Eigen::VectorXcd&)> post_step = {});

    // Integrates up to t_target (>= current time). Throws NumericalError
    // on step-size underflow or non-finite state, reporting the time.
    void advance_to(double t_target);

    const Eigen::VectorXcd& state() const { return y_; }
    double time() const { return t_; }

private:
    void check_finite() const;

    OdeRhs rhs_;
    Eigen::VectorXcd y_;
    double t_;
    IntegratorOptions opts_;
    std::function<void(double, Eigen::VectorXcd&)> post_step_;
    double h_ = 0.0;
    long long steps_taken_ = 0;

    // stage storage
    Eigen::VectorXcd k1_, k2_, k3_, k4_, k5_, k6_, k7_, ytmp_, y5_, y4_;
};

}  // namespace bandgap
