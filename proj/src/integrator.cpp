#include "bandgap/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bandgap {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;

// 5th order solution weights (also the a7j row).
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;

// embedded 4th order weights
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

}  // namespace

AdaptiveRk::AdaptiveRk(OdeRhs rhs, Eigen::VectorXcd y0, double t0,
                       const IntegratorOptions& opts,
                       std::function<void(double, Eigen::VectorXcd&)> post_step)
    : rhs_(std::move(rhs)),
      y_(std::move(y0)),
      t_(t0),
      opts_(opts),
      post_step_(std::move(post_step)) {
    if (!(opts_.rtol > 0.0) || !(opts_.atol > 0.0)) {
        throw std::invalid_argument("IntegratorOptions: tolerances must be positive");
    }
    if (!(opts_.max_step > 0.0)) {
        throw std::invalid_argument("IntegratorOptions: max_step must be positive");
    }
    const auto n = y_.size();
    k1_.resize(n); k2_.resize(n); k3_.resize(n); k4_.resize(n);
    k5_.resize(n); k6_.resize(n); k7_.resize(n);
    ytmp_.resize(n); y5_.resize(n); y4_.resize(n);
}

void AdaptiveRk::check_finite() const {
    if (!y_.allFinite()) {
        throw NumericalError("non-finite state detected at t = " + std::to_string(t_));
    }
}

void AdaptiveRk::advance_to(double t_target) {
    if (t_target < t_) {
        throw std::invalid_argument("AdaptiveRk: cannot integrate backwards");
    }
    if (h_ <= 0.0) {
        h_ = opts_.first_step > 0.0 ? opts_.first_step
                                    : std::min(opts_.max_step, 1e-3);
    }

    while (t_ < t_target) {
        const double span = t_target - t_;
        double h = std::min({h_, opts_.max_step, span});
        const double h_floor = 1e-14 * std::max(1.0, std::abs(t_));
        if (h < h_floor) {
            // step clipping can legitimately produce a micro-step to land
            // exactly on the grid point; only an error-controlled
            // underflow is fatal, which is detected below.
            h = h_floor;
        }

        rhs_(t_, y_, k1_);
        ytmp_ = y_ + h * (a21 * k1_);
        rhs_(t_ + c2 * h, ytmp_, k2_);
        ytmp_ = y_ + h * (a31 * k1_ + a32 * k2_);
        rhs_(t_ + c3 * h, ytmp_, k3_);
        ytmp_ = y_ + h * (a41 * k1_ + a42 * k2_ + a43 * k3_);
        rhs_(t_ + c4 * h, ytmp_, k4_);
        ytmp_ = y_ + h * (a51 * k1_ + a52 * k2_ + a53 * k3_ + a54 * k4_);
        rhs_(t_ + c5 * h, ytmp_, k5_);
        ytmp_ = y_ + h * (a61 * k1_ + a62 * k2_ + a63 * k3_ + a64 * k4_ + a65 * k5_);
        rhs_(t_ + h, ytmp_, k6_);
        y5_ = y_ + h * (b1 * k1_ + b3 * k3_ + b4 * k4_ + b5 * k5_ + b6 * k6_);
        rhs_(t_ + h, y5_, k7_);
        y4_ = y_ + h * (e1 * k1_ + e3 * k3_ + e4 * k4_ + e5 * k5_ + e6 * k6_ + e7 * k7_);

        // weighted RMS error norm
        double err_sq = 0.0;
        for (Eigen::Index i = 0; i < y_.size(); ++i) {
            const double scale =
                opts_.atol +
                opts_.rtol * std::max(std::abs(y_[i]), std::abs(y5_[i]));
            const double e = std::abs(y5_[i] - y4_[i]) / scale;
            err_sq += e * e;
        }
        const double err = std::sqrt(err_sq / static_cast<double>(y_.size()));

        if (err <= 1.0) {
            t_ += h;
            y_.swap(y5_);
            if (post_step_) post_step_(t_, y_);
            check_finite();
        }

        const double factor =
            err > 0.0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
        h_ = h * factor;

        if (err > 1.0 && h <= h_floor) {
            throw NumericalError(
                "step size underflow (stiffness?) at t = " + std::to_string(t_));
        }
        if (++steps_taken_ > opts_.max_steps) {
            throw NumericalError("step budget exhausted at t = " + std::to_string(t_));
        }
    }
}

}  // namespace bandgap
