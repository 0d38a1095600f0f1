#include "bandgap/dynamics.hpp"

#include <cmath>
#include <string>

namespace bandgap {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void check_grid(const std::vector<double>& t_grid) {
    if (t_grid.empty()) {
        throw std::invalid_argument("evolve: empty time grid");
    }
    if (t_grid.front() != 0.0) {
        throw std::invalid_argument("evolve: time grid must start at 0");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw std::invalid_argument("evolve: time grid must be strictly increasing");
        }
    }
}

}  // namespace

double norm(const AmplitudeState& s) { return s.c.squaredNorm(); }

const AmplitudeState& Trajectory::at_time(double t, double tol) const {
    for (const auto& s : samples) {
        if (std::abs(s.t - t) <= tol) return s;
    }
    throw std::invalid_argument("Trajectory: no sample at t = " + std::to_string(t));
}

Matrix6c drift_matrix(const PseudomodeParams& params) {
    const double om = params.Omega;
    const double v = params.V;
    const double d = params.delta;

    Eigen::Matrix<double, 6, 6> h = Eigen::Matrix<double, 6, 6>::Zero();
    h(0, 1) = h(1, 0) = kSqrt2 * om;
    h(1, 3) = h(3, 1) = 2.0 * om;
    h(1, 2) = h(2, 1) = v;
    h(2, 4) = h(4, 2) = kSqrt2 * om;
    h(3, 4) = h(4, 3) = kSqrt2 * v;
    h(4, 5) = h(5, 4) = kSqrt2 * v;
    h.diagonal() << 0.0, d, d, 2.0 * d, 2.0 * d, 2.0 * d;

    // half the decay rate accumulated over the photon content
    Eigen::Matrix<double, 6, 1> damp;
    damp << 0.0, params.gamma2p / 2.0, params.gamma1p / 2.0, params.gamma2p,
        (params.gamma1p + params.gamma2p) / 2.0, params.gamma1p;

    Matrix6c a = Complex(0.0, -1.0) * h.cast<Complex>();
    a.diagonal() -= damp.cast<Complex>();
    return a;
}

Trajectory evolve_from(const PseudomodeParams& params, const Vector6c& c0,
                       const std::vector<double>& t_grid,
                       const IntegratorOptions& opts) {
    check_grid(t_grid);

    const Matrix6c a = drift_matrix(params);
    OdeRhs rhs = [&a](double, const Eigen::VectorXcd& y, Eigen::VectorXcd& dydt) {
        dydt.noalias() = a * y;
    };

    AdaptiveRk stepper(rhs, c0, 0.0, opts);

    Trajectory traj{params, {}};
    traj.samples.reserve(t_grid.size());
    double prev_norm = c0.squaredNorm();
    for (double t : t_grid) {
        stepper.advance_to(t);
        AmplitudeState s;
        s.t = t;
        s.c = stepper.state();
        const double n = norm(s);
        if (n > prev_norm + 1e-9 || n > 1.0 + 1e-9) {
            throw NumericalError("evolve: norm grew beyond tolerance at t = " +
                                 std::to_string(t));
        }
        prev_norm = std::min(prev_norm, n);
        traj.samples.push_back(std::move(s));
    }
    return traj;
}

Trajectory evolve(const PseudomodeParams& params,
                  const std::vector<double>& t_grid,
                  const IntegratorOptions& opts) {
    Vector6c c0 = Vector6c::Zero();
    c0(0) = 1.0;
    return evolve_from(params, c0, t_grid, opts);
}

}  // namespace bandgap
