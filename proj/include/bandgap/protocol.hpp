#pragma once

#include <Eigen/Dense>

#include "bandgap/dynamics.hpp"

namespace bandgap {

// Bell-like initial state cos(theta)|ee> + sin(theta)|gg>.
struct InitialState {
    double theta;

    // Rejects theta outside the open interval (0, pi); the endpoints are
    // product states and make the protocol trivial.
    explicit InitialState(double theta);

    // Degenerate angles, for tests.
    static InitialState unchecked(double theta);

    double cos_theta() const;
    double sin_theta() const;

private:
    InitialState() = default;
};

struct MeasurementStrengths {
    double p = 0.0;
    double p_r = 0.0;

    MeasurementStrengths(double p, double p_r);
};

// Normalized state after the pre-measurement that damps |e> on each
// qubit with strength p: (cos(theta)(1-p)|ee> + sin(theta)|gg>)/sqrt(N).
struct PreMeasurement {
    double amp_ee = 0.0;
    double amp_gg = 1.0;
    double success = 0.0;        // cos^2(theta)(1-p)^2 + sin^2(theta)
    bool degenerate = false;     // nothing survived; |gg> returned
};

PreMeasurement pre_measure(const InitialState& init, double p);

// Unnormalized ingredients of the reduced two-qubit X state in the
// {|0>=|gg>, |+>, |2>=|ee>} decomposition:
//   a  weight of |0><0|,  b  weight of |2><2|,  c  weight of |+><+|,
//   d  coherence <2|.|0>,  P = a + b + c  success probability.
struct XComponents {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    Complex d{0.0, 0.0};
    double P = 0.0;
};

// Builds the X components from the amplitude state reached at time t
// after a pre-measurement of strength p.
XComponents assemble_x(const InitialState& init, double p,
                       const AmplitudeState& amps);

enum class PostBranch { WeakMeasurement, Reversal };

// WeakMeasurement when a < b, Reversal when a > b; ties go to Reversal
// (both branches coincide there, with optimum p_r = 0).
PostBranch select_branch(const XComponents& x);

// Applies the chosen post-measurement of strength p_r:
//   WeakMeasurement: (a, b(1-p_r)^2, c(1-p_r), d(1-p_r))
//   Reversal:        (a(1-p_r)^2, b, c(1-p_r), d(1-p_r))
// The returned P is the branch success probability. Throws
// NumericalError when p_r = 1 kills every surviving weight.
XComponents post_measure(const XComponents& x, double p_r, PostBranch branch);

// Trace-1 density matrix in the basis {|gg>, |ge>, |eg>, |ee>}; entries
// outside the X pattern are exactly zero.
Eigen::Matrix4cd to_density_matrix(const XComponents& x);

}  // namespace bandgap
