#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bandgap/integrator.hpp"
#include "bandgap/spectral.hpp"

namespace bandgap {

using Vector6c = Eigen::Matrix<Complex, 6, 1>;
using Matrix6c = Eigen::Matrix<Complex, 6, 6>;

// Amplitudes of the no-jump two-excitation wavefunction at one time.
// Basis order (qubit ladder state, pseudomode-1 photons, pseudomode-2
// photons):
//   0: |2,0,0>   1: |+,0,1>   2: |+,1,0>
//   3: |0,0,2>   4: |0,1,1>   5: |0,2,0>
struct AmplitudeState {
    double t = 0.0;
    Vector6c c = Vector6c::Zero();
};

// Sum of |C_i|^2; 1 at t = 0 and nonincreasing afterwards.
double norm(const AmplitudeState& s);

struct Trajectory {
    PseudomodeParams params;
    std::vector<AmplitudeState> samples;

    // Sample whose time matches t within tol; throws if absent.
    const AmplitudeState& at_time(double t, double tol = 1e-9) const;
};

// Generator A of dC/dt = A C in the frame rotating at the qubit
// frequency. The anti-Hermitian part carries the couplings
// {sqrt(2) Omega, 2 Omega, V, sqrt(2) V}; the Hermitian part is the
// diagonal damping -(n1 gamma1p + n2 gamma2p)/2 per basis state.
Matrix6c drift_matrix(const PseudomodeParams& params);

// Integrates from the standard initial condition C = (1,0,0,0,0,0).
// t_grid must start at 0 and be strictly increasing.
Trajectory evolve(const PseudomodeParams& params,
                  const std::vector<double>& t_grid,
                  const IntegratorOptions& opts = {});

// Arbitrary initial amplitudes; intended for tests.
Trajectory evolve_from(const PseudomodeParams& params, const Vector6c& c0,
                       const std::vector<double>& t_grid,
                       const IntegratorOptions& opts = {});

}  // namespace bandgap
