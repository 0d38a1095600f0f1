#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bandgap/entanglement.hpp"
#include "bandgap/integrator.hpp"
#include "bandgap/protocol.hpp"
#include "bandgap/spectral.hpp"

namespace bandgap {

// Product state |q_A, q_B, n1, n2> with q in {g=0, e=1} and n_i photons
// in pseudomode i.
struct BasisKet {
    int qa = 0;
    int qb = 0;
    int n1 = 0;
    int n2 = 0;

    int excitation() const { return qa + qb + n1 + n2; }
    bool operator==(const BasisKet&) const = default;
};

// All kets with total excitation <= max_excitation, ordered by
// excitation number then lexicographically by (qa, qb, n1, n2).
// Dimension is 13 for the standard cutoff 2. The cutoff is exact for
// the dynamics here: the drift conserves the excitation number and the
// jumps lower it.
class TruncatedBasis {
public:
    explicit TruncatedBasis(int max_excitation = 2);

    int size() const { return static_cast<int>(kets_.size()); }
    const BasisKet& ket(int i) const { return kets_[i]; }
    int index_of(const BasisKet& k) const;  // -1 when outside the basis

private:
    std::vector<BasisKet> kets_;
};

struct OracleState {
    double t = 0.0;
    Eigen::MatrixXcd rho;
};

// Cached operators of the qubits + two-pseudomode Lindblad model on a
// TruncatedBasis.
class OracleModel {
public:
    explicit OracleModel(const PseudomodeParams& params,
                         int max_excitation = 2);

    const TruncatedBasis& basis() const { return basis_; }
    const PseudomodeParams& params() const { return params_; }
    const Eigen::MatrixXcd& hamiltonian() const { return H_; }
    const Eigen::MatrixXcd& a1() const { return a1_; }
    const Eigen::MatrixXcd& a2() const { return a2_; }

    // -i[H,rho] + gamma1p D[a1](rho) + gamma2p D[a2](rho)
    Eigen::MatrixXcd rhs(const Eigen::MatrixXcd& rho) const;

private:
    PseudomodeParams params_;
    TruncatedBasis basis_;
    Eigen::MatrixXcd H_, a1_, a2_;
};

// Rotating-frame Hamiltonian: delta (n1 + n2)
//   + Omega (a2 (sA+ + sB+) + h.c.) + V (a1^dag a2 + a1 a2^dag).
Eigen::MatrixXcd build_hamiltonian(const PseudomodeParams& params,
                                   const TruncatedBasis& basis);

Eigen::MatrixXcd lindblad_rhs(const OracleModel& model,
                              const Eigen::MatrixXcd& rho);

// Adaptive integration of the master equation; the state is
// re-hermitized after every accepted step.
std::vector<OracleState> evolve_me(const OracleModel& model,
                                   const Eigen::MatrixXcd& rho0,
                                   const std::vector<double>& t_grid,
                                   const IntegratorOptions& opts = {});

// Pre-measured Bell-like qubit state tensored with the pseudomode
// vacuum, as a density matrix on the truncated basis.
Eigen::MatrixXcd initial_oracle_state(const TruncatedBasis& basis,
                                      const InitialState& init, double p);

// Partial trace over both pseudomodes; 4x4 in {|gg>,|ge>,|eg>,|ee>}.
Eigen::Matrix4cd reduced_qubits(const TruncatedBasis& basis,
                                const Eigen::MatrixXcd& rho);

// Post-measurement map on the two-qubit factor. Returns the normalized
// state and stores the success probability.
Eigen::Matrix4cd apply_post_measurement(const Eigen::Matrix4cd& rho_qubits,
                                        double p_r, PostBranch branch,
                                        double* success);

struct OracleProtocolResult {
    ConcurrenceResult concurrence;
    double success = 0.0;  // pre-measurement success x branch success
    PostBranch branch = PostBranch::Reversal;
};

// Full protocol on the exact master-equation state: pre-measure,
// evolve, branch-select on the reduced diagonal, post-measure,
// renormalize, take the concurrence.
OracleProtocolResult oracle_protocol(const InitialState& init, double p,
                                     double p_r,
                                     const PseudomodeParams& params, double t,
                                     const IntegratorOptions& opts = {});

}  // namespace bandgap
