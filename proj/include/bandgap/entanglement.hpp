#pragma once

#include <Eigen/Dense>

#include "bandgap/protocol.hpp"

namespace bandgap {

// Which argument of the max{...} won. UTerm is the inner-block
// coherence |u| - sqrt(xw), VTerm the anti-diagonal one |v| - sqrt(yz);
// General marks a positive value from the eigenvalue formula, which
// does not distinguish the two.
enum class ConcurrenceBranch { Zero, UTerm, VTerm, General };

struct ConcurrenceResult {
    double value = 0.0;
    ConcurrenceBranch branch = ConcurrenceBranch::Zero;
};

// Wootters formula C = max{0, sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4)} with
// l_i the eigenvalues of rho (sy x sy) rho* (sy x sy) in decreasing
// order, computed through the Hermitian equivalent sqrt(rho) rho~
// sqrt(rho). Input must be Hermitian (1e-10), trace 1 (1e-10) and PSD
// (eigenvalues >= -1e-9).
ConcurrenceResult concurrence_general(const Eigen::Matrix4cd& rho);

// Closed form for an X state
//   [[x,0,0,v],[0,y,u,0],[0,u*,z,0],[v*,0,0,w]]:
// C = 2 max{0, |u|-sqrt(xw), |v|-sqrt(yz)}.
ConcurrenceResult concurrence_x(double x, double y, double z, double w,
                                Complex u, Complex v);

// Concurrence of a post-measured pipeline state,
// C = (2/P) max{0, |d| - c/2}. The inner-block term c/2 - sqrt(ab) is
// checked to be nonpositive (it always is for pipeline states) and a
// NumericalError reports any violation.
ConcurrenceResult concurrence_protocol(const XComponents& post);

}  // namespace bandgap
