#pragma once

#include "bandgap/common.hpp"

namespace bandgap {

// Band-gap density of states built from two Lorentzians centered at
// omega_c, the second one entering with negative weight so that the
// profile develops a dip. Weights satisfy W1 - W2 = 1. All rates are in
// units of the qubit-pseudomode coupling Omega.
struct BandGapSpectrum {
    double W1;
    double W2;
    double Gamma1;
    double Gamma2;
    double omega_c;

    BandGapSpectrum(double W1, double W2, double Gamma1, double Gamma2,
                    double omega_c = 0.0);
};

// Dissipative two-pseudomode model equivalent to a BandGapSpectrum.
// The qubits couple (strength Omega) only to the second pseudomode,
// which leaks into the first one with strength V; both decay into
// independent Markovian reservoirs with rates gamma1p and gamma2p.
struct PseudomodeParams {
    double gamma1p;
    double gamma2p;
    double V;
    double Omega = 1.0;     // unit of every rate in the model
    double delta = 0.0;     // omega_c - omega_0

    PseudomodeParams(double gamma1p, double gamma2p, double V,
                     double delta = 0.0);
};

// D(omega); may come out negative for parameter sets outside the
// physical regime -- returned as computed, never clamped.
double spectral_density(double omega, const BandGapSpectrum& s);

// Closed-form pseudomode decomposition:
//   gamma1p = W1*Gamma2 - W2*Gamma1
//   gamma2p = W1*Gamma1 - W2*Gamma2
//   V       = sqrt(W1*W2) * (Gamma1 - Gamma2) / 2
// Throws std::invalid_argument when the decomposition is unphysical
// (gamma1p < 0 or gamma2p <= 0).
PseudomodeParams derive_pseudomodes(const BandGapSpectrum& s,
                                    double delta = 0.0);

// True iff |W1/Gamma1 - W2/Gamma2| <= tol, i.e. D(omega_c) = 0 and the
// first pseudomode becomes lossless.
bool check_perfect_gap(const BandGapSpectrum& s, double tol = 1e-12);

// Heuristic marker for leaving the weak-coupling regime; used by the
// CLI to print a non-fatal diagnostic.
bool strong_coupling_hint(const PseudomodeParams& p);

}  // namespace bandgap
