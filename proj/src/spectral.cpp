#include "bandgap/spectral.hpp"

#include <cmath>
#include <string>

namespace bandgap {

namespace {

constexpr double kWeightTol = 1e-12;

double gamma1p_of(const BandGapSpectrum& s) {
    return s.W1 * s.Gamma2 - s.W2 * s.Gamma1;
}

double gamma2p_of(const BandGapSpectrum& s) {
    return s.W1 * s.Gamma1 - s.W2 * s.Gamma2;
}

}  // namespace

BandGapSpectrum::BandGapSpectrum(double W1, double W2, double Gamma1,
                                 double Gamma2, double omega_c)
    : W1(W1), W2(W2), Gamma1(Gamma1), Gamma2(Gamma2), omega_c(omega_c) {
    if (!(W1 > 0.0) || !(W2 >= 0.0)) {
        throw std::invalid_argument("BandGapSpectrum: weights must satisfy W1 > 0, W2 >= 0");
    }
    if (std::abs(W1 - W2 - 1.0) > kWeightTol) {
        throw std::invalid_argument("BandGapSpectrum: weights must satisfy W1 - W2 = 1, got " +
                                    std::to_string(W1 - W2));
    }
    if (!(Gamma1 > 0.0) || !(Gamma2 > 0.0)) {
        throw std::invalid_argument("BandGapSpectrum: Lorentzian widths must be positive");
    }
    const double g1p = gamma1p_of(*this);
    const double g2p = gamma2p_of(*this);
    const double scale = std::max(Gamma1, Gamma2);
    if (g1p < -kWeightTol * scale) {
        throw std::invalid_argument(
            "BandGapSpectrum: W1*Gamma2 - W2*Gamma1 = " + std::to_string(g1p) +
            " < 0, no physical pseudomode decomposition");
    }
    if (!(g2p > 0.0)) {
        throw std::invalid_argument(
            "BandGapSpectrum: W1*Gamma1 - W2*Gamma2 = " + std::to_string(g2p) +
            " must be positive");
    }
}

PseudomodeParams::PseudomodeParams(double gamma1p, double gamma2p, double V,
                                   double delta)
    : gamma1p(gamma1p), gamma2p(gamma2p), V(V), delta(delta) {
    if (gamma1p < -kWeightTol) {
        throw std::invalid_argument("PseudomodeParams: gamma1p must be nonnegative");
    }
    // gamma2p = 0 is the closed (unitary) limit; negative rates are not.
    if (gamma2p < 0.0) {
        throw std::invalid_argument("PseudomodeParams: gamma2p must be nonnegative");
    }
    if (!std::isfinite(V) || !std::isfinite(delta)) {
        throw std::invalid_argument("PseudomodeParams: non-finite parameter");
    }
}

double spectral_density(double omega, const BandGapSpectrum& s) {
    const double x = omega - s.omega_c;
    const double l1 = s.W1 * s.Gamma1 / (x * x + 0.25 * s.Gamma1 * s.Gamma1);
    const double l2 = s.W2 * s.Gamma2 / (x * x + 0.25 * s.Gamma2 * s.Gamma2);
    return l1 - l2;
}

PseudomodeParams derive_pseudomodes(const BandGapSpectrum& s, double delta) {
    const double g1p = gamma1p_of(s);
    const double g2p = gamma2p_of(s);
    if (!(g2p > 0.0)) {
        throw std::invalid_argument("derive_pseudomodes: gamma2p <= 0");
    }
    const double V = std::sqrt(s.W1 * s.W2) * (s.Gamma1 - s.Gamma2) / 2.0;
    return PseudomodeParams(g1p, g2p, V, delta);
}

bool check_perfect_gap(const BandGapSpectrum& s, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("check_perfect_gap: tol must be positive");
    }
    return std::abs(s.W1 / s.Gamma1 - s.W2 / s.Gamma2) <= tol;
}

bool strong_coupling_hint(const PseudomodeParams& p) {
    return p.Omega > 0.25 * p.gamma2p;
}

}  // namespace bandgap
