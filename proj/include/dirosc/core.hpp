#pragma once

#include <string>
#include <vector>

// Core parameter types and the physics -> radial-ODE coefficient map for the
// generalized Dirac oscillator with a Coulomb-type coupling on a conical
// background, including Aharonov-Casher frequency and phase.
//
// Natural units (hbar = c = G = 1) throughout. All types are immutable
// values and all functions are pure.

namespace dirosc {

struct PhysicalParams {
    double alpha;     // deficit parameter, (0, 1]
    double M;         // fermion mass, > 0
    double omega;     // oscillator frequency, >= 0
    double mu_tilde;  // permanent magnetic dipole moment
    double lambda1;   // charge filament parameter (lambda0 / 4 pi eps0)
    double lambda2;   // charged cylinder parameter (chi / eps0)
    double N1;        // Coulomb strength of the potential function
};

struct SecondaryParams {
    double omega_ac;  // A-C frequency, mu_tilde * lambda2 / M
    double phi_ac;    // A-C geometric phase, 4 pi alpha mu_tilde lambda1
};

struct QuantumNumbers {
    int n;        // radial quantum number, >= 0
    double m_l;   // angular quantum number (canonically half-integer)
};

// E-independent coefficients of the effective radial equation
//   psi'' + (beta1_drift / r) psi' + (-tau1 r^2 + tau2 r - tau3) / r^2 psi = 0
struct RadialCoefficients {
    double tau2;         // linear-in-1/r coefficient
    double tau3;         // centrifugal coefficient
    double beta1_drift;  // first-derivative coefficient, (1 - alpha) / alpha
    double chi;          // effective angular coupling, m_l/alpha + Phi_AC/(2 pi alpha)
};

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
};

SecondaryParams derive_secondary_parameters(const PhysicalParams& p);

// chi = m_l / alpha + Phi_AC / (2 pi alpha); the single carrier of the
// (m_l, Phi_AC) dependence. Invariant under (m_l -> m_l + 1, Phi_AC -> Phi_AC - 2 pi).
double coupling_chi(const PhysicalParams& p, double m_l);

RadialCoefficients radial_coefficients(const PhysicalParams& p, double m_l);

// tau1 = -E^2 + M^2 (1 + omega_ac^2 / 4); E^2 + tau1 is constant in E.
double tau1_from_energy(const PhysicalParams& p, double E);

// strict = true additionally rejects m_l that is not a half-odd integer.
// Note the figure conventions use integer m_l, hence the non-strict default:
// in non-strict mode a non-half-odd m_l only produces a warning.
ValidationResult validate_params(const PhysicalParams& p, const QuantumNumbers& q,
                                 bool strict = false);

ValidationResult validate_params(const PhysicalParams& p);

}  // namespace dirosc
