#include "dirosc/core.hpp"

#include <cmath>
#include <numbers>

namespace dirosc {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

bool is_half_odd_integer(double m_l) {
    const double twice = 2.0 * m_l;
    return std::rint(twice) == twice && std::rint(m_l) != m_l;
}
}  // namespace

SecondaryParams derive_secondary_parameters(const PhysicalParams& p) {
    return {
        .omega_ac = p.mu_tilde * p.lambda2 / p.M,
        .phi_ac = two_pi * 2.0 * p.alpha * p.mu_tilde * p.lambda1,
    };
}

double coupling_chi(const PhysicalParams& p, double m_l) {
    const double phi_ac = derive_secondary_parameters(p).phi_ac;
    return m_l / p.alpha + phi_ac / (two_pi * p.alpha);
}

RadialCoefficients radial_coefficients(const PhysicalParams& p, double m_l) {
    const auto [omega_ac, phi_ac] = derive_secondary_parameters(p);
    const double chi = coupling_chi(p, m_l);
    const double half_inv_alpha = 0.5 / p.alpha - 1.0;
    const double mwn = p.M * p.omega * p.N1;

    RadialCoefficients rc;
    rc.chi = chi;
    rc.tau2 = p.M * p.M * p.omega * omega_ac * p.N1 - chi * p.M * omega_ac;
    rc.tau3 = 0.25 - half_inv_alpha * half_inv_alpha - chi + chi * chi +
              mwn * (1.0 + mwn - 2.0 * chi);
    rc.beta1_drift = (1.0 - p.alpha) / p.alpha;
    return rc;
}

double tau1_from_energy(const PhysicalParams& p, double E) {
    const double omega_ac = derive_secondary_parameters(p).omega_ac;
    return -E * E + p.M * p.M * (1.0 + 0.25 * omega_ac * omega_ac);
}

ValidationResult validate_params(const PhysicalParams& p) {
    ValidationResult v;
    if (!(p.alpha > 0.0) || p.alpha > 1.0) {
        v.errors.push_back("alpha out of range (0,1]");
    }
    if (!(p.M > 0.0)) {
        v.errors.push_back("M must be positive");
    }
    if (p.omega < 0.0) {
        v.errors.push_back("omega must be non-negative");
    }
    v.ok = v.errors.empty();
    return v;
}

ValidationResult validate_params(const PhysicalParams& p, const QuantumNumbers& q,
                                 bool strict) {
    ValidationResult v = validate_params(p);
    if (q.n < 0) {
        v.errors.push_back("n must be non-negative");
    }
    if (!is_half_odd_integer(q.m_l)) {
        if (strict) {
            v.errors.push_back("m_l must be a half-odd integer in strict mode");
        } else {
            v.warnings.push_back("m_l is not a half-odd integer");
        }
    }
    v.ok = v.errors.empty();
    return v;
}

}  // namespace dirosc
