#pragma once

#include <span>
#include <vector>

#include "dirosc/core.hpp"

// Closed-form outputs: energy levels, upper/lower spinor radial functions,
// grid normalization, and the spectrum table with degeneracy grouping.

namespace dirosc {

struct EnergyLevel {
    int n;
    double m_l;
    int branch;        // +1 or -1
    double E;
    double tau1;       // E^2 + tau1 = M^2 (1 + omega_ac^2 / 4) exactly
    bool admissible;   // tau2 > 0 and tau1 > 0: normalizable bound state
};

// E = branch * sqrt( M^2 (1 + omega_ac^2/4) - tau2^2 / D^2 ),
// D = 1 + 2n + 2 sqrt(tau3 + (1/(2 alpha) - 1)^2).
// Throws std::domain_error when the square root argument under D is negative
// (supercritical centrifugal term) or when E^2 < 0 (no real level).
EnergyLevel energy_level(const PhysicalParams& p, int n, double m_l, int branch);

// psi_+(r) = r^b12 e^{-sqrt(tau1) r} L_n^{(2 sqrt(tau3 + (1/(2a)-1)^2))}(2 sqrt(tau1) r).
// Requires an admissible level (tau1 > 0, tau2 > 0).
double psi_upper(const PhysicalParams& p, int n, double m_l, double r);

// Lower component reconstructed from psi_+ through the first-order coupling;
// the radial derivative is evaluated analytically. Throws when E = M.
double psi_lower(const PhysicalParams& p, int n, double m_l, int branch, double r);

// Scales samples in place so that sum |psi|^2 r dr = 1 (trapezoidal weights
// on the given strictly increasing grid); returns the applied scale factor.
double normalize_on_grid(std::span<double> samples, std::span<const double> grid);

struct SpectrumTable {
    std::vector<EnergyLevel> levels;               // ordered by (n, m_l)
    std::vector<std::vector<std::size_t>> groups;  // indices with |dE| < tol
};

SpectrumTable spectrum_table(const PhysicalParams& p, int n_max,
                             std::span<const double> m_l_list, int branch = +1,
                             double degeneracy_tol = 1e-10);

}  // namespace dirosc
