#include "dirosc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "dirosc/orthopoly.hpp"
#include "dirosc/simd/kernels.hpp"

namespace dirosc {

namespace {

struct LevelShape {
    double kappa;    // sqrt(tau1), exponential decay rate
    double b12;      // leading exponent
    double lag_a;    // Laguerre order, 2 sqrt(tau3 + (1/(2a)-1)^2)
    double tau2;
};

// Shared bookkeeping between psi_upper and psi_lower; requires admissibility.
LevelShape level_shape(const PhysicalParams& p, int n, double m_l) {
    const RadialCoefficients rc = radial_coefficients(p, m_l);
    const double ha = 0.5 / p.alpha - 1.0;
    const double arg = rc.tau3 + ha * ha;
    if (arg < 0.0) {
        throw std::domain_error("supercritical centrifugal term, complex order");
    }
    const double s = std::sqrt(arg);
    const double denom = 1.0 + 2.0 * n + 2.0 * s;
    const double kappa = rc.tau2 / denom;
    if (!(rc.tau2 > 0.0) || !(kappa > 0.0)) {
        throw std::domain_error("inadmissible level: tau2 <= 0, no bound state");
    }
    return {kappa, 1.0 - 0.5 / p.alpha + s, 2.0 * s, rc.tau2};
}

}  // namespace

EnergyLevel energy_level(const PhysicalParams& p, int n, double m_l, int branch) {
    if (n < 0) throw std::invalid_argument("energy_level: n must be non-negative");
    if (branch != 1 && branch != -1) {
        throw std::invalid_argument("energy_level: branch must be +1 or -1");
    }
    const RadialCoefficients rc = radial_coefficients(p, m_l);
    const double omega_ac = derive_secondary_parameters(p).omega_ac;
    const double ha = 0.5 / p.alpha - 1.0;
    const double arg = rc.tau3 + ha * ha;
    if (arg < 0.0) {
        throw std::domain_error("supercritical centrifugal term, complex order");
    }
    const double denom = 1.0 + 2.0 * n + 2.0 * std::sqrt(arg);
    const double ratio = rc.tau2 / denom;
    const double tau1 = ratio * ratio;
    const double rest = 1.0 + 0.25 * omega_ac * omega_ac;
    const double e_sq = p.M * p.M * rest - tau1;
    if (e_sq < 0.0) {
        throw std::domain_error("imaginary energy, no real level");
    }
    const double E = tau1 == 0.0 ? branch * p.M * std::sqrt(rest)
                                 : branch * std::sqrt(e_sq);
    EnergyLevel lvl;
    lvl.n = n;
    lvl.m_l = m_l;
    lvl.branch = branch;
    lvl.E = E;
    lvl.tau1 = tau1_from_energy(p, E);  // keeps E^2 + tau1 identically conserved
    lvl.admissible = rc.tau2 > 0.0 && tau1 > 0.0;
    return lvl;
}

double psi_upper(const PhysicalParams& p, int n, double m_l, double r) {
    if (r < 0.0) throw std::domain_error("psi_upper: r must be non-negative");
    const LevelShape sh = level_shape(p, n, m_l);
    return std::pow(r, sh.b12) * std::exp(-sh.kappa * r) *
           laguerre(n, sh.lag_a, 2.0 * sh.kappa * r);
}

double psi_lower(const PhysicalParams& p, int n, double m_l, int branch, double r) {
    if (r <= 0.0) throw std::domain_error("psi_lower: r must be positive");
    const LevelShape sh = level_shape(p, n, m_l);
    const EnergyLevel lvl = energy_level(p, n, m_l, branch);
    if (lvl.E == p.M) {
        throw std::domain_error("lower component singular (zero-gap branch)");
    }
    const auto [omega_ac, phi_ac] = derive_secondary_parameters(p);
    constexpr double two_pi = 2.0 * std::numbers::pi;

    const double x = 2.0 * sh.kappa * r;
    const double base = std::pow(r, sh.b12) * std::exp(-sh.kappa * r);
    const double lag = laguerre(n, sh.lag_a, x);
    const double psi = base * lag;
    const double dpsi = (sh.b12 / r - sh.kappa) * psi +
                        base * 2.0 * sh.kappa * laguerre_prime(n, sh.lag_a, x);

    const double coupling = -(1.0 - p.alpha) / (2.0 * p.alpha * r) +
                            m_l / (p.alpha * r) -
                            p.M * (p.omega * p.N1 / r - 0.5 * omega_ac) +
                            phi_ac / (two_pi * p.alpha * r);
    return (-dpsi + coupling * psi) / (lvl.E - p.M);
}

double normalize_on_grid(std::span<double> samples, std::span<const double> grid) {
    if (grid.size() < 2 || samples.size() != grid.size()) {
        throw std::invalid_argument("normalize_on_grid: need matching grids with >= 2 points");
    }
    const std::size_t n = grid.size();
    std::vector<double> weight(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(grid[i + 1] > grid[i])) {
            throw std::invalid_argument("normalize_on_grid: grid must be strictly increasing");
        }
    }
    weight[0] = 0.5 * (grid[1] - grid[0]) * grid[0];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        weight[i] = 0.5 * (grid[i + 1] - grid[i - 1]) * grid[i];
    }
    weight[n - 1] = 0.5 * (grid[n - 1] - grid[n - 2]) * grid[n - 1];

    const double norm = simd::active().weighted_sumsq(samples.data(), weight.data(), n);
    if (norm <= 0.0) {
        throw std::domain_error("normalize_on_grid: samples have zero norm");
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (double& s : samples) s *= scale;
    return scale;
}

SpectrumTable spectrum_table(const PhysicalParams& p, int n_max,
                             std::span<const double> m_l_list, int branch,
                             double degeneracy_tol) {
    SpectrumTable table;
    for (int n = 0; n <= n_max; ++n) {
        for (double m_l : m_l_list) {
            const ValidationResult v = validate_params(p, {n, m_l}, false);
            if (!v.ok) {
                throw std::invalid_argument("spectrum_table: " + v.errors.front());
            }
            table.levels.push_back(energy_level(p, n, m_l, branch));
        }
    }

    std::vector<std::size_t> order(table.levels.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return table.levels[a].E < table.levels[b].E;
    });
    for (std::size_t i = 0; i < order.size();) {
        std::vector<std::size_t> group{order[i]};
        std::size_t j = i + 1;
        while (j < order.size() &&
               std::abs(table.levels[order[j]].E - table.levels[order[j - 1]].E) <
                   degeneracy_tol) {
            group.push_back(order[j]);
            ++j;
        }
        table.groups.push_back(std::move(group));
        i = j;
    }
    return table;
}

}  // namespace dirosc
