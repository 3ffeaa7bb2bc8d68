#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dirosc/core.hpp"

// Closed-form-blind verification path. The radial equation is brought to
// Sturm-Liouville form by the substitution u = r^{beta1/2} psi (removing the
// first-derivative term), discretized by second-order central differences on
// a uniform grid with Dirichlet ends, and its lowest eigenvalues of E^2 are
// extracted by Sturm-sequence bisection.

namespace dirosc {

struct PotentialSpec {
    enum class Kind { Coulomb, Linear, Tabulated };
    Kind kind = Kind::Coulomb;
    double N1 = 1.0;                       // Coulomb: f(r) = N1 / r
    std::vector<double> table_r, table_f;  // Tabulated: strictly increasing r

    static PotentialSpec coulomb(double N1) { return {Kind::Coulomb, N1, {}, {}}; }
    static PotentialSpec linear() { return {Kind::Linear, 0.0, {}, {}}; }
    static PotentialSpec tabulated(std::vector<double> r, std::vector<double> f);

    double value(double r) const;
    double derivative(double r) const;
};

struct OracleConfig {
    double r_max = 400.0;
    int num_points = 80000;   // interior grid size, >= 100
    int k = 3;                // number of eigenvalues requested
    bool richardson = true;   // h and h/2 extrapolation

    // r_max = max(400, 40 / sqrt(tau1)) using the slowest closed-form decay
    // rate up to n_max; falls back to 400 when no admissible estimate exists.
    static OracleConfig defaults_for(const PhysicalParams& p, double m_l, int n_max);
};

// V_eff such that -u'' + V_eff u = E^2 u for u = r^{beta1/2} psi_+.
double effective_potential(const PhysicalParams& p, double m_l,
                           const PotentialSpec& f, double r);

// Symmetric tridiagonal operator with constant off-diagonal.
struct TridiagOperator {
    std::vector<double> diag;
    double off;     // off-diagonal value (-1/h^2 for the FD Laplacian)
    double h = 0.0; // grid spacing, 0 for hand-built operators
};

TridiagOperator fd_hamiltonian(const PhysicalParams& p, double m_l,
                               const PotentialSpec& f, const OracleConfig& cfg);

// Discretization of -u'' + V u on (0, r_max) for an arbitrary potential;
// used for the calibration problems.
TridiagOperator fd_operator(const std::function<double(double)>& potential,
                            double r_max, int num_points);

// k algebraically smallest eigenvalues by Sturm-sequence bisection,
// deterministic, each to absolute tolerance 1e-10 * max(1, |lambda|).
std::vector<double> fd_eigenvalues(const TridiagOperator& op, int k);

struct VerificationRow {
    int n;
    double e_sq_closed;
    double e_sq_oracle;     // NaN when skipped
    double relative_error;  // |E^2_oracle - E^2_closed| / |E^2_closed|
    enum class Status { Pass, Fail, Skipped } status;
    std::string note;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    double r_max;
    int num_points;
    bool richardson;
    double tolerance;
    bool all_passed() const;
};

VerificationReport verify_closed_form(const PhysicalParams& p, double m_l, int n_max,
                                      const OracleConfig& cfg, double tolerance = 1e-3);

}  // namespace dirosc
