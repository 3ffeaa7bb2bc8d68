#include "dirosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dirosc/simd/kernels.hpp"

namespace dirosc {

PotentialSpec PotentialSpec::tabulated(std::vector<double> r, std::vector<double> f) {
    if (r.size() != f.size() || r.size() < 2) {
        throw std::invalid_argument("tabulated potential: need matching tables with >= 2 points");
    }
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        if (!(r[i + 1] > r[i])) {
            throw std::invalid_argument("tabulated potential: grid must be strictly increasing");
        }
    }
    PotentialSpec s;
    s.kind = Kind::Tabulated;
    s.table_r = std::move(r);
    s.table_f = std::move(f);
    return s;
}

double PotentialSpec::value(double r) const {
    switch (kind) {
        case Kind::Coulomb:
            return N1 / r;
        case Kind::Linear:
            return r;
        case Kind::Tabulated: {
            const auto it = std::upper_bound(table_r.begin(), table_r.end(), r);
            std::size_t i = it == table_r.begin() ? 0 : (it - table_r.begin()) - 1;
            if (i + 1 >= table_r.size()) i = table_r.size() - 2;
            const double t = (r - table_r[i]) / (table_r[i + 1] - table_r[i]);
            return table_f[i] + t * (table_f[i + 1] - table_f[i]);
        }
    }
    return 0.0;
}

double PotentialSpec::derivative(double r) const {
    switch (kind) {
        case Kind::Coulomb:
            return -N1 / (r * r);
        case Kind::Linear:
            return 1.0;
        case Kind::Tabulated: {
            // central differences on the table, one-sided at the ends
            const auto it = std::upper_bound(table_r.begin(), table_r.end(), r);
            std::size_t i = it == table_r.begin() ? 0 : (it - table_r.begin()) - 1;
            if (i + 1 >= table_r.size()) i = table_r.size() - 2;
            const std::size_t lo = i == 0 ? 0 : i - 1;
            const std::size_t hi = std::min(i + 1, table_r.size() - 1);
            return (table_f[hi] - table_f[lo]) / (table_r[hi] - table_r[lo]);
        }
    }
    return 0.0;
}

double effective_potential(const PhysicalParams& p, double m_l,
                           const PotentialSpec& f, double r) {
    if (r <= 0.0) throw std::domain_error("effective_potential: r must be positive");
    const double omega_ac = derive_secondary_parameters(p).omega_ac;
    const double chi = coupling_chi(p, m_l);
    const double ha = 0.5 / p.alpha - 1.0;
    const double a = 0.5 * (1.0 - p.alpha) / p.alpha;  // Liouville shift exponent
    const double fr = f.value(r);
    const double g = p.omega * fr - 0.5 * omega_ac;
    return p.M * p.M + p.M * p.M * g * g - p.M * p.omega * f.derivative(r) -
           2.0 * chi * p.M * g / r -
           (ha * ha + chi - 0.25 - chi * chi) / (r * r) -
           (a - a * a) / (r * r);
}

OracleConfig OracleConfig::defaults_for(const PhysicalParams& p, double m_l, int n_max) {
    OracleConfig cfg;
    cfg.k = n_max + 1;
    const RadialCoefficients rc = radial_coefficients(p, m_l);
    const double ha = 0.5 / p.alpha - 1.0;
    const double arg = rc.tau3 + ha * ha;
    if (rc.tau2 > 0.0 && arg >= 0.0) {
        const double kappa = rc.tau2 / (1.0 + 2.0 * n_max + 2.0 * std::sqrt(arg));
        cfg.r_max = std::max(400.0, 40.0 / kappa);
    }
    return cfg;
}

namespace {

void check_config(const OracleConfig& cfg) {
    if (cfg.num_points < 100) throw std::invalid_argument("oracle: num_points >= 100 required");
    if (!(cfg.r_max > 0.0)) throw std::invalid_argument("oracle: r_max must be positive");
    if (cfg.k < 1) throw std::invalid_argument("oracle: k >= 1 required");
}

}  // namespace

TridiagOperator fd_hamiltonian(const PhysicalParams& p, double m_l,
                               const PotentialSpec& f, const OracleConfig& cfg) {
    check_config(cfg);
    const int n = cfg.num_points;
    const double h = cfg.r_max / (n + 1);
    TridiagOperator op;
    op.h = h;
    op.off = -1.0 / (h * h);
    op.diag.resize(n);

    if (f.kind == PotentialSpec::Kind::Coulomb) {
        // V = c0 + c1/r + c2/r^2 collected once, then filled by the grid kernel
        const double omega_ac = derive_secondary_parameters(p).omega_ac;
        const RadialCoefficients rc = radial_coefficients(p, m_l);
        const double a = 0.5 * rc.beta1_drift;
        const double c0 = 2.0 / (h * h) +
                          p.M * p.M * (1.0 + 0.25 * omega_ac * omega_ac);
        const double c1 = -rc.tau2;
        const double c2 = rc.tau3 - a + a * a;
        std::vector<double> r(n);
        for (int i = 0; i < n; ++i) r[i] = (i + 1) * h;
        simd::active().coulomb_potential_fill(r.data(), op.diag.data(), n, c0, c1, c2);
    } else {
        for (int i = 0; i < n; ++i) {
            const double r = (i + 1) * h;
            op.diag[i] = 2.0 / (h * h) + effective_potential(p, m_l, f, r);
        }
    }
    return op;
}

TridiagOperator fd_operator(const std::function<double(double)>& potential,
                            double r_max, int num_points) {
    if (num_points < 3) throw std::invalid_argument("fd_operator: too few points");
    const double h = r_max / (num_points + 1);
    TridiagOperator op;
    op.h = h;
    op.off = -1.0 / (h * h);
    op.diag.resize(num_points);
    for (int i = 0; i < num_points; ++i) {
        op.diag[i] = 2.0 / (h * h) + potential((i + 1) * h);
    }
    return op;
}

std::vector<double> fd_eigenvalues(const TridiagOperator& op, int k) {
    const std::size_t n = op.diag.size();
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw std::invalid_argument("fd_eigenvalues: k out of range");
    }
    const double off_sq = op.off * op.off;
    const double abs_off = std::abs(op.off);
    double glo = op.diag[0], ghi = op.diag[0];
    for (double d : op.diag) {
        glo = std::min(glo, d);
        ghi = std::max(ghi, d);
    }
    glo -= 2.0 * abs_off;
    ghi += 2.0 * abs_off;

    std::vector<double> lo(k, glo), hi(k, ghi);
    const auto& kern = simd::active();

    auto tol_at = [](double mid) { return 1e-10 * std::max(1.0, std::abs(mid)); };

    for (int iter = 0; iter < 200; ++iter) {
        std::vector<int> pending;
        for (int j = 0; j < k; ++j) {
            const double mid = 0.5 * (lo[j] + hi[j]);
            if (hi[j] - lo[j] > tol_at(mid)) pending.push_back(j);
        }
        if (pending.empty()) break;
        // batches of four shifts per Sturm pass
        for (std::size_t b = 0; b < pending.size(); b += 4) {
            double shifts[4];
            int counts[4];
            for (int lane = 0; lane < 4; ++lane) {
                const int j = pending[std::min(b + lane, pending.size() - 1)];
                shifts[lane] = 0.5 * (lo[j] + hi[j]);
            }
            kern.sturm_count4(op.diag.data(), n, off_sq, shifts, counts);
            const std::size_t lanes = std::min<std::size_t>(4, pending.size() - b);
            for (std::size_t lane = 0; lane < lanes; ++lane) {
                const int j = pending[b + lane];
                if (counts[lane] >= j + 1) {
                    hi[j] = shifts[lane];
                } else {
                    lo[j] = shifts[lane];
                }
            }
        }
    }

    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) out[j] = 0.5 * (lo[j] + hi[j]);
    return out;
}

bool VerificationReport::all_passed() const {
    for (const auto& row : rows) {
        if (row.status == VerificationRow::Status::Fail) return false;
    }
    return true;
}

VerificationReport verify_closed_form(const PhysicalParams& p, double m_l, int n_max,
                                      const OracleConfig& cfg, double tolerance) {
    check_config(cfg);
    if (n_max < 0) throw std::invalid_argument("verify_closed_form: n_max must be >= 0");

    VerificationReport report;
    report.r_max = cfg.r_max;
    report.num_points = cfg.num_points;
    report.richardson = cfg.richardson;
    report.tolerance = tolerance;

    const double omega_ac = derive_secondary_parameters(p).omega_ac;
    const double rest = p.M * p.M * (1.0 + 0.25 * omega_ac * omega_ac);
    const RadialCoefficients rc = radial_coefficients(p, m_l);
    const double ha = 0.5 / p.alpha - 1.0;
    const double arg = rc.tau3 + ha * ha;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    bool any_admissible = false;
    for (int n = 0; n <= n_max; ++n) {
        VerificationRow row;
        row.n = n;
        row.e_sq_oracle = nan;
        row.relative_error = nan;
        if (arg < 0.0) {
            row.e_sq_closed = nan;
            row.status = VerificationRow::Status::Skipped;
            row.note = "skipped: supercritical centrifugal term";
        } else {
            const double denom = 1.0 + 2.0 * n + 2.0 * std::sqrt(arg);
            const double tau1 = (rc.tau2 / denom) * (rc.tau2 / denom);
            row.e_sq_closed = rest - tau1;
            if (rc.tau2 > 0.0 && tau1 > 0.0) {
                row.status = VerificationRow::Status::Pass;  // provisional
                any_admissible = true;
            } else {
                row.status = VerificationRow::Status::Skipped;
                row.note = "skipped: no bound state expected";
            }
        }
        report.rows.push_back(row);
    }
    if (!any_admissible) return report;

    const PotentialSpec f = PotentialSpec::coulomb(p.N1);
    std::vector<double> eig = fd_eigenvalues(fd_hamiltonian(p, m_l, f, cfg), n_max + 1);
    if (cfg.richardson) {
        OracleConfig half = cfg;
        half.num_points = 2 * cfg.num_points + 1;  // halves h exactly
        const std::vector<double> eig_half =
            fd_eigenvalues(fd_hamiltonian(p, m_l, f, half), n_max + 1);
        for (int j = 0; j <= n_max; ++j) {
            eig[j] = (4.0 * eig_half[j] - eig[j]) / 3.0;
        }
    }

    for (int n = 0; n <= n_max; ++n) {
        VerificationRow& row = report.rows[n];
        if (row.status == VerificationRow::Status::Skipped) continue;
        row.e_sq_oracle = eig[n];
        row.relative_error =
            std::abs(row.e_sq_oracle - row.e_sq_closed) / std::abs(row.e_sq_closed);
        row.status = row.relative_error < tolerance ? VerificationRow::Status::Pass
                                                    : VerificationRow::Status::Fail;
    }
    return report;
}

}  // namespace dirosc
