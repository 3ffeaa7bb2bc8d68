// dirosc: spectrum / wavefunction / verify / sweep / figure front-end.
//
// Output CSVs are UTF-8, comma separated, '.' decimal separator, 17
// significant digits, LF line endings, with a '#'-prefixed comment block
// recording the full parameter provenance ahead of the header row.
// Exit codes: 0 success, 1 verification failure, 2 configuration error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirosc/core.hpp"
#include "dirosc/oracle.hpp"
#include "dirosc/spectrum.hpp"

namespace {

using dirosc::PhysicalParams;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;

std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct RunConfig {
    PhysicalParams params{1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0};
    int n_max = 2;
    std::vector<double> ml{0.5};
    int branch = +1;
    bool strict_ml = false;
    double tolerance = 1e-3;
    std::string out_dir = ".";
    dirosc::OracleConfig oracle;
    bool oracle_explicit = false;  // cfg given by user; otherwise defaults_for
};

void load_config_file(RunConfig& rc, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    json j = json::parse(in);
    if (j.contains("params")) {
        const json& p = j["params"];
        auto get = [&](const char* key, double& slot) {
            if (p.contains(key)) slot = p[key].get<double>();
        };
        get("alpha", rc.params.alpha);
        get("M", rc.params.M);
        get("omega", rc.params.omega);
        get("mu_tilde", rc.params.mu_tilde);
        get("lambda1", rc.params.lambda1);
        get("lambda2", rc.params.lambda2);
        get("N1", rc.params.N1);
    }
    if (j.contains("n_max")) rc.n_max = j["n_max"].get<int>();
    if (j.contains("ml")) rc.ml = j["ml"].get<std::vector<double>>();
    if (j.contains("branch")) rc.branch = j["branch"].get<int>();
    if (j.contains("strict_ml")) rc.strict_ml = j["strict_ml"].get<bool>();
    if (j.contains("tolerance")) rc.tolerance = j["tolerance"].get<double>();
    if (j.contains("out")) rc.out_dir = j["out"].get<std::string>();
    if (j.contains("oracle")) {
        const json& o = j["oracle"];
        if (o.contains("r_max")) rc.oracle.r_max = o["r_max"].get<double>();
        if (o.contains("num_points")) rc.oracle.num_points = o["num_points"].get<int>();
        if (o.contains("richardson")) rc.oracle.richardson = o["richardson"].get<bool>();
        rc.oracle_explicit = true;
    }
}

int check_params(const RunConfig& rc) {
    for (double ml : rc.ml) {
        const auto v = dirosc::validate_params(rc.params, {std::max(rc.n_max, 0), ml},
                                              rc.strict_ml);
        for (const auto& w : v.warnings) std::cerr << "warning: " << w << "\n";
        if (!v.ok) {
            std::cerr << "error: " << v.errors.front() << "\n";
            return kExitConfig;
        }
    }
    if (rc.n_max < 0) {
        std::cerr << "error: n must be non-negative\n";
        return kExitConfig;
    }
    return kExitOk;
}

void write_file(const std::string& out_dir, const std::string& name,
                const std::string& content) {
    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("failed to write " + path.string());
    std::cout << "wrote " << path.string() << "\n";
}

std::string params_header(const PhysicalParams& p, const std::string& provenance) {
    std::ostringstream os;
    os << "# alpha=" << fmt(p.alpha) << " M=" << fmt(p.M) << " omega=" << fmt(p.omega)
       << " mu_tilde=" << fmt(p.mu_tilde) << " lambda1=" << fmt(p.lambda1)
       << " lambda2=" << fmt(p.lambda2) << " N1=" << fmt(p.N1) << " (" << provenance
       << ")\n";
    const auto sp = dirosc::derive_secondary_parameters(p);
    os << "# omega_ac=" << fmt(sp.omega_ac) << " phi_ac=" << fmt(sp.phi_ac) << "\n";
    return os.str();
}

// Energy with formula-level fallbacks: rows for parameter points where no
// real level exists are emitted as nan rather than aborting a sweep.
std::optional<dirosc::EnergyLevel> try_level(const PhysicalParams& p, int n, double ml,
                                             int branch) {
    try {
        return dirosc::energy_level(p, n, ml, branch);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

int cmd_spectrum(const RunConfig& rc) {
    if (int code = check_params(rc); code != kExitOk) return code;
    std::ostringstream os;
    os << params_header(rc.params, "user");
    os << "n,m_l,branch,E,tau1,admissible\n";
    for (int n = 0; n <= rc.n_max; ++n) {
        for (double ml : rc.ml) {
            const auto lvl = dirosc::energy_level(rc.params, n, ml, rc.branch);
            os << n << ',' << fmt(ml) << ',' << lvl.branch << ',' << fmt(lvl.E) << ','
               << fmt(lvl.tau1) << ',' << (lvl.admissible ? "true" : "false") << "\n";
        }
    }
    write_file(rc.out_dir, "spectrum.csv", os.str());
    return kExitOk;
}

int cmd_wavefunction(const RunConfig& rc, int n, double r_max, int points,
                     bool normalize) {
    if (int code = check_params(rc); code != kExitOk) return code;
    const double ml = rc.ml.front();
    std::vector<double> grid(points), upper(points), lower(points);
    for (int i = 0; i < points; ++i) {
        grid[i] = r_max * (i + 1) / points;  // r = 0 excluded for the lower component
        upper[i] = dirosc::psi_upper(rc.params, n, ml, grid[i]);
        lower[i] = dirosc::psi_lower(rc.params, n, ml, rc.branch, grid[i]);
    }
    double scale = 1.0;
    if (normalize) {
        scale = dirosc::normalize_on_grid(upper, grid);
        for (double& v : lower) v *= scale;
    }
    std::ostringstream os;
    os << params_header(rc.params, "user");
    os << "# n=" << n << " m_l=" << fmt(ml) << " branch=" << rc.branch
       << " normalized=" << (normalize ? "true" : "false") << " scale=" << fmt(scale)
       << "\n";
    os << "r,psi_upper,psi_lower\n";
    for (int i = 0; i < points; ++i) {
        os << fmt(grid[i]) << ',' << fmt(upper[i]) << ',' << fmt(lower[i]) << "\n";
    }
    write_file(rc.out_dir, "wavefunction.csv", os.str());
    return kExitOk;
}

int cmd_verify(const RunConfig& rc) {
    if (int code = check_params(rc); code != kExitOk) return code;
    const double ml = rc.ml.front();
    const dirosc::OracleConfig cfg =
        rc.oracle_explicit ? rc.oracle
                           : dirosc::OracleConfig::defaults_for(rc.params, ml, rc.n_max);
    const auto report =
        dirosc::verify_closed_form(rc.params, ml, rc.n_max, cfg, rc.tolerance);

    std::ostringstream os;
    os << params_header(rc.params, "user");
    os << "# r_max=" << fmt(report.r_max) << " num_points=" << report.num_points
       << " richardson=" << (report.richardson ? "true" : "false")
       << " tolerance=" << fmt(report.tolerance) << "\n";
    os << "n,E2_closed,E2_oracle,rel_error,status\n";
    for (const auto& row : report.rows) {
        const char* status = row.status == dirosc::VerificationRow::Status::Pass ? "PASS"
                             : row.status == dirosc::VerificationRow::Status::Fail
                                 ? "FAIL"
                                 : "SKIPPED";
        os << row.n << ',' << fmt(row.e_sq_closed) << ',' << fmt(row.e_sq_oracle) << ','
           << fmt(row.relative_error) << ',' << status << "\n";
        std::cout << "n=" << row.n << "  E2_closed=" << fmt(row.e_sq_closed)
                  << "  E2_oracle=" << fmt(row.e_sq_oracle)
                  << "  rel_error=" << fmt(row.relative_error) << "  " << status
                  << (row.note.empty() ? "" : "  (" + row.note + ")") << "\n";
    }
    write_file(rc.out_dir, "verify.csv", os.str());
    return report.all_passed() ? kExitOk : kExitVerifyFail;
}

PhysicalParams with_sweep_value(const PhysicalParams& base, const std::string& var,
                                double value) {
    PhysicalParams p = base;
    if (var == "alpha") {
        p.alpha = value;
    } else if (var == "omega_AC") {
        p.lambda2 = value * p.M / p.mu_tilde;  // omega_ac = mu_tilde lambda2 / M
    } else if (var == "Phi_AC") {
        p.lambda1 = value / (4.0 * std::numbers::pi * p.alpha * p.mu_tilde);
    } else if (var == "N1") {
        p.N1 = value;
    } else if (var == "omega") {
        p.omega = value;
    }
    return p;
}

int cmd_sweep(const RunConfig& rc, const std::string& var,
              const std::vector<double>& grid) {
    static const std::vector<std::string> sweepable{"alpha", "omega_AC", "Phi_AC",
                                                    "N1",    "omega",    "m_l"};
    if (std::find(sweepable.begin(), sweepable.end(), var) == sweepable.end()) {
        std::cerr << "error: unknown sweep variable '" << var << "'\n";
        return kExitConfig;
    }
    if (grid.empty()) {
        std::cerr << "error: empty sweep grid\n";
        return kExitConfig;
    }
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!(grid[i + 1] > grid[i])) {
            std::cerr << "error: sweep grid must be strictly increasing\n";
            return kExitConfig;
        }
    }
    if (int code = check_params(rc); code != kExitOk) return code;

    std::ostringstream os;
    os << params_header(rc.params, "base, user");
    os << "# sweep_variable=" << var << "\n";
    os << var << ",n,m_l,E,admissible\n";
    for (double value : grid) {
        for (int n = 0; n <= rc.n_max; ++n) {
            for (double ml : rc.ml) {
                const PhysicalParams p = with_sweep_value(rc.params, var, value);
                const double use_ml = var == "m_l" ? value : ml;
                const auto lvl = try_level(p, n, use_ml, rc.branch);
                os << fmt(value) << ',' << n << ',' << fmt(use_ml) << ','
                   << fmt(lvl ? lvl->E : std::nan("")) << ','
                   << (lvl && lvl->admissible ? "true" : "false") << "\n";
            }
        }
    }
    write_file(rc.out_dir, "sweep_" + var + ".csv", os.str());
    return kExitOk;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

int cmd_figure(const RunConfig& rc, const std::string& id, bool emit_plot) {
    std::ostringstream os;
    std::string csv_name = id + ".csv";
    std::string plot_body;

    if (id == "fig1") {
        // psi_+(r) for four Coulomb strengths; remaining values are figure defaults
        PhysicalParams p{0.8, 1.0, 1.0, 2.0, -1.0, 1.0, 0.0};
        const int n = 3;
        const double ml = 1.0;
        const std::vector<double> n1_set{0.5, 1.0, 1.5, 2.0};
        os << params_header(p, "figure default");
        os << "# n=3 m_l=1 (figure default); N1 set {0.5,1,1.5,2} chosen by this tool\n";
        os << "N1,r,psi_upper\n";
        for (double n1 : n1_set) {
            p.N1 = n1;
            for (double r : linspace(0.0, 15.0, 601)) {
                os << fmt(n1) << ',' << fmt(r) << ','
                   << fmt(dirosc::psi_upper(p, n, ml, r)) << "\n";
            }
        }
        plot_body = "plot for [nv in \"0.5 1 1.5 2\"] csv using "
                    "($1==nv+0?$2:NaN):3 with lines title sprintf('N1=%s', nv)\n";
    } else if (id == "fig2-left") {
        const PhysicalParams base{0.2, 0.2, 1.0, 2.0, -0.01, 5.0, -3.0};
        const double ml = 2.0;
        os << params_header(base, "figure default");
        os << "# E(alpha) for n=1..5, positive branch\n";
        os << "alpha,n,E\n";
        for (double alpha : linspace(0.1, 1.0, 91)) {
            for (int n = 1; n <= 5; ++n) {
                PhysicalParams p = base;
                p.alpha = alpha;
                const auto lvl = try_level(p, n, ml, +1);
                os << fmt(alpha) << ',' << n << ','
                   << fmt(lvl ? lvl->E : std::nan("")) << "\n";
            }
        }
        plot_body = "plot for [nn=1:5] csv using ($2==nn?$1:NaN):3 with lines "
                    "title sprintf('n=%d', nn)\n";
    } else if (id == "fig2-right") {
        const PhysicalParams base{0.2, 0.2, 1.0, 1.0, -0.01, 0.5, -3.0};
        const double ml = 2.0;
        os << params_header(base, "figure default");
        os << "# E(n) for mu_tilde in {1..5} (set chosen by this tool); "
              "omega_ac = 2.5 mu_tilde\n";
        os << "mu_tilde,omega_ac,n,E\n";
        for (double mu : {1.0, 2.0, 3.0, 4.0, 5.0}) {
            PhysicalParams p = base;
            p.mu_tilde = mu;
            const double wac = dirosc::derive_secondary_parameters(p).omega_ac;
            for (int n = 0; n <= 10; ++n) {
                const auto lvl = try_level(p, n, ml, +1);
                os << fmt(mu) << ',' << fmt(wac) << ',' << n << ','
                   << fmt(lvl ? lvl->E : std::nan("")) << "\n";
            }
        }
        plot_body = "plot for [mu=1:5] csv using ($1==mu?$3:NaN):4 with linespoints "
                    "title sprintf('mu=%d', mu)\n";
    } else if (id == "fig3-left") {
        const PhysicalParams base{0.2, 0.2, 1.0, 1.0, 0.1, 0.5, -3.0};
        const double ml = 2.0;
        const int n = 3;
        os << params_header(base, "figure default");
        os << "# E(omega_ac) at n=3 for mu_tilde in {1..5} (set chosen by this tool); "
              "phi_ac = 0.08 pi mu_tilde\n";
        os << "mu_tilde,phi_ac,omega_ac,E\n";
        for (double mu : {1.0, 2.0, 3.0, 4.0, 5.0}) {
            PhysicalParams p = base;
            p.mu_tilde = mu;
            const double phi = dirosc::derive_secondary_parameters(p).phi_ac;
            for (double wac : linspace(0.0, 12.0, 121)) {
                const PhysicalParams q = with_sweep_value(p, "omega_AC", wac);
                const auto lvl = try_level(q, n, ml, +1);
                os << fmt(mu) << ',' << fmt(phi) << ',' << fmt(wac) << ','
                   << fmt(lvl ? lvl->E : std::nan("")) << "\n";
            }
        }
        plot_body = "plot for [mu=1:5] csv using ($1==mu?$3:NaN):4 with lines "
                    "title sprintf('mu=%d', mu)\n";
    } else if (id == "fig3-right") {
        const PhysicalParams base{0.2, 0.2, 1.0, 2.0, -0.01, 5.0, 0.0};
        const double ml = 2.0;
        os << params_header(base, "figure default");
        os << "# E(N1) for n=1..5, positive branch\n";
        os << "N1,n,E\n";
        for (double n1 : linspace(-5.0, 5.0, 101)) {
            for (int n = 1; n <= 5; ++n) {
                PhysicalParams p = base;
                p.N1 = n1;
                const auto lvl = try_level(p, n, ml, +1);
                os << fmt(n1) << ',' << n << ',' << fmt(lvl ? lvl->E : std::nan(""))
                   << "\n";
            }
        }
        plot_body = "plot for [nn=1:5] csv using ($2==nn?$1:NaN):3 with lines "
                    "title sprintf('n=%d', nn)\n";
    } else {
        std::cerr << "error: unknown figure id '" << id << "'\n";
        return kExitConfig;
    }

    write_file(rc.out_dir, csv_name, os.str());
    if (emit_plot) {
        std::ostringstream plot;
        plot << "set datafile separator ','\n"
             << "set datafile commentschars '#'\n"
             << "csv = '" << csv_name << "'\n"
             << plot_body;
        write_file(rc.out_dir, id + ".gp", plot.str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Dirac oscillator with Coulomb-type coupling: "
                 "closed-form spectra, spinor wavefunctions, and an independent "
                 "finite-difference verification oracle"};
    app.require_subcommand(1);

    RunConfig rc;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override it)");
    app.add_option("--out", rc.out_dir, "output directory");
    app.add_flag("--strict-ml", rc.strict_ml, "require half-odd-integer m_l");
    app.add_option("--tolerance", rc.tolerance, "verification tolerance");

    // physical parameters (shared by all subcommands)
    app.add_option("--alpha", rc.params.alpha, "deficit parameter, (0,1]");
    app.add_option("--mass", rc.params.M, "fermion mass M");
    app.add_option("--omega", rc.params.omega, "oscillator frequency");
    app.add_option("--mu-tilde", rc.params.mu_tilde, "magnetic dipole moment");
    app.add_option("--lambda1", rc.params.lambda1, "filament charge parameter");
    app.add_option("--lambda2", rc.params.lambda2, "cylinder charge parameter");
    app.add_option("--n1", rc.params.N1, "Coulomb strength");
    app.add_option("--n-max", rc.n_max, "largest radial quantum number");
    app.add_option("--ml", rc.ml, "angular quantum number(s)");
    app.add_option("--branch", rc.branch, "energy branch, +1 or -1");

    auto* oracle_group = app.add_option_group("oracle");
    auto* opt_rmax = oracle_group->add_option("--r-max", rc.oracle.r_max, "domain cutoff");
    auto* opt_np =
        oracle_group->add_option("--num-points", rc.oracle.num_points, "interior grid size");
    auto* opt_rich = oracle_group->add_flag("--richardson,!--no-richardson",
                                            rc.oracle.richardson, "h, h/2 extrapolation");

    auto* sc_spectrum = app.add_subcommand("spectrum", "closed-form energy table");
    auto* sc_wave = app.add_subcommand("wavefunction", "sample the radial spinor");
    int wf_n = 0;
    double wf_rmax = 60.0;
    int wf_points = 2000;
    bool wf_norm = true;
    sc_wave->add_option("--n", wf_n, "radial quantum number");
    sc_wave->add_option("--wf-r-max", wf_rmax, "sampling cutoff");
    sc_wave->add_option("--points", wf_points, "number of samples");
    sc_wave->add_flag("--normalize,!--no-normalize", wf_norm, "unit norm on the grid");
    auto* sc_verify = app.add_subcommand("verify", "cross-check against the oracle");
    auto* sc_sweep = app.add_subcommand("sweep", "energy table along one parameter");
    std::string sweep_var;
    std::vector<double> sweep_grid;
    sc_sweep->add_option("--var", sweep_var,
                         "one of alpha, omega_AC, Phi_AC, N1, omega, m_l")
        ->required();
    sc_sweep->add_option("--grid", sweep_grid, "strictly increasing sweep values")
        ->required();
    auto* sc_figure = app.add_subcommand("figure", "figure-preset CSV emission");
    std::string figure_id;
    bool emit_plot = false;
    sc_figure
        ->add_option("--id", figure_id,
                     "fig1, fig2-left, fig2-right, fig3-left, fig3-right")
        ->required();
    sc_figure->add_flag("--plot-script", emit_plot, "also emit a gnuplot script");

    // global flags may appear after the subcommand name
    for (auto* sc : {sc_spectrum, sc_wave, sc_verify, sc_sweep, sc_figure}) {
        sc->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (!config_path.empty()) {
        RunConfig from_file = rc;
        try {
            load_config_file(from_file, config_path);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitConfig;
        }
        // flags given on the command line take precedence over the file
        RunConfig merged = from_file;
        for (const auto* opt : app.get_options()) {
            if (opt->count() == 0) continue;
            const std::string name = opt->get_name();
            if (name == "--alpha") merged.params.alpha = rc.params.alpha;
            else if (name == "--mass") merged.params.M = rc.params.M;
            else if (name == "--omega") merged.params.omega = rc.params.omega;
            else if (name == "--mu-tilde") merged.params.mu_tilde = rc.params.mu_tilde;
            else if (name == "--lambda1") merged.params.lambda1 = rc.params.lambda1;
            else if (name == "--lambda2") merged.params.lambda2 = rc.params.lambda2;
            else if (name == "--n1") merged.params.N1 = rc.params.N1;
            else if (name == "--n-max") merged.n_max = rc.n_max;
            else if (name == "--ml") merged.ml = rc.ml;
            else if (name == "--branch") merged.branch = rc.branch;
            else if (name == "--tolerance") merged.tolerance = rc.tolerance;
            else if (name == "--out") merged.out_dir = rc.out_dir;
            else if (name == "--strict-ml") merged.strict_ml = rc.strict_ml;
        }
        merged.oracle_explicit = from_file.oracle_explicit;
        rc = merged;
    }
    if (opt_rmax->count() || opt_np->count() || opt_rich->count()) {
        rc.oracle_explicit = true;
    }

    try {
        if (sc_spectrum->parsed()) return cmd_spectrum(rc);
        if (sc_wave->parsed()) return cmd_wavefunction(rc, wf_n, wf_rmax, wf_points, wf_norm);
        if (sc_verify->parsed()) return cmd_verify(rc);
        if (sc_sweep->parsed()) return cmd_sweep(rc, sweep_var, sweep_grid);
        if (sc_figure->parsed()) return cmd_figure(rc, figure_id, emit_plot);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
