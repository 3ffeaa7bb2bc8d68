#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "dirosc/core.hpp"
#include "dirosc/spectrum.hpp"

using namespace dirosc;

namespace {
const PhysicalParams p_star{1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0};
const PhysicalParams fig2_left{0.2, 0.2, 1.0, 2.0, -0.01, 5.0, -3.0};
}  // namespace

TEST_CASE("reference energies at P*") {
    CHECK(energy_level(p_star, 0, 0.5, +1).E ==
          doctest::Approx(std::sqrt(11.0) / 3.0).epsilon(1e-14));
    CHECK(energy_level(p_star, 1, 0.5, +1).E ==
          doctest::Approx(std::sqrt(31.0) / 5.0).epsilon(1e-14));
    CHECK(energy_level(p_star, 2, 0.5, +1).E ==
          doctest::Approx(std::sqrt(61.0) / 7.0).epsilon(1e-14));
    CHECK(energy_level(p_star, 0, 0.5, -1).E ==
          doctest::Approx(-std::sqrt(11.0) / 3.0).epsilon(1e-14));
    CHECK(energy_level(p_star, 0, 0.5, +1).admissible);
}

TEST_CASE("degenerate limit: omega_ac = 0 collapses to E = branch * M") {
    PhysicalParams p = p_star;
    p.lambda2 = 0.0;
    for (int n = 0; n <= 5; ++n) {
        for (double ml : {0.5, -0.5, 1.5, -1.5}) {
            const auto plus = energy_level(p, n, ml, +1);
            CHECK(plus.E == p.M);
            CHECK_FALSE(plus.admissible);
            CHECK(energy_level(p, n, ml, -1).E == -p.M);
        }
    }
}

TEST_CASE("formal level for repulsive tau2 is flagged inadmissible") {
    const auto lvl = energy_level(fig2_left, 1, 2.0, +1);
    CHECK(lvl.E == doctest::Approx(2.044).epsilon(1e-3));
    CHECK_FALSE(lvl.admissible);
}

TEST_CASE("E^2 + tau1 conserved for every produced level") {
    std::array<PhysicalParams, 2> sets{p_star, fig2_left};
    for (const auto& p : sets) {
        const double rest = p.M * p.M *
                            (1.0 + 0.25 * std::pow(derive_secondary_parameters(p).omega_ac, 2));
        for (int n = 0; n <= 4; ++n) {
            const auto lvl = energy_level(p, n, 0.5, +1);
            CHECK(lvl.E * lvl.E + lvl.tau1 == rest);
            CHECK(lvl.tau1 == tau1_from_energy(p, lvl.E));
        }
    }
}

TEST_CASE("|E| strictly increases with n") {
    double prev = 0.0;
    for (int n = 0; n <= 6; ++n) {
        const double e = std::abs(energy_level(p_star, n, 0.5, +1).E);
        if (n > 0) CHECK(e > prev);
        prev = e;
    }
}

TEST_CASE("periodicity identity over random admissible draws") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.2, 1.0);
    std::uniform_real_distribution<double> s(-1.5, 1.5);
    std::uniform_int_distribution<int> nn(0, 4);
    int done = 0;
    while (done < 100) {
        PhysicalParams p{u(rng), 0.2 + u(rng), u(rng), 0.5 + u(rng), s(rng),
                         0.5 + u(rng), s(rng)};
        const double ml = s(rng);
        const int n = nn(rng);
        PhysicalParams shifted = p;  // phi_ac + 2 pi
        shifted.lambda1 += 1.0 / (2.0 * p.alpha * p.mu_tilde);
        double e1, e2;
        try {
            const auto a = energy_level(shifted, n, ml, +1);
            const auto b = energy_level(p, n, ml + 1.0, +1);
            if (!a.admissible || !b.admissible) continue;
            e1 = a.E;
            e2 = b.E;
        } catch (const std::domain_error&) {
            continue;
        }
        CHECK(std::abs(e1 - e2) < 1e-12);
        ++done;
    }
}

TEST_CASE("psi_upper closed form at P*") {
    // n = 0: r^1.5 e^{-r/6}
    CHECK(psi_upper(p_star, 0, 0.5, 1.0) ==
          doctest::Approx(std::exp(-1.0 / 6.0)).epsilon(1e-13));
    CHECK(psi_upper(p_star, 0, 0.5, 0.0) == 0.0);
    CHECK(psi_upper(p_star, 0, 0.5, 2.0) ==
          doctest::Approx(std::pow(2.0, 1.5) * std::exp(-2.0 / 6.0)).epsilon(1e-13));
}

TEST_CASE("psi_upper node counts match n") {
    // decay rate falls as 1/(3+2n), so the outermost node moves out with n;
    // r up to 500 covers all Laguerre roots for n <= 5
    for (int n = 0; n <= 5; ++n) {
        int sign_changes = 0;
        double prev = psi_upper(p_star, n, 0.5, 1e-3);
        for (int i = 1; i <= 50000; ++i) {
            const double r = 500.0 * i / 50000.0;
            const double v = psi_upper(p_star, n, 0.5, r);
            if (prev * v < 0.0) ++sign_changes;
            if (v != 0.0) prev = v;
        }
        CHECK(sign_changes == n);
    }
}

TEST_CASE("psi_upper rejects inadmissible levels") {
    CHECK_THROWS_AS(psi_upper(fig2_left, 0, 2.0, 1.0), std::domain_error);
}

TEST_CASE("psi_lower reference value at P*") {
    const double expected = (-4.0 / 3.0) * std::exp(-1.0 / 6.0) /
                            (std::sqrt(11.0) / 3.0 - 1.0);
    CHECK(psi_lower(p_star, 0, 0.5, +1, 1.0) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(-10.694).epsilon(1e-3));
}

TEST_CASE("psi_lower vanishes at the origin for P*") {
    // leading behaviour ~ r^0.5: successive decade steps shrink by ~sqrt(10)
    double prev = std::abs(psi_lower(p_star, 0, 0.5, +1, 1e-2));
    for (double r : {1e-3, 1e-4, 1e-5, 1e-6}) {
        const double v = std::abs(psi_lower(p_star, 0, 0.5, +1, r));
        CHECK(v < 0.5 * prev);
        prev = v;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("psi_lower singular branch raises") {
    PhysicalParams p = p_star;
    p.lambda2 = 0.0;  // omega_ac = 0, E = M on the + branch, but tau2 = 0 anyway
    CHECK_THROWS_AS(psi_lower(p, 0, 0.5, +1, 1.0), std::domain_error);
}

TEST_CASE("grid normalization") {
    {
        std::vector<double> grid(1001), samples(1001, 1.0);
        for (int i = 0; i <= 1000; ++i) grid[i] = i / 1000.0;
        const double scale = normalize_on_grid(samples, grid);
        CHECK(scale == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
        // idempotence
        CHECK(normalize_on_grid(samples, grid) == doctest::Approx(1.0).epsilon(1e-12));
    }
    {
        std::vector<double> grid(6001), samples(6001);
        for (int i = 0; i <= 6000; ++i) {
            grid[i] = 60.0 * i / 6000.0;
            samples[i] = psi_upper(p_star, 0, 0.5, grid[i]);
        }
        normalize_on_grid(samples, grid);
        double acc = 0.0;
        for (int i = 0; i <= 6000; ++i) {
            const double w = i == 0 || i == 6000 ? 0.005 : 0.01;
            acc += samples[i] * samples[i] * grid[i] * w;
        }
        CHECK(acc == doctest::Approx(1.0).epsilon(1e-9));
    }
    {
        std::vector<double> grid{0.0, 1.0}, samples{0.0, 0.0};
        CHECK_THROWS_AS(normalize_on_grid(samples, grid), std::domain_error);
    }
}

TEST_CASE("ODE residual of psi_upper converges at order >= 1.9") {
    // 4th-order central stencils applied to the radial equation satisfied by
    // psi_upper; the max residual over [0.5, 20] must shrink ~h^4 under halving.
    const RadialCoefficients rc = radial_coefficients(p_star, 0.5);
    const auto lvl = energy_level(p_star, 1, 0.5, +1);
    const double tau1 = lvl.tau1;
    auto residual_max = [&](double h) {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double r = 0.5 + (20.0 - 0.5) * i / 99.0;
            auto f = [&](double x) { return psi_upper(p_star, 1, 0.5, x); };
            const double d2 = (-f(r + 2 * h) + 16 * f(r + h) - 30 * f(r) +
                               16 * f(r - h) - f(r - 2 * h)) / (12 * h * h);
            const double d1 = (f(r - 2 * h) - 8 * f(r - h) + 8 * f(r + h) -
                               f(r + 2 * h)) / (12 * h);
            const double res = d2 + rc.beta1_drift / r * d1 +
                               (-tau1 + rc.tau2 / r - rc.tau3 / (r * r)) * f(r);
            worst = std::max(worst, std::abs(res));
        }
        return worst;
    };
    const double e1 = residual_max(0.02);
    const double e2 = residual_max(0.01);
    CHECK(std::log2(e1 / e2) >= 1.9);
}

TEST_CASE("spectrum table ordering and degeneracy") {
    {
        PhysicalParams p = p_star;
        p.lambda2 = 0.0;
        const std::vector<double> mls{0.5, 1.5};
        const auto table = spectrum_table(p, 2, mls);
        CHECK(table.levels.size() == 6);
        CHECK(table.groups.size() == 1);
        CHECK(table.groups.front().size() == 6);
    }
    {
        // P* with m_l in {1/2, 3/2}: D(1/2) = 3 + 2n and D(3/2) = 1 + 2n, so
        // the formal (3/2, n+1) level coincides exactly with (1/2, n). Two
        // pairs land inside n <= 2; the 3/2 column has tau2 < 0 throughout.
        const std::vector<double> mls{0.5, 1.5};
        const auto table = spectrum_table(p_star, 2, mls);
        CHECK(table.levels.size() == 6);
        CHECK(table.groups.size() == 4);
        std::size_t pairs = 0;
        for (const auto& g : table.groups) pairs += g.size() == 2;
        CHECK(pairs == 2);
        // deterministic (n, m_l) ordering
        CHECK(table.levels[0].n == 0);
        CHECK(table.levels[0].m_l == 0.5);
        CHECK(table.levels[1].m_l == 1.5);
        CHECK(table.levels[2].n == 1);
    }
    {
        PhysicalParams bad = p_star;
        bad.alpha = 1.5;
        const std::vector<double> mls{0.5};
        CHECK_THROWS_AS(spectrum_table(bad, 1, mls), std::invalid_argument);
    }
}

TEST_CASE("table periodicity: phase shift equals m_l shift level-by-level") {
    PhysicalParams p = p_star;
    p.lambda1 = 0.07;
    PhysicalParams shifted = p;
    shifted.lambda1 += 1.0 / (2.0 * p.alpha * p.mu_tilde);
    const std::vector<double> ml_lo{0.5}, ml_hi{1.5};
    const auto a = spectrum_table(shifted, 3, ml_lo);
    const auto b = spectrum_table(p, 3, ml_hi);
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
        CHECK(a.levels[i].E == doctest::Approx(b.levels[i].E).epsilon(1e-13));
    }
}
