#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dirosc/nu.hpp"

using namespace dirosc;

TEST_CASE("derived betas, flat-space Coulomb reduction") {
    const auto c = NuCoefficients::laguerre_form(0.0, 0.0, 0.3, 0.8, 1.1);
    const auto d = derive_betas(c);
    CHECK(d.beta4 == 0.5);
    CHECK(d.beta5 == 0.0);
    CHECK(d.beta6 == 0.3);
    CHECK(d.beta7 == -0.8);
    CHECK(d.beta8 == doctest::Approx(0.25 + 1.1).epsilon(1e-15));
    CHECK(d.beta9 == 0.3);
}

TEST_CASE("derived betas, drift case") {
    const auto c = NuCoefficients::laguerre_form(1.0, 0.0, 0.1, 0.5, 0.75);
    const auto d = derive_betas(c);
    CHECK(d.beta4 == 0.0);
    CHECK(d.beta8 == 0.75);
}

TEST_CASE("inadmissible exponents rejected") {
    const auto c = NuCoefficients::laguerre_form(3.0, 0.0, 0.1, 0.5, -2.0);
    // beta4 = -1, beta8 = 1 - 2 < 0
    CHECK_THROWS_AS(derive_betas(c), NuInadmissibleError);

    const auto c2 = NuCoefficients::laguerre_form(0.0, 0.0, -1.0, 0.5, 0.75);
    CHECK_THROWS_AS(derive_betas(c2), NuInadmissibleError);  // beta9 = zeta1 < 0
}

TEST_CASE("beta9 defining identity on random draws") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    std::uniform_real_distribution<double> s(-1.0, 1.0);
    int checked = 0;
    while (checked < 1000) {
        const auto c = NuCoefficients::jacobi_form(s(rng), s(rng), u(rng), u(rng),
                                                   s(rng), u(rng));
        NuDerived d;
        try {
            d = derive_betas(c);
        } catch (const NuInadmissibleError&) {
            continue;
        }
        const double recomputed = c.beta3 * d.beta7 + c.beta3 * c.beta3 * d.beta8 + d.beta6;
        CHECK(d.beta9 == recomputed);
        CHECK(d.beta4 == 0.5 * (1.0 - c.beta1));
        CHECK(d.beta5 == 0.5 * (c.beta2 - 2.0 * c.beta3));
        CHECK(d.beta6 == d.beta5 * d.beta5 + c.zeta1);
        CHECK(d.beta7 == 2.0 * d.beta4 * d.beta5 - c.zeta2);
        CHECK(d.beta8 == d.beta4 * d.beta4 + c.zeta3);
        ++checked;
    }
}

TEST_CASE("quantization residual, Coulomb limit") {
    // residual reduces to sqrt(zeta1)(2n+1+2 sqrt(beta8)) - zeta2
    auto c = NuCoefficients::laguerre_form(0.0, 0.0, 1.0 / 36.0, 0.5, 0.75);
    CHECK(quantization_residual(c, 0) == doctest::Approx(0.0).epsilon(1e-15));

    c.zeta1 = 0.0;
    CHECK(quantization_residual(c, 5) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("closed-form zeta1") {
    {
        auto c = NuCoefficients::laguerre_form(1.0, 0.0, 0.0, 0.5, 1.0);
        // beta8 = 0 + 1 = 1; zeta1 = (0.5 / 3)^2
        CHECK(solve_zeta1_closed(c, 0) == doctest::Approx(1.0 / 36.0).epsilon(1e-15));
    }
    {
        auto c = NuCoefficients::laguerre_form(1.0, 0.0, 0.0, 1.0, 0.25);
        CHECK(solve_zeta1_closed(c, 0) == doctest::Approx(0.25).epsilon(1e-15));
    }
    {
        auto c = NuCoefficients::laguerre_form(0.0, 0.0, 0.0, 0.0, 0.75);
        CHECK_THROWS_AS(solve_zeta1_closed(c, 0), NuInadmissibleError);
    }
}

TEST_CASE("closed-form zeta1 zeroes the residual: 1000 random Coulomb draws") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> b1(-2.0, 1.0);
    std::uniform_real_distribution<double> z2(0.05, 5.0);
    std::uniform_real_distribution<double> z3(0.0, 5.0);
    std::uniform_int_distribution<int> nn(0, 8);
    for (int i = 0; i < 1000; ++i) {
        auto c = NuCoefficients::laguerre_form(b1(rng), 0.0, 0.0, z2(rng), z3(rng));
        const int n = nn(rng);
        c.zeta1 = solve_zeta1_closed(c, n);
        CHECK(std::abs(quantization_residual(c, n)) < 1e-12);
    }
}

TEST_CASE("general root-finder agrees with the closed form and extends it") {
    auto c = NuCoefficients::laguerre_form(0.5, 0.0, 0.0, 0.8, 0.3);
    for (int n : {0, 1, 3}) {
        CHECK(solve_zeta1(c, n) ==
              doctest::Approx(solve_zeta1_closed(c, n)).epsilon(1e-12));
    }

    // beta3 > 0 case: root verified against the residual itself
    auto cj = NuCoefficients::jacobi_form(0.2, 0.4, 0.05, 0.0, 1.2, 0.6);
    for (int n : {0, 2}) {
        cj.zeta1 = solve_zeta1(cj, n);
        CHECK(std::abs(quantization_residual(cj, n)) < 1e-10);
    }
}

TEST_CASE("eigenfunction, Laguerre branch") {
    // beta1 = 0, zeta3 chosen so beta12 = 1.5, with beta13 = -1/6, beta11 = 1/3
    auto c = NuCoefficients::laguerre_form(0.0, 0.0, 1.0 / 36.0, 0.5, 0.75);
    const auto d = derive_betas(c);
    CHECK(d.beta12 == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(d.beta13 == doctest::Approx(-1.0 / 6.0).epsilon(1e-14));
    CHECK(d.beta10 - 1.0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(d.beta11 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    CHECK(nu_eigenfunction(c, 0, 1.0) ==
          doctest::Approx(std::exp(-1.0 / 6.0)).epsilon(1e-13));
    CHECK(nu_eigenfunction(c, 0, 0.0) == 0.0);
}

TEST_CASE("n = 1 Laguerre-branch eigenfunction vanishes exactly once on (0, inf)") {
    auto c = NuCoefficients::laguerre_form(0.0, 0.0, 1.0 / 36.0, 0.5, 0.75);
    int sign_changes = 0;
    double prev = nu_eigenfunction(c, 1, 1e-3);
    for (int i = 1; i <= 4000; ++i) {
        const double r = 60.0 * i / 4000.0;
        const double v = nu_eigenfunction(c, 1, r);
        if (prev * v < 0.0) ++sign_changes;
        if (v != 0.0) prev = v;
    }
    CHECK(sign_changes == 1);
}

TEST_CASE("Jacobi branch converges to the Laguerre limit") {
    const auto base = NuCoefficients::laguerre_form(0.3, 0.0, 0.02, 0.9, 0.5);
    const double r = 1.7;
    for (int n : {0, 1, 2}) {
        const double limit = nu_eigenfunction(base, n, r);
        double prev_diff = 1e300;
        for (double b3 : {1e-4, 1e-6}) {
            auto c = NuCoefficients::jacobi_form(base.beta1, base.beta2, b3,
                                                 base.zeta1, base.zeta2, base.zeta3);
            const double diff = std::abs(nu_eigenfunction(c, n, r) - limit);
            CHECK(diff < prev_diff);
            prev_diff = diff;
        }
    }
}

TEST_CASE("Jacobi branch domain error at r >= 1/beta3") {
    const auto c = NuCoefficients::jacobi_form(0.0, 0.0, 0.5, 0.01, 0.9, 0.5);
    CHECK_THROWS_AS(nu_eigenfunction(c, 0, 2.5), std::domain_error);
}
