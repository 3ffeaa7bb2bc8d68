#include "dirosc/nu.hpp"

#include <cmath>

#include "dirosc/orthopoly.hpp"

namespace dirosc {

NuDerived derive_betas(const NuCoefficients& c) {
    NuDerived d;
    d.beta4 = 0.5 * (1.0 - c.beta1);
    d.beta5 = 0.5 * (c.beta2 - 2.0 * c.beta3);
    d.beta6 = d.beta5 * d.beta5 + c.zeta1;
    d.beta7 = 2.0 * d.beta4 * d.beta5 - c.zeta2;
    d.beta8 = d.beta4 * d.beta4 + c.zeta3;
    d.beta9 = c.beta3 * d.beta7 + c.beta3 * c.beta3 * d.beta8 + d.beta6;
    if (d.beta8 < 0.0) {
        throw NuInadmissibleError("beta8 < 0: complex NU exponents, unphysical parameters");
    }
    if (d.beta9 < 0.0) {
        throw NuInadmissibleError("beta9 < 0: complex NU exponents, unphysical parameters");
    }
    const double s8 = std::sqrt(d.beta8);
    const double s9 = std::sqrt(d.beta9);
    d.beta10 = c.beta1 + 2.0 * d.beta4 + 2.0 * s8;
    d.beta11 = c.beta2 - 2.0 * d.beta5 + 2.0 * (s9 + c.beta3 * s8);
    d.beta12 = d.beta4 + s8;
    d.beta13 = d.beta5 - s9 - c.beta3 * s8;
    return d;
}

double quantization_residual(const NuCoefficients& c, int n) {
    const NuDerived d = derive_betas(c);
    const double s8 = std::sqrt(d.beta8);
    const double s9 = std::sqrt(d.beta9);
    return n * c.beta2 - (2.0 * n + 1.0) * d.beta5 +
           (2.0 * n + 1.0) * (s9 - c.beta3 * s8) + d.beta7 +
           2.0 * c.beta3 * d.beta8 + 2.0 * std::sqrt(d.beta8 * d.beta9) +
           n * (n - 1.0) * c.beta3;
}

double solve_zeta1_closed(const NuCoefficients& c, int n) {
    if (!c.laguerre_limit || c.beta2 != 0.0) {
        throw std::invalid_argument("solve_zeta1_closed requires beta2 = beta3 = 0");
    }
    if (c.zeta2 <= 0.0) {
        throw NuInadmissibleError("zeta2 <= 0: no bound state in this branch");
    }
    NuCoefficients probe = c;
    probe.zeta1 = 0.0;
    const double s8 = std::sqrt(derive_betas(probe).beta8);
    const double denom = 1.0 + 2.0 * n + 2.0 * s8;
    const double root = c.zeta2 / denom;
    return root * root;
}

double solve_zeta1(const NuCoefficients& c, int n) {
    if (c.laguerre_limit && c.beta2 == 0.0) {
        return solve_zeta1_closed(c, n);
    }
    auto residual = [&](double z1) {
        NuCoefficients trial = c;
        trial.zeta1 = z1;
        return quantization_residual(trial, n);
    };
    // The residual grows like sqrt(zeta1) for large zeta1; expand the upper
    // bracket geometrically from the first admissible point.
    double lo = 0.0;
    // beta9 >= 0 needs zeta1 >= -(beta3 beta7 + beta3^2 beta8 + beta5^2).
    {
        const NuDerived d0 = [&] {
            NuDerived d;
            d.beta4 = 0.5 * (1.0 - c.beta1);
            d.beta5 = 0.5 * (c.beta2 - 2.0 * c.beta3);
            d.beta7 = 2.0 * d.beta4 * d.beta5 - c.zeta2;
            d.beta8 = d.beta4 * d.beta4 + c.zeta3;
            return d;
        }();
        const double zmin = -(c.beta3 * d0.beta7 + c.beta3 * c.beta3 * d0.beta8 +
                              d0.beta5 * d0.beta5);
        if (zmin > lo) lo = zmin;
    }
    double flo = residual(lo);
    if (flo == 0.0) return lo;
    double hi = (std::abs(lo) + 1.0);
    double fhi = residual(hi);
    int expansions = 0;
    while (flo * fhi > 0.0) {
        if (++expansions > 200) {
            throw NuInadmissibleError("quantization residual has no sign change: no root bracketed");
        }
        hi = lo + (hi - lo) * 2.0;
        fhi = residual(hi);
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = residual(mid);
        if (fm == 0.0 || hi - lo < 1e-15 * (1.0 + std::abs(mid))) return mid;
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

double nu_eigenfunction(const NuCoefficients& c, int n, double r) {
    if (r < 0.0) throw std::domain_error("nu_eigenfunction: r must be non-negative");
    const NuDerived d = derive_betas(c);
    if (c.laguerre_limit) {
        return std::pow(r, d.beta12) * std::exp(d.beta13 * r) *
               laguerre(n, d.beta10 - 1.0, d.beta11 * r);
    }
    if (r * c.beta3 >= 1.0) {
        throw std::domain_error("nu_eigenfunction: r outside (0, 1/beta3)");
    }
    const double a = d.beta10 - 1.0;
    const double b = d.beta11 / c.beta3 - d.beta10 - 1.0;
    return std::pow(r, d.beta12) *
           std::pow(1.0 - c.beta3 * r, -d.beta12 - d.beta13 / c.beta3) *
           jacobi(n, a, b, 1.0 - 2.0 * c.beta3 * r);
}

}  // namespace dirosc
