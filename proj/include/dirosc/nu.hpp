#pragma once

#include <stdexcept>

// Parametric Nikiforov-Uvarov machinery for the hypergeometric-type equation
//
//   psi'' + (beta1 - beta2 r) / (r (1 - beta3 r)) psi'
//         + (-zeta1 r^2 + zeta2 r - zeta3) / (r (1 - beta3 r))^2 psi = 0.
//
// The six input coefficients determine ten derived quantities beta4..beta13,
// a quantization condition, and polynomial eigenfunctions (Jacobi for
// beta3 > 0, generalized Laguerre in the beta3 = 0 limit). zeta1 plays the
// role of the spectral unknown.

namespace dirosc {

struct NuInadmissibleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NuCoefficients {
    double beta1 = 0.0;
    double beta2 = 0.0;
    double beta3 = 0.0;
    double zeta1 = 0.0;
    double zeta2 = 0.0;
    double zeta3 = 0.0;
    // The beta3 = 0 branch is selected by this flag, never by floating-point
    // comparison against a computed beta3.
    bool laguerre_limit = true;

    static NuCoefficients laguerre_form(double beta1, double beta2, double zeta1,
                                        double zeta2, double zeta3) {
        return {beta1, beta2, 0.0, zeta1, zeta2, zeta3, true};
    }
    static NuCoefficients jacobi_form(double beta1, double beta2, double beta3,
                                      double zeta1, double zeta2, double zeta3) {
        return {beta1, beta2, beta3, zeta1, zeta2, zeta3, false};
    }
};

struct NuDerived {
    double beta4, beta5, beta6, beta7, beta8, beta9;
    double beta10, beta11, beta12, beta13;
};

// Throws NuInadmissibleError when beta8 < 0 or beta9 < 0 (complex exponents).
NuDerived derive_betas(const NuCoefficients& c);

// Left-hand side of the quantization condition; a root in the spectral
// parameter (embedded in zeta1) identifies level n.
double quantization_residual(const NuCoefficients& c, int n);

// Closed-form zeta1 root for the Coulomb limit beta2 = beta3 = 0:
//   zeta1 = zeta2^2 / (1 + 2n + 2 sqrt(beta8))^2.
// Requires zeta2 > 0 (otherwise no bound state in this branch).
double solve_zeta1_closed(const NuCoefficients& c, int n);

// General zeta1 root via bracketed bisection on quantization_residual;
// falls back to the closed form when beta2 = beta3 = 0.
double solve_zeta1(const NuCoefficients& c, int n);

// Eigenfunction at radius r (unnormalized):
//   beta3 > 0: r^b12 (1 - beta3 r)^(-b12 - b13/beta3)
//              P_n^{(b10-1, b11/beta3 - b10 - 1)}(1 - 2 beta3 r)
//   beta3 = 0: r^b12 e^{b13 r} L_n^{(b10-1)}(b11 r)
double nu_eigenfunction(const NuCoefficients& c, int n, double r);

}  // namespace dirosc
