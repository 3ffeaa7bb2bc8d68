#include "dirosc/orthopoly.hpp"

#include <stdexcept>

namespace dirosc {

double laguerre(int n, double a, double x) {
    if (n < 0) throw std::invalid_argument("laguerre: n must be non-negative");
    if (n == 0) return 1.0;
    double lm1 = 1.0;            // L_0
    double l = 1.0 + a - x;      // L_1
    for (int k = 1; k < n; ++k) {
        // (k+1) L_{k+1} = (2k+1+a-x) L_k - (k+a) L_{k-1}
        const double lp1 = ((2.0 * k + 1.0 + a - x) * l - (k + a) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

double laguerre_prime(int n, double a, double x) {
    if (n < 0) throw std::invalid_argument("laguerre_prime: n must be non-negative");
    if (n == 0) return 0.0;
    return -laguerre(n - 1, a + 1.0, x);
}

double jacobi(int n, double a, double b, double x) {
    if (n < 0) throw std::invalid_argument("jacobi: n must be non-negative");
    if (n == 0) return 1.0;
    double pm1 = 1.0;                                          // P_0
    double p = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);    // P_1
    for (int k = 1; k < n; ++k) {
        const double kk = k;
        const double c1 = 2.0 * (kk + 1.0) * (kk + a + b + 1.0) * (2.0 * kk + a + b);
        const double c2 = (2.0 * kk + a + b + 1.0) * (a * a - b * b);
        const double c3 = (2.0 * kk + a + b) * (2.0 * kk + a + b + 1.0) * (2.0 * kk + a + b + 2.0);
        const double c4 = 2.0 * (kk + a) * (kk + b) * (2.0 * kk + a + b + 2.0);
        const double pp1 = ((c2 + c3 * x) * p - c4 * pm1) / c1;
        pm1 = p;
        p = pp1;
    }
    return p;
}

}  // namespace dirosc
