#pragma once

// Generalized Laguerre and Jacobi polynomial evaluation via the standard
// three-term upward recurrences. Values are returned in the conventional
// normalization (L_0 = P_0 = 1). Intended range is small degree (n <= ~100);
// no asymptotic regimes.

namespace dirosc {

// L_n^{(a)}(x)
double laguerre(int n, double a, double x);

// d/dx L_n^{(a)}(x) = -L_{n-1}^{(a+1)}(x) for n >= 1, 0 for n = 0.
double laguerre_prime(int n, double a, double x);

// P_n^{(a,b)}(x)
double jacobi(int n, double a, double b, double x);

}  // namespace dirosc
