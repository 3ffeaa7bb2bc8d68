#pragma once

#include <cstddef>
#include <string>

// Data-parallel inner loops used by the oracle and normalization paths.
// Scalar reference kernels plus an AVX2 variant, selected once at startup.
// The AVX2 Sturm counter performs the same IEEE operation sequence per lane
// as the scalar kernel, so eigenvalue counts are identical between variants.
//
// Selection override: environment variable DIROSC_SIMD=scalar|avx2.

namespace dirosc::simd {

struct Kernels {
    // out[i] = c0 + c1 / r[i] + c2 / r[i]^2
    void (*coulomb_potential_fill)(const double* r, double* out, std::size_t n,
                                   double c0, double c1, double c2);

    // Sturm sign counts for a symmetric tridiagonal operator with diagonal
    // `diag` and constant squared off-diagonal `off_sq`, at four shifts
    // simultaneously: counts[j] = #eigenvalues < shifts[j].
    void (*sturm_count4)(const double* diag, std::size_t n, double off_sq,
                         const double* shifts, int* counts);

    // sum_i v[i]^2 w[i]
    double (*weighted_sumsq)(const double* v, const double* w, std::size_t n);

    const char* name;
};

const Kernels& scalar_kernels();

// nullptr when AVX2 is not available on this CPU.
const Kernels* avx2_kernels();

// Runtime-selected active variant (AVX2 when supported, unless overridden).
const Kernels& active();

}  // namespace dirosc::simd
