#include "dirosc/simd/kernels.hpp"

namespace dirosc::simd {

namespace {

constexpr double kPivMin = 1e-300;

void coulomb_potential_fill_scalar(const double* r, double* out, std::size_t n,
                                   double c0, double c1, double c2) {
    for (std::size_t i = 0; i < n; ++i) {
        const double inv = 1.0 / r[i];
        out[i] = c0 + c1 * inv + c2 * (inv * inv);
    }
}

void sturm_count4_scalar(const double* diag, std::size_t n, double off_sq,
                         const double* shifts, int* counts) {
    for (int j = 0; j < 4; ++j) {
        const double x = shifts[j];
        double q = diag[0] - x;
        if (q == 0.0) q = -kPivMin;
        int count = q < 0.0 ? 1 : 0;
        for (std::size_t i = 1; i < n; ++i) {
            q = (diag[i] - x) - off_sq / q;
            if (q == 0.0) q = -kPivMin;
            if (q < 0.0) ++count;
        }
        counts[j] = count;
    }
}

double weighted_sumsq_scalar(const double* v, const double* w, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += v[i] * v[i] * w[i];
    }
    return acc;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{
        coulomb_potential_fill_scalar,
        sturm_count4_scalar,
        weighted_sumsq_scalar,
        "scalar",
    };
    return k;
}

}  // namespace dirosc::simd
