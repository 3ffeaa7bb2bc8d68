// Compiled with -mavx2 only; callers must check CPU support via dispatch.

#if defined(__AVX2__)

#include <immintrin.h>

#include "dirosc/simd/kernels.hpp"

namespace dirosc::simd {

namespace {

constexpr double kPivMin = 1e-300;

void coulomb_potential_fill_avx2(const double* r, double* out, std::size_t n,
                                 double c0, double c1, double c2) {
    const __m256d vc0 = _mm256_set1_pd(c0);
    const __m256d vc1 = _mm256_set1_pd(c1);
    const __m256d vc2 = _mm256_set1_pd(c2);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vr = _mm256_loadu_pd(r + i);
        const __m256d inv = _mm256_div_pd(one, vr);
        __m256d acc = _mm256_add_pd(vc0, _mm256_mul_pd(vc1, inv));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(vc2, _mm256_mul_pd(inv, inv)));
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < n; ++i) {
        const double inv = 1.0 / r[i];
        out[i] = c0 + c1 * inv + c2 * (inv * inv);
    }
}

// One Sturm recurrence pass, four shifts in the four lanes. The per-lane
// operation sequence (sub, div, sub, zero-pivot blend) matches the scalar
// kernel exactly, so the counts are bit-identical to four scalar passes.
void sturm_count4_avx2(const double* diag, std::size_t n, double off_sq,
                       const double* shifts, int* counts) {
    const __m256d x = _mm256_loadu_pd(shifts);
    const __m256d voff = _mm256_set1_pd(off_sq);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d negpiv = _mm256_set1_pd(-kPivMin);

    __m256d q = _mm256_sub_pd(_mm256_set1_pd(diag[0]), x);
    __m256d zmask = _mm256_cmp_pd(q, zero, _CMP_EQ_OQ);
    q = _mm256_blendv_pd(q, negpiv, zmask);
    __m256i count = _mm256_srli_epi64(
        _mm256_castpd_si256(_mm256_cmp_pd(q, zero, _CMP_LT_OQ)), 63);

    for (std::size_t i = 1; i < n; ++i) {
        q = _mm256_sub_pd(_mm256_sub_pd(_mm256_set1_pd(diag[i]), x),
                          _mm256_div_pd(voff, q));
        zmask = _mm256_cmp_pd(q, zero, _CMP_EQ_OQ);
        q = _mm256_blendv_pd(q, negpiv, zmask);
        const __m256i neg = _mm256_srli_epi64(
            _mm256_castpd_si256(_mm256_cmp_pd(q, zero, _CMP_LT_OQ)), 63);
        count = _mm256_add_epi64(count, neg);
    }

    alignas(32) long long c[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(c), count);
    for (int j = 0; j < 4; ++j) counts[j] = static_cast<int>(c[j]);
}

double weighted_sumsq_avx2(const double* v, const double* w, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vv = _mm256_loadu_pd(v + i);
        const __m256d vw = _mm256_loadu_pd(w + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_mul_pd(vv, vv), vw));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) total += v[i] * v[i] * w[i];
    return total;
}

}  // namespace

const Kernels* avx2_kernels_impl() {
    static const Kernels k{
        coulomb_potential_fill_avx2,
        sturm_count4_avx2,
        weighted_sumsq_avx2,
        "avx2",
    };
    return &k;
}

}  // namespace dirosc::simd

#else

namespace dirosc::simd {
const Kernels* avx2_kernels_impl() { return nullptr; }
}  // namespace dirosc::simd

#endif
