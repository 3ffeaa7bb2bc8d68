#include <cstdlib>
#include <cstring>

#include "dirosc/simd/kernels.hpp"

namespace dirosc::simd {

// Defined in kernels_avx2.cpp; returns nullptr when that TU was built
// without AVX2 support.
const Kernels* avx2_kernels_impl();

const Kernels* avx2_kernels() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) {
        return avx2_kernels_impl();
    }
#endif
    return nullptr;
}

const Kernels& active() {
    static const Kernels* selected = [] {
        const char* force = std::getenv("DIROSC_SIMD");
        if (force != nullptr) {
            if (std::strcmp(force, "scalar") == 0) return &scalar_kernels();
            if (std::strcmp(force, "avx2") == 0 && avx2_kernels() != nullptr) {
                return avx2_kernels();
            }
        }
        const Kernels* v = avx2_kernels();
        return v != nullptr ? v : &scalar_kernels();
    }();
    return *selected;
}

}  // namespace dirosc::simd
