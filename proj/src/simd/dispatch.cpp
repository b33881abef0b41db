#include "fplab/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace fplab::simd {

const KernelTable& scalar_table() {
    static const KernelTable table{"scalar",
                                   &scalar::dot,
                                   &scalar::weighted_sq_dist,
                                   &scalar::sq_dist,
                                   &scalar::lerp,
                                   &scalar::all_leq};
    return table;
}

const KernelTable* avx2_table() {
#if defined(FPLAB_WITH_AVX2)
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    if (!supported) return nullptr;
    static const KernelTable table{"avx2",        &avx2::dot,  &avx2::weighted_sq_dist,
                                   &avx2::sq_dist, &avx2::lerp, &avx2::all_leq};
    return &table;
#else
    return nullptr;
#endif
}

const KernelTable& active() {
    static const KernelTable& chosen = []() -> const KernelTable& {
        const char* env = std::getenv("FPLAB_SIMD");
        if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_table();
        if (const KernelTable* t = avx2_table()) return *t;
        return scalar_table();
    }();
    return chosen;
}

}  // namespace fplab::simd
