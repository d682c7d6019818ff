#include <cstdlib>
#include <cstring>

#include "silt/kernels.hpp"

namespace silt::kernels {

namespace {

constexpr KernelTable kScalar{"scalar", &detail::axpy_scalar, &detail::scale_scalar,
                              (1u << 31) - 1};
#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2{"avx2", &detail::axpy_avx2, &detail::scale_avx2, (1u << 26) - 1};

bool cpu_has_avx2() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable* detect_best() {
    if (const char* env = std::getenv("SILT_KERNELS"); env && std::strcmp(env, "scalar") == 0)
        return &kScalar;
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) return &kAvx2;
#endif
    return &kScalar;
}

} // namespace

const KernelTable& scalar_kernels() { return kScalar; }

std::vector<const KernelTable*> available_kernels() {
    std::vector<const KernelTable*> out{&kScalar};
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) out.push_back(&kAvx2);
#endif
    return out;
}

const KernelTable& select_kernels(const Field& f) {
    static const KernelTable* best = detect_best();
    return f.prime() <= best->max_prime ? *best : kScalar;
}

void axpy(Scalar* dst, const Scalar* src, std::size_t n, Scalar factor, const Field& f) {
    if (factor == 0 || n == 0) return;
    select_kernels(f).axpy(dst, src, n, factor, f);
}

void scale(Scalar* x, std::size_t n, Scalar factor, const Field& f) {
    if (n == 0 || factor == 1) return;
    select_kernels(f).scale(x, n, factor, f);
}

} // namespace silt::kernels
