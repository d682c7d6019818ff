#include "silt/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace silt::kernels::detail {

namespace {

// Exact for p < 2^26: every intermediate stays below 2^53.
__attribute__((target("avx2,fma"))) inline __m256d reduce_pd(__m256d t, __m256d p, __m256d inv_p) {
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, inv_p));
    __m256d r = _mm256_fnmadd_pd(q, p, t);
    __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
    r = _mm256_add_pd(r, _mm256_and_pd(neg, p));
    __m256d over = _mm256_cmp_pd(r, p, _CMP_GE_OQ);
    return _mm256_sub_pd(r, _mm256_and_pd(over, p));
}

} // namespace

__attribute__((target("avx2,fma"))) void axpy_avx2(Scalar* dst, const Scalar* src, std::size_t n,
                                                     Scalar factor, const Field& f) {
    const __m256d p = _mm256_set1_pd(static_cast<double>(f.prime()));
    const __m256d inv_p = _mm256_set1_pd(f.inverse_prime());
    const __m256d fac = _mm256_set1_pd(static_cast<double>(factor));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d d0 = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
        __m256d d1 = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i + 4)));
        __m256d s0 = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
        __m256d s1 = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i + 4)));
        __m256d r0 = reduce_pd(_mm256_fmadd_pd(fac, s0, d0), p, inv_p);
        __m256d r1 = reduce_pd(_mm256_fmadd_pd(fac, s1, d1), p, inv_p);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(r0));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i + 4), _mm256_cvttpd_epi32(r1));
    }
    for (; i + 4 <= n; i += 4) {
        __m256d d0 = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
        __m256d s0 = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
        __m256d r0 = reduce_pd(_mm256_fmadd_pd(fac, s0, d0), p, inv_p);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(r0));
    }
    if (i < n) axpy_scalar(dst + i, src + i, n - i, factor, f);
}

__attribute__((target("avx2,fma"))) void scale_avx2(Scalar* x, std::size_t n, Scalar factor,
                                                      const Field& f) {
    const __m256d p = _mm256_set1_pd(static_cast<double>(f.prime()));
    const __m256d inv_p = _mm256_set1_pd(f.inverse_prime());
    const __m256d fac = _mm256_set1_pd(static_cast<double>(factor));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i)));
        __m256d r = reduce_pd(_mm256_mul_pd(fac, v), p, inv_p);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(x + i), _mm256_cvttpd_epi32(r));
    }
    if (i < n) scale_scalar(x + i, n - i, factor, f);
}

} // namespace silt::kernels::detail

#endif
