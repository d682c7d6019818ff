#pragma once

// Row kernels for dense elimination over F_p. The scalar versions are the
// reference; vector variants must agree with them bit for bit.

#include <cstddef>
#include <string_view>
#include <vector>

#include "silt/field.hpp"

namespace silt::kernels {

/// dst[i] = (dst[i] + factor * src[i]) mod p
using AxpyFn = void (*)(Scalar* dst, const Scalar* src, std::size_t n, Scalar factor,
                        const Field& f);
/// x[i] = (factor * x[i]) mod p
using ScaleFn = void (*)(Scalar* x, std::size_t n, Scalar factor, const Field& f);

struct KernelTable {
    std::string_view name;
    AxpyFn axpy;
    ScaleFn scale;
    /// Largest prime the variant handles exactly.
    std::uint32_t max_prime;
};

const KernelTable& scalar_kernels();

/// Variants compiled into this binary and usable on this CPU (scalar first).
std::vector<const KernelTable*> available_kernels();

/// Best variant for the given prime. SILT_KERNELS=scalar forces the reference.
const KernelTable& select_kernels(const Field& f);

void axpy(Scalar* dst, const Scalar* src, std::size_t n, Scalar factor, const Field& f);
void scale(Scalar* x, std::size_t n, Scalar factor, const Field& f);

namespace detail {
void axpy_scalar(Scalar* dst, const Scalar* src, std::size_t n, Scalar factor, const Field& f);
void scale_scalar(Scalar* x, std::size_t n, Scalar factor, const Field& f);
#if defined(__x86_64__) || defined(_M_X64)
void axpy_avx2(Scalar* dst, const Scalar* src, std::size_t n, Scalar factor, const Field& f);
void scale_avx2(Scalar* x, std::size_t n, Scalar factor, const Field& f);
#endif
} // namespace detail

} // namespace silt::kernels
