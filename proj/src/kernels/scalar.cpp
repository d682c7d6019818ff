#include "silt/kernels.hpp"

namespace silt::kernels::detail {

void axpy_scalar(Scalar* dst, const Scalar* src, std::size_t n, Scalar factor, const Field& f) {
    const std::uint64_t p = f.prime();
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<Scalar>((dst[i] + static_cast<std::uint64_t>(factor) * src[i]) % p);
}

void scale_scalar(Scalar* x, std::size_t n, Scalar factor, const Field& f) {
    const std::uint64_t p = f.prime();
    for (std::size_t i = 0; i < n; ++i)
        x[i] = static_cast<Scalar>(static_cast<std::uint64_t>(factor) * x[i] % p);
}

} // namespace silt::kernels::detail
