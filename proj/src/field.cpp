#include "silt/field.hpp"

namespace silt {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t p) : p_(p), inv_p_(1.0 / static_cast<double>(p)) {
    if (p == 2 || p >= (1u << 31) || !is_prime(p))
        throw Error("field prime must be an odd prime below 2^31, got " + std::to_string(p));
}

Scalar Field::inv(Scalar a) const {
    if (a == 0) throw Error("inverse of zero in F_" + std::to_string(p_));
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return reduce(t);
}

} // namespace silt
