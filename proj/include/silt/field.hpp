#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace silt {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using Scalar = std::uint32_t;

/// Prime field F_p with p an odd prime below 2^31.
class Field {
  public:
    static constexpr std::uint32_t kDefaultPrime = 32003;

    Field() : Field(kDefaultPrime) {}
    explicit Field(std::uint32_t p);

    std::uint32_t prime() const { return p_; }
    double inverse_prime() const { return inv_p_; }

    Scalar reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Scalar inv(Scalar a) const;
    /// Symmetric representative in (-p/2, p/2].
    std::int64_t lift(Scalar a) const {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

  private:
    std::uint32_t p_;
    double inv_p_;
};

bool is_prime(std::uint64_t n);

} // namespace silt
