#pragma once

#include <cstdint>

namespace fpt {

/// Arithmetic in the prime field F_p, p < 2^16 + 1. Values are plain integers in [0, p).
class PrimeField {
   public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t reduce(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        auto s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    /// Throws PreconditionError on zero.
    std::uint32_t inv(std::uint32_t a) const;

    /// Symmetric representative in (-p/2, p/2], used for human-facing output.
    std::int64_t signed_rep(std::uint32_t a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

   private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Largest prime supported for the coefficient field.
inline constexpr std::uint32_t kMaxPrime = 65521;

/// n^e with overflow check (throws PreconditionError when the result exceeds 2^62).
std::uint64_t checked_pow(std::uint64_t n, unsigned e);

}  // namespace fpt
