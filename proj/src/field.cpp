#include "fpt/field.hpp"

#include <string>

#include "fpt/errors.hpp"

namespace fpt {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p > kMaxPrime || !is_prime(p))
        throw PreconditionError("coefficient modulus must be a prime <= " + std::to_string(kMaxPrime) + ", got " +
                                std::to_string(p));
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t result = 1 % p_;
    std::uint32_t base = a % p_;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw PreconditionError("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

std::uint64_t checked_pow(std::uint64_t n, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (n != 0 && r > (std::uint64_t{1} << 62) / n) throw PreconditionError("integer power overflow");
        r *= n;
    }
    return r;
}

}  // namespace fpt
