#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fpt/poly.hpp"
#include "fpt/quotient.hpp"

namespace fpt {

/// P(y) with coefficients in F_p[t], stored sparsely by y-exponent. No zero coefficients.
class YPoly {
   public:
    using Terms = std::map<std::uint64_t, Poly>;

    explicit YPoly(std::uint32_t p) : p_(p) { PrimeField check(p); }
    YPoly(std::uint32_t p, Terms terms);
    static YPoly monomial(std::uint32_t p, const Poly& c, std::uint64_t e);
    static YPoly y(std::uint32_t p) { return monomial(p, Poly::constant(p, 1), 1); }

    std::uint32_t p() const noexcept { return p_; }
    const Terms& terms() const noexcept { return terms_; }
    /// Largest exponent; 0 for constants (including zero).
    std::uint64_t degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return degree() == 0; }
    Poly coeff(std::uint64_t e) const;
    Poly constant_term() const { return coeff(0); }
    /// All coefficients lie in F_p.
    bool has_constant_coeffs() const noexcept;

    YPoly operator-() const;
    friend YPoly operator+(const YPoly& a, const YPoly& b);
    friend YPoly operator-(const YPoly& a, const YPoly& b) { return a + (-b); }
    friend bool operator==(const YPoly&, const YPoly&) = default;

   private:
    std::uint32_t p_;
    Terms terms_;
};

std::string to_string(const YPoly& P);
YPoly parse_ypoly(std::uint32_t p, const std::string& text);

/// T(y, z) with F_p[t] coefficients, keyed by (deg_y, deg_z).
struct BiPoly {
    std::uint32_t p;
    std::map<std::pair<std::uint64_t, std::uint64_t>, Poly> terms;
};
std::string to_string(const BiPoly& T);
BiPoly parse_bipoly(std::uint32_t p, const std::string& text);

/// P = a0 + sum_r eta_r(y^r), p not dividing r, eta_r(y) = sum_j parts[r][j] y^(p^j).
struct SeparableDecomposition {
    std::uint32_t p;
    Poly a0;
    std::map<std::uint64_t, std::vector<Poly>> parts;
};

SeparableDecomposition decompose(const YPoly& P);
YPoly reassemble(const SeparableDecomposition& dec);

/// Largest base-p digit sum among the exponents of P; 0 for constants.
int d_deg(const YPoly& P);
int digit_sum(std::uint64_t m, std::uint32_t p) noexcept;
/// floor(log_p d) for d >= 1.
int floor_log(std::uint64_t d, std::uint32_t p) noexcept;

/// P(y) in F[t]_Q.
Residue eval_mod(const YPoly& P, const Residue& y);
/// Index of P(y) for every y, in index order.
std::vector<std::uint64_t> value_table(const YPoly& P, const ResidueCtx& ctx);
/// P reduced mod Q: coefficients taken mod Q, zero terms dropped.
YPoly reduce_coeffs(const YPoly& P, const ResidueCtx& ctx);

}  // namespace fpt
