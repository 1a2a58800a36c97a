#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fpt/field.hpp"

namespace fpt {

/// Dense polynomial in t over F_p, coefficients ascending. The zero polynomial has no
/// coefficients; otherwise the top coefficient is nonzero.
class Poly {
   public:
    explicit Poly(std::uint32_t p) : field_(p) {}
    Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs);
    /// Coefficients given as arbitrary integers, reduced mod p.
    static Poly from_ints(std::uint32_t p, std::span<const std::int64_t> coeffs);

    static Poly constant(std::uint32_t p, std::int64_t c);
    static Poly monomial(std::uint32_t p, std::int64_t c, std::size_t degree);
    static Poly t(std::uint32_t p) { return monomial(p, 1, 1); }

    std::uint32_t p() const noexcept { return field_.p(); }
    const PrimeField& field() const noexcept { return field_; }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    std::uint32_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint32_t lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }

    /// |f| = p^deg f; zero maps to 0.
    std::uint64_t norm() const;

    Poly monic() const;
    Poly scaled(std::uint32_t c) const;
    Poly derivative() const;
    /// Evaluate at a point of F_p.
    std::uint32_t eval(std::uint32_t x) const noexcept;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.p() == b.p() && a.coeffs_ == b.coeffs_;
    }
    /// Degree first, then coefficients from the top. Only meaningful for equal p.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

   private:
    void normalize() noexcept;

    PrimeField field_;
    std::vector<std::uint32_t> coeffs_;
};

void require_same_field(const Poly& a, const Poly& b);

/// a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; gcd(a, 0) = monic(a). Both zero is an error.
Poly gcd(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Canonical text: descending powers, nonzero coefficients in [0, p), e.g. "t^3+2*t+1".
std::string to_string(const Poly& f);
/// Parse the t-polynomial grammar; coefficients reduced mod p.
Poly parse_poly(std::uint32_t p, const std::string& text);

/// Total multiplicity of irreducible factors by degree: {e -> sum of multiplicities}.
struct FactorProfile {
    Poly modulus;
    std::map<int, int> degree_multiset;

    int total_degree() const;
};

/// Square-free factors f = prod g_i^i, each g_i monic squarefree (may be absent).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);
/// Requires f monic and nonconstant.
FactorProfile distinct_degree_profile(const Poly& f);
/// p^e for the least degree e of an irreducible factor.
std::uint64_t lpf(const Poly& f);
bool is_irreducible(const Poly& f);
/// Smallest-degree monic irreducible factor (lexicographically first in that degree).
Poly least_irreducible_factor(const Poly& f);

/// Monic polynomials of a fixed degree in lexicographic coefficient order (t^0 varies fastest).
class MonicRange {
   public:
    MonicRange(std::uint32_t p, int degree);

    class iterator {
       public:
        using value_type = Poly;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(const MonicRange* range, std::uint64_t index) : range_(range), index_(index) {}
        Poly operator*() const { return range_->at(index_); }
        iterator& operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++index_;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

       private:
        const MonicRange* range_ = nullptr;
        std::uint64_t index_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, count_}; }
    std::uint64_t size() const noexcept { return count_; }
    Poly at(std::uint64_t index) const;

   private:
    std::uint32_t p_;
    int degree_;
    std::uint64_t count_;
};

inline MonicRange enumerate_monic(std::uint32_t p, int degree) { return MonicRange(p, degree); }

/// Polynomial with base-p digits of `index` as coefficients (t^0 least significant).
Poly poly_from_index(std::uint32_t p, std::uint64_t index);
std::uint64_t index_of_poly(const Poly& f);

}  // namespace fpt
