#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fpt/poly.hpp"

namespace fpt {

class Residue;

/// The residue ring F_p[t]/(Q) for monic Q of degree n >= 1.
///
/// Elements are indexed by the base-p integer formed from their coefficients
/// (coefficient of t^0 least significant), so the index space is [0, p^n).
/// The ring also carries the Gram matrix of the character pairing
///   <s, x> = coefficient of t^(n-1) in (s*x mod Q),
/// which is the t^-1 Laurent coefficient of s*x/Q. It is a Hankel matrix with
/// anti-diagonal 1, so it is always invertible.
class ResidueCtx : public std::enable_shared_from_this<ResidueCtx> {
   public:
    static std::shared_ptr<const ResidueCtx> create(const Poly& modulus);
    static std::shared_ptr<const ResidueCtx> create(std::uint32_t p, const std::string& modulus_text);

    const Poly& modulus() const noexcept { return modulus_; }
    std::uint32_t p() const noexcept { return modulus_.p(); }
    const PrimeField& field() const noexcept { return modulus_.field(); }
    int degree() const noexcept { return modulus_.degree(); }
    /// |Q| = p^n.
    std::uint64_t size() const noexcept { return size_; }
    std::uint64_t lpf() const noexcept { return lpf_; }
    const std::vector<std::vector<std::uint32_t>>& pairing_gram() const noexcept { return gram_; }

    Poly reduce(const Poly& f) const;
    Residue element(const Poly& f) const;
    Residue at(std::uint64_t index) const;
    Residue zero() const;

    std::uint64_t index_of(const Poly& reduced) const;
    std::vector<std::uint32_t> digits(std::uint64_t index) const;
    std::uint64_t from_digits(const std::vector<std::uint32_t>& digits) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t neg(std::uint64_t a) const noexcept;
    std::uint64_t scale(std::uint64_t a, std::uint32_t c) const noexcept;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;

    /// <s, x> in F_p.
    std::uint32_t pair(std::uint64_t s, std::uint64_t x) const;
    /// The vector G*s; <s, x> = sum_j (G s)_j x_j.
    std::vector<std::uint32_t> pairing_row(std::uint64_t s) const;
    /// <s, x> for every x, in index order. O(|Q|).
    std::vector<std::uint32_t> pairing_table(std::uint64_t s) const;
    /// Index of G*s, the coordinate frequency matching character s.
    std::uint64_t gram_image(std::uint64_t s) const;

    bool same_ring(const ResidueCtx& other) const noexcept { return this == &other || modulus_ == other.modulus_; }

   private:
    explicit ResidueCtx(const Poly& modulus);

    Poly modulus_;
    std::uint64_t size_;
    std::uint64_t lpf_;
    std::vector<std::uint64_t> stride_;
    std::vector<std::vector<std::uint32_t>> gram_;
};

using CtxPtr = std::shared_ptr<const ResidueCtx>;

void require_same_ring(const ResidueCtx& a, const ResidueCtx& b);

/// Element of F_p[t]_Q; the representative always has degree < n.
class Residue {
   public:
    Residue(CtxPtr ctx, Poly reduced_rep) : ctx_(std::move(ctx)), rep_(std::move(reduced_rep)) {}

    const CtxPtr& ctx() const noexcept { return ctx_; }
    const Poly& rep() const noexcept { return rep_; }
    std::uint64_t index() const { return ctx_->index_of(rep_); }
    bool is_zero() const noexcept { return rep_.is_zero(); }

    Residue operator-() const { return {ctx_, -rep_}; }
    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);
    Residue pow(std::uint64_t e) const;

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.ctx_->same_ring(*b.ctx_) && a.rep_ == b.rep_;
    }

   private:
    CtxPtr ctx_;
    Poly rep_;
};

std::string to_string(const Residue& r);

/// Exponent c of the root of unity exp(2*pi*i*c/p). The base character is fixed
/// as c -> exp(2*pi*i*c/p).
struct UnityExponent {
    std::uint32_t value = 0;
    friend bool operator==(UnityExponent, UnityExponent) = default;
};

/// e(s*x/Q) as a unity exponent.
UnityExponent residue_pair(const Residue& s, const Residue& x);

/// exp(2*pi*i*c/p).
std::complex<double> root_of_unity(std::uint32_t c, std::uint32_t p);

/// Exact average of roots of unity, kept as exponent counts.
class SumAccumulator {
   public:
    explicit SumAccumulator(std::uint32_t p) : counts_(p, 0) {}

    void add(UnityExponent e, std::uint64_t times = 1) {
        counts_[e.value] += times;
        total_ += times;
    }
    void merge(const SumAccumulator& other);

    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    std::uint64_t total() const noexcept { return total_; }

    /// Sum_c counts[c] * w^c / total. Zero when empty.
    std::complex<double> value() const;
    /// True iff the represented value is exactly 0 (all counts equal, p prime).
    bool is_exact_zero() const noexcept;
    /// |value - w^c|, with exact zero recognised before the float conversion.
    double distance_to_root(std::uint32_t c) const;

   private:
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

/// A complex-valued function on F_p[t]_Q, indexed by residue index.
using ResidueFunction = std::vector<std::complex<double>>;

/// f^(s) = E_x f(x) e(-s x / Q), computed by a radix-p transform over the coordinate
/// group F_p^n and re-indexed through the pairing Gram matrix.
ResidueFunction fourier_transform(const ResidueFunction& f, const ResidueCtx& ctx);
/// f(x) = sum_s f^(s) e(s x / Q).
ResidueFunction inverse_fourier_transform(const ResidueFunction& fhat, const ResidueCtx& ctx);

struct ParsevalSides {
    double lhs;  ///< E_x |f(x)|^2
    double rhs;  ///< sum_s |f^(s)|^2
};
ParsevalSides parseval_check(const ResidueFunction& f, const ResidueCtx& ctx);

/// Unnormalised radix-p DFT on F_p^n with sign +1 or -1: out(u) = sum_x f(x) w^(sign u.x).
void coordinate_dft(ResidueFunction& data, std::uint32_t p, int n, int sign);

}  // namespace fpt
