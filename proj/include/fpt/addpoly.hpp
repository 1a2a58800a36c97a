#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpt/field.hpp"
#include "fpt/ypoly.hpp"

namespace fpt {

/// sum_i a_i y^(p^i) with a_i in F_p. Trailing zero coefficients are trimmed.
class AdditivePoly {
   public:
    explicit AdditivePoly(std::uint32_t p) : field_(p) {}
    AdditivePoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);
    static AdditivePoly identity(std::uint32_t p) { return AdditivePoly(p, {1}); }
    /// y^(p^e).
    static AdditivePoly frobenius(std::uint32_t p, std::size_t e);
    /// Requires every exponent to be a power of p and every coefficient to lie in F_p.
    static AdditivePoly from_ypoly(const YPoly& P);

    std::uint32_t p() const noexcept { return field_.p(); }
    const PrimeField& field() const noexcept { return field_; }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
    /// Index k of the top term a_k y^(p^k); -1 for zero.
    int degree_index() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::uint32_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint32_t lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    YPoly to_ypoly() const;
    AdditivePoly scaled(std::uint32_t c) const;
    /// eta(y^(p^e)).
    AdditivePoly shifted(std::size_t e) const;
    /// Value at a residue; F_p-linear.
    Residue apply(const Residue& x) const;

    friend AdditivePoly operator+(const AdditivePoly& a, const AdditivePoly& b);
    friend AdditivePoly operator-(const AdditivePoly& a, const AdditivePoly& b);
    friend bool operator==(const AdditivePoly& a, const AdditivePoly& b) noexcept {
        return a.p() == b.p() && a.coeffs_ == b.coeffs_;
    }

   private:
    void trim() noexcept;

    PrimeField field_;
    std::vector<std::uint32_t> coeffs_;
};

std::string to_string(const AdditivePoly& a);
AdditivePoly parse_additive(std::uint32_t p, const std::string& text);

/// a o b.
AdditivePoly compose(const AdditivePoly& a, const AdditivePoly& b);

/// eta = sum_i etas[i] o zetas[i].
struct ReductionCertificate {
    AdditivePoly eta;
    std::vector<AdditivePoly> zetas;
};

/// Exact coefficient check of sum_i etas[i] o cert.zetas[i] == cert.eta.
bool certificate_holds(const std::vector<AdditivePoly>& etas, const ReductionCertificate& cert);

/// One additive polynomial whose image equals eta1(R) + eta2(R) in every quotient ring R.
ReductionCertificate reduce_pair(const AdditivePoly& eta1, const AdditivePoly& eta2);
ReductionCertificate reduce_family(const std::vector<AdditivePoly>& etas);

struct EquidistributionVerdict {
    bool good = false;
    std::vector<std::uint64_t> exponents;  ///< the separable r for each eta, ascending
    std::vector<AdditivePoly> etas;
    ReductionCertificate certificate;
};

/// Decision for P with F_p coefficients. Throws UndecidableError when a coefficient
/// involves t, PreconditionError when P is constant.
EquidistributionVerdict is_good_equidistribution(const YPoly& P);

/// Sufficient condition that also covers F_p[t] coefficients: P nonconstant and
/// separable (no exponent divisible by p).
bool separable_hint(const YPoly& P);

}  // namespace fpt
