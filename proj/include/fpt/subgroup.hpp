#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fpt/quotient.hpp"
#include "fpt/ypoly.hpp"

namespace fpt {

class AdditivePoly;

/// An F_p-subspace of F[t]_Q in reduced row-echelon form. Rows are coefficient vectors
/// (length n, t^0 first); row pivots are the lowest nonzero coordinate, strictly increasing.
class Subspace {
   public:
    using Vec = std::vector<std::uint32_t>;

    explicit Subspace(CtxPtr ctx) : ctx_(std::move(ctx)) {}
    static Subspace full(CtxPtr ctx);

    const CtxPtr& ctx() const noexcept { return ctx_; }
    const std::vector<Vec>& basis() const noexcept { return rows_; }
    int rank() const noexcept { return static_cast<int>(rows_.size()); }
    /// p^rank.
    std::uint64_t size() const;

    /// Adds a vector; returns false if it was already in the span.
    bool insert(Vec v);
    bool insert_index(std::uint64_t index) { return insert(ctx_->digits(index)); }
    bool contains(std::uint64_t index) const;
    bool contains(const Residue& r) const;
    /// Every element index, in the order of basis combinations (first row fastest).
    std::vector<std::uint64_t> elements() const;
    std::vector<Residue> basis_residues() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ctx_->same_ring(*b.ctx_) && a.rows_ == b.rows_;
    }

   private:
    Vec reduced(Vec v) const;

    CtxPtr ctx_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

/// The group generated by the given residues (all from one ring).
Subspace span(const CtxPtr& ctx, const std::vector<Residue>& vectors);
Subspace span_indices(const CtxPtr& ctx, const std::vector<std::uint64_t>& indices);
Subspace sum(const Subspace& a, const Subspace& b);

/// span{P(y) - P(0) : y in F[t]_Q}, by enumerating y.
Subspace image_subgroup(const YPoly& P, const CtxPtr& ctx);
/// eta(F[t]_Q) for eta(y) = sum_j coeffs[j] y^(p^j), coefficients in F_p[t]; eta is
/// F_p-linear, so the image is spanned by the images of 1, t, ..., t^(n-1).
Subspace eta_image(const std::vector<Poly>& coeffs, const CtxPtr& ctx);
Subspace additive_image(const AdditivePoly& eta, const CtxPtr& ctx);
/// sum over the separable parts of eta_r(F[t]_Q).
Subspace eta_image_sum(const YPoly& P, const CtxPtr& ctx);

/// {s : <s, z> = 0 for all z in H}.
Subspace annihilator(const Subspace& H);

/// E_{z in H} f(shift + z).
std::complex<double> coset_average(const ResidueFunction& f, const Subspace& H, std::uint64_t shift);

/// Basis polynomials, one per line.
std::string to_string(const Subspace& H);

}  // namespace fpt
