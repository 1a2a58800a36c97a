#include "fpt/subgroup.hpp"

#include "fpt/addpoly.hpp"
#include "fpt/errors.hpp"

namespace fpt {

Subspace Subspace::full(CtxPtr ctx) {
    Subspace s(ctx);
    for (int j = 0; j < ctx->degree(); ++j) s.insert_index(checked_pow(ctx->p(), static_cast<unsigned>(j)));
    return s;
}

std::uint64_t Subspace::size() const { return checked_pow(ctx_->p(), static_cast<unsigned>(rows_.size())); }

Subspace::Vec Subspace::reduced(Vec v) const {
    const auto& F = ctx_->field();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto c = v[pivots_[r]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, rows_[r][j]));
    }
    return v;
}

bool Subspace::insert(Vec v) {
    if (static_cast<int>(v.size()) != ctx_->degree()) throw PreconditionError("vector length does not match the ring");
    const auto& F = ctx_->field();
    v = reduced(std::move(v));
    int pivot = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) {
            pivot = static_cast<int>(j);
            break;
        }
    if (pivot < 0) return false;
    const auto inv = F.inv(v[pivot]);
    for (auto& x : v) x = F.mul(x, inv);
    for (auto& row : rows_) {
        auto c = row[pivot];
        if (c == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) row[j] = F.sub(row[j], F.mul(c, v[j]));
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
    return true;
}

bool Subspace::contains(std::uint64_t index) const {
    auto v = reduced(ctx_->digits(index));
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Residue& r) const {
    require_same_ring(*ctx_, *r.ctx());
    return contains(r.index());
}

std::vector<std::uint64_t> Subspace::elements() const {
    std::vector<std::uint64_t> out{0};
    out.reserve(size());
    for (const auto& row : rows_) {
        const auto row_index = ctx_->from_digits(row);
        const auto current = out.size();
        std::uint64_t multiple = 0;
        for (std::uint32_t c = 1; c < ctx_->p(); ++c) {
            multiple = ctx_->add(multiple, row_index);
            for (std::size_t i = 0; i < current; ++i) out.push_back(ctx_->add(out[i], multiple));
        }
    }
    return out;
}

std::vector<Residue> Subspace::basis_residues() const {
    std::vector<Residue> out;
    for (const auto& row : rows_) out.push_back(ctx_->at(ctx_->from_digits(row)));
    return out;
}

Subspace span(const CtxPtr& ctx, const std::vector<Residue>& vectors) {
    Subspace s(ctx);
    for (const auto& v : vectors) {
        require_same_ring(*ctx, *v.ctx());
        s.insert_index(v.index());
    }
    return s;
}

Subspace span_indices(const CtxPtr& ctx, const std::vector<std::uint64_t>& indices) {
    Subspace s(ctx);
    for (auto i : indices) {
        if (s.rank() == ctx->degree()) break;
        s.insert_index(i);
    }
    return s;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ring(*a.ctx(), *b.ctx());
    Subspace s = a;
    for (const auto& row : b.basis()) s.insert(row);
    return s;
}

Subspace image_subgroup(const YPoly& P, const CtxPtr& ctx) {
    auto values = value_table(P, *ctx);
    const auto base = values[0];
    Subspace s(ctx);
    for (auto v : values) {
        if (s.rank() == ctx->degree()) break;
        s.insert_index(ctx->sub(v, base));
    }
    return s;
}

Subspace eta_image(const std::vector<Poly>& coeffs, const CtxPtr& ctx) {
    Subspace s(ctx);
    for (int m = 0; m < ctx->degree(); ++m) {
        Residue x = ctx->element(Poly::monomial(ctx->p(), 1, static_cast<std::size_t>(m)));
        Residue acc = ctx->zero();
        for (const auto& c : coeffs) {
            if (!c.is_zero()) acc = acc + ctx->element(c) * x;
            x = x.pow(ctx->p());
        }
        s.insert_index(acc.index());
    }
    return s;
}

Subspace additive_image(const AdditivePoly& eta, const CtxPtr& ctx) {
    std::vector<Poly> coeffs;
    for (auto c : eta.coeffs()) coeffs.push_back(Poly::constant(eta.p(), c));
    return eta_image(coeffs, ctx);
}

Subspace eta_image_sum(const YPoly& P, const CtxPtr& ctx) {
    if (P.p() != ctx->p()) throw PreconditionError("y-polynomial and ring have different characteristic");
    Subspace s(ctx);
    for (const auto& [r, coeffs] : decompose(P).parts) s = sum(s, eta_image(coeffs, ctx));
    return s;
}

Subspace annihilator(const Subspace& H) {
    const auto& ctx = H.ctx();
    const auto& F = ctx->field();
    const int n = ctx->degree();
    // s is in the annihilator iff (G z) . s = 0 for each basis row z (G is symmetric).
    Subspace constraints(ctx);
    for (const auto& z : H.basis()) constraints.insert(ctx->pairing_row(ctx->from_digits(z)));
    std::vector<bool> is_pivot(n, false);
    std::vector<int> pivot_row(n, -1);
    for (int r = 0; r < constraints.rank(); ++r) {
        const auto& row = constraints.basis()[r];
        for (int j = 0; j < n; ++j)
            if (row[j] != 0) {
                is_pivot[j] = true;
                pivot_row[j] = r;
                break;
            }
    }
    Subspace out(ctx);
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Subspace::Vec v(n, 0);
        v[free] = 1;
        for (int j = 0; j < n; ++j)
            if (is_pivot[j]) v[j] = F.neg(constraints.basis()[pivot_row[j]][free]);
        out.insert(std::move(v));
    }
    return out;
}

std::complex<double> coset_average(const ResidueFunction& f, const Subspace& H, std::uint64_t shift) {
    const auto& ctx = *H.ctx();
    if (f.size() != ctx.size()) throw PreconditionError("function table size does not match the ring");
    std::complex<double> acc{0.0, 0.0};
    const auto elems = H.elements();
    for (auto z : elems) acc += f[ctx.add(shift, z)];
    return acc / static_cast<double>(elems.size());
}

std::string to_string(const Subspace& H) {
    std::string out;
    for (const auto& r : H.basis_residues()) out += to_string(r) + "\n";
    return out;
}

}  // namespace fpt
