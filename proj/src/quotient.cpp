#include "fpt/quotient.hpp"

#include <cmath>
#include <numbers>

#include "fpt/errors.hpp"

namespace fpt {

namespace {
constexpr std::uint64_t kMaxRingSize = std::uint64_t{1} << 20;
}

ResidueCtx::ResidueCtx(const Poly& modulus) : modulus_(modulus) {
    if (modulus.degree() < 1) throw PreconditionError("quotient ring modulus must be nonconstant");
    if (!modulus.is_monic()) throw PreconditionError("quotient ring modulus must be monic");
    const int n = modulus.degree();
    size_ = checked_pow(p(), static_cast<unsigned>(n));
    if (size_ > kMaxRingSize) throw PreconditionError("quotient ring larger than 2^20 elements");
    lpf_ = fpt::lpf(modulus);
    stride_.resize(n);
    for (int j = 0; j < n; ++j) stride_[j] = checked_pow(p(), static_cast<unsigned>(j));

    // (t^k mod Q)_{n-1} for k < 2n-1 gives the Hankel entries G[i][j] = h[i+j].
    std::vector<std::uint32_t> h(2 * n - 1, 0);
    Poly power = Poly::constant(p(), 1);
    const Poly t = Poly::t(p());
    for (int k = 0; k < 2 * n - 1; ++k) {
        h[k] = power.coeff(n - 1);
        power = mulmod(power, t, modulus_);
    }
    gram_.assign(n, std::vector<std::uint32_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram_[i][j] = h[i + j];
}

std::shared_ptr<const ResidueCtx> ResidueCtx::create(const Poly& modulus) {
    return std::shared_ptr<const ResidueCtx>(new ResidueCtx(modulus));
}

std::shared_ptr<const ResidueCtx> ResidueCtx::create(std::uint32_t p, const std::string& modulus_text) {
    return create(parse_poly(p, modulus_text));
}

Poly ResidueCtx::reduce(const Poly& f) const {
    require_same_field(f, modulus_);
    return f.degree() < degree() ? f : f % modulus_;
}

Residue ResidueCtx::element(const Poly& f) const { return Residue(shared_from_this(), reduce(f)); }

Residue ResidueCtx::at(std::uint64_t index) const {
    if (index >= size_) throw PreconditionError("residue index out of range");
    return Residue(shared_from_this(), poly_from_index(p(), index));
}

Residue ResidueCtx::zero() const { return Residue(shared_from_this(), Poly(p())); }

std::uint64_t ResidueCtx::index_of(const Poly& reduced) const {
    if (reduced.degree() >= degree()) throw PreconditionError("residue representative not reduced");
    return index_of_poly(reduced);
}

std::vector<std::uint32_t> ResidueCtx::digits(std::uint64_t index) const {
    std::vector<std::uint32_t> d(degree());
    for (auto& x : d) {
        x = static_cast<std::uint32_t>(index % p());
        index /= p();
    }
    return d;
}

std::uint64_t ResidueCtx::from_digits(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t idx = 0;
    for (int j = degree() - 1; j >= 0; --j) idx = idx * p() + digits[j];
    return idx;
}

std::uint64_t ResidueCtx::add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t out = 0;
    for (int j = 0; j < degree(); ++j) {
        auto s = (a % p() + b % p()) % p();
        out += s * stride_[j];
        a /= p();
        b /= p();
    }
    return out;
}

std::uint64_t ResidueCtx::neg(std::uint64_t a) const noexcept {
    std::uint64_t out = 0;
    for (int j = 0; j < degree(); ++j) {
        out += field().neg(static_cast<std::uint32_t>(a % p())) * stride_[j];
        a /= p();
    }
    return out;
}

std::uint64_t ResidueCtx::sub(std::uint64_t a, std::uint64_t b) const noexcept { return add(a, neg(b)); }

std::uint64_t ResidueCtx::scale(std::uint64_t a, std::uint32_t c) const noexcept {
    std::uint64_t out = 0;
    for (int j = 0; j < degree(); ++j) {
        out += field().mul(static_cast<std::uint32_t>(a % p()), c % p()) * stride_[j];
        a /= p();
    }
    return out;
}

std::uint64_t ResidueCtx::mul(std::uint64_t a, std::uint64_t b) const {
    return index_of_poly(mulmod(poly_from_index(p(), a), poly_from_index(p(), b), modulus_));
}

std::vector<std::uint32_t> ResidueCtx::pairing_row(std::uint64_t s) const {
    auto sd = digits(s);
    std::vector<std::uint32_t> w(degree(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (sd[i] == 0) continue;
        for (int j = 0; j < degree(); ++j) w[j] = field().add(w[j], field().mul(sd[i], gram_[i][j]));
    }
    return w;
}

std::uint32_t ResidueCtx::pair(std::uint64_t s, std::uint64_t x) const {
    auto w = pairing_row(s);
    std::uint32_t acc = 0;
    for (int j = 0; j < degree(); ++j) {
        acc = field().add(acc, field().mul(w[j], static_cast<std::uint32_t>(x % p())));
        x /= p();
    }
    return acc;
}

std::vector<std::uint32_t> ResidueCtx::pairing_table(std::uint64_t s) const {
    auto w = pairing_row(s);
    std::vector<std::uint32_t> table(size_, 0);
    for (int j = 0; j < degree(); ++j) {
        const auto block = stride_[j];
        for (std::uint32_t d = 1; d < p(); ++d) {
            const auto shift = field().mul(d, w[j]);
            for (std::uint64_t r = 0; r < block; ++r) table[d * block + r] = field().add(table[r], shift);
        }
    }
    return table;
}

std::uint64_t ResidueCtx::gram_image(std::uint64_t s) const { return from_digits(pairing_row(s)); }

void require_same_ring(const ResidueCtx& a, const ResidueCtx& b) {
    if (!a.same_ring(b))
        throw PreconditionError("residues belong to different rings: mod " + to_string(a.modulus()) + " and mod " +
                                to_string(b.modulus()));
}

Residue operator+(const Residue& a, const Residue& b) {
    require_same_ring(*a.ctx_, *b.ctx_);
    return {a.ctx_, a.rep_ + b.rep_};
}

Residue operator-(const Residue& a, const Residue& b) {
    require_same_ring(*a.ctx_, *b.ctx_);
    return {a.ctx_, a.rep_ - b.rep_};
}

Residue operator*(const Residue& a, const Residue& b) {
    require_same_ring(*a.ctx_, *b.ctx_);
    return {a.ctx_, mulmod(a.rep_, b.rep_, a.ctx_->modulus())};
}

Residue Residue::pow(std::uint64_t e) const { return {ctx_, powmod(rep_, e, ctx_->modulus())}; }

std::string to_string(const Residue& r) { return to_string(r.rep()); }

UnityExponent residue_pair(const Residue& s, const Residue& x) {
    require_same_ring(*s.ctx(), *x.ctx());
    const auto& ctx = *s.ctx();
    return {mulmod(s.rep(), x.rep(), ctx.modulus()).coeff(ctx.degree() - 1)};
}

std::complex<double> root_of_unity(std::uint32_t c, std::uint32_t p) {
    if (c % p == 0) return {1.0, 0.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(c % p) / static_cast<double>(p);
    return std::polar(1.0, angle);
}

void SumAccumulator::merge(const SumAccumulator& other) {
    if (other.counts_.size() != counts_.size()) throw PreconditionError("accumulators over different fields");
    for (std::size_t c = 0; c < counts_.size(); ++c) counts_[c] += other.counts_[c];
    total_ += other.total_;
}

bool SumAccumulator::is_exact_zero() const noexcept {
    for (auto c : counts_)
        if (c != counts_[0]) return false;
    return true;
}

std::complex<double> SumAccumulator::value() const {
    if (total_ == 0 || is_exact_zero()) return {0.0, 0.0};
    const auto p = static_cast<std::uint32_t>(counts_.size());
    // Subtract the minimum count: sum_c w^c = 0, so this is exact and reduces cancellation.
    auto lo = counts_[0];
    for (auto c : counts_) lo = std::min(lo, c);
    std::complex<double> acc{0.0, 0.0};
    for (std::uint32_t c = 0; c < p; ++c)
        if (counts_[c] != lo) acc += static_cast<double>(counts_[c] - lo) * root_of_unity(c, p);
    return acc / static_cast<double>(total_);
}

double SumAccumulator::distance_to_root(std::uint32_t c) const {
    // total*(value - w^c) has integer exponent counts; exact zero iff those are all equal.
    auto shifted = counts_;
    if (total_ == 0) return 1.0;
    bool all_equal = true;
    for (std::size_t k = 0; k < shifted.size(); ++k) {
        auto v = static_cast<std::int64_t>(shifted[k]) - (k == c ? static_cast<std::int64_t>(total_) : 0);
        auto v0 = static_cast<std::int64_t>(shifted[0]) - (c == 0 ? static_cast<std::int64_t>(total_) : 0);
        if (v != v0) all_equal = false;
    }
    if (all_equal) return 0.0;
    return std::abs(value() - root_of_unity(c, static_cast<std::uint32_t>(counts_.size())));
}

void coordinate_dft(ResidueFunction& data, std::uint32_t p, int n, int sign) {
    std::vector<std::complex<double>> roots(p);
    for (std::uint32_t c = 0; c < p; ++c) roots[c] = root_of_unity(sign > 0 ? c : (p - c) % p, p);
    std::vector<std::complex<double>> fiber(p), out(p);
    std::uint64_t stride = 1;
    const std::uint64_t total = data.size();
    for (int dim = 0; dim < n; ++dim) {
        const std::uint64_t block = stride * p;
        for (std::uint64_t base = 0; base < total; base += block) {
            for (std::uint64_t r = 0; r < stride; ++r) {
                for (std::uint32_t a = 0; a < p; ++a) fiber[a] = data[base + r + a * stride];
                for (std::uint32_t u = 0; u < p; ++u) {
                    std::complex<double> acc{0.0, 0.0};
                    for (std::uint32_t a = 0; a < p; ++a)
                        acc += fiber[a] * roots[static_cast<std::uint64_t>(u) * a % p];
                    out[u] = acc;
                }
                for (std::uint32_t u = 0; u < p; ++u) data[base + r + u * stride] = out[u];
            }
        }
        stride = block;
    }
}

ResidueFunction fourier_transform(const ResidueFunction& f, const ResidueCtx& ctx) {
    if (f.size() != ctx.size()) throw PreconditionError("function table size does not match the ring");
    ResidueFunction coords = f;
    coordinate_dft(coords, ctx.p(), ctx.degree(), -1);
    const double scale = 1.0 / static_cast<double>(ctx.size());
    ResidueFunction out(ctx.size());
    for (std::uint64_t s = 0; s < ctx.size(); ++s) out[s] = coords[ctx.gram_image(s)] * scale;
    return out;
}

ResidueFunction inverse_fourier_transform(const ResidueFunction& fhat, const ResidueCtx& ctx) {
    if (fhat.size() != ctx.size()) throw PreconditionError("function table size does not match the ring");
    ResidueFunction coords(ctx.size());
    for (std::uint64_t s = 0; s < ctx.size(); ++s) coords[ctx.gram_image(s)] = fhat[s];
    coordinate_dft(coords, ctx.p(), ctx.degree(), +1);
    return coords;
}

ParsevalSides parseval_check(const ResidueFunction& f, const ResidueCtx& ctx) {
    auto fhat = fourier_transform(f, ctx);
    double lhs = 0.0, rhs = 0.0;
    for (auto v : f) lhs += std::norm(v);
    lhs /= static_cast<double>(f.size());
    for (auto v : fhat) rhs += std::norm(v);
    return {lhs, rhs};
}

}  // namespace fpt
