#include "fpt/ergodic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fpt/errors.hpp"
#include "fpt/parallel.hpp"

namespace fpt {

std::vector<std::uint64_t> value_histogram(const YPoly& P, const ResidueCtx& ctx) {
    std::vector<std::uint64_t> hist(ctx.size(), 0);
    for (auto v : value_table(P, ctx)) ++hist[v];
    return hist;
}

namespace {

SumAccumulator accumulate(const std::vector<std::uint64_t>& hist, const ResidueCtx& ctx, std::uint64_t s) {
    SumAccumulator acc(ctx.p());
    auto table = ctx.pairing_table(s);
    for (std::uint64_t x = 0; x < hist.size(); ++x)
        if (hist[x] != 0) acc.add({table[x]}, hist[x]);
    return acc;
}

}  // namespace

SumAccumulator char_sum(const YPoly& P, const ResidueCtx& ctx, std::uint64_t s) {
    if (s >= ctx.size()) throw PreconditionError("frequency index out of range");
    return accumulate(value_histogram(P, ctx), ctx, s);
}

SumAccumulator char_sum(const YPoly& P, const Residue& s) { return char_sum(P, *s.ctx(), s.index()); }

double Multiplier::norm() const {
    double best = 0.0;
    for (auto m : modulus) best = std::max(best, m);
    return best;
}

std::uint64_t Multiplier::argmax() const {
    std::uint64_t best = 0;
    for (std::uint64_t s = 1; s < modulus.size(); ++s)
        if (modulus[s] > modulus[best]) best = s;
    return best;
}

Multiplier multiplier(const YPoly& P, const CtxPtr& ctx, unsigned threads) {
    return multiplier(P, ctx, eta_image_sum(P, ctx), threads);
}

Multiplier multiplier(const YPoly& P, const CtxPtr& ctx, const Subspace& H, unsigned threads) {
    require_same_ring(*ctx, *H.ctx());
    auto R = reduce_coeffs(P, *ctx);
    const auto hist = value_histogram(R, *ctx);
    const auto a0 = ctx->index_of(R.constant_term());
    Multiplier out{ctx, R, H, annihilator(H), {}, {}};
    out.value.resize(ctx->size());
    out.modulus.resize(ctx->size());
    parallel_for(ctx->size(), threads, [&](std::size_t s) {
        auto acc = accumulate(hist, *ctx, s);
        if (out.H_perp.contains(s)) {
            const auto c = ctx->pair(s, a0);
            out.modulus[s] = acc.distance_to_root(c);
            out.value[s] = out.modulus[s] == 0.0 ? std::complex<double>{} : acc.value() - root_of_unity(c, ctx->p());
        } else {
            out.value[s] = acc.value();
            out.modulus[s] = acc.is_exact_zero() ? 0.0 : std::abs(out.value[s]);
        }
    });
    return out;
}

double multiplier_norm(const YPoly& P, const CtxPtr& ctx, unsigned threads) {
    return multiplier(P, ctx, threads).norm();
}

double l2_norm(const ResidueFunction& f) {
    double acc = 0.0;
    for (auto v : f) acc += std::norm(v);
    return f.empty() ? 0.0 : std::sqrt(acc / static_cast<double>(f.size()));
}

ResidueFunction character(const ResidueCtx& ctx, std::uint64_t s) {
    auto table = ctx.pairing_table(s);
    ResidueFunction f(ctx.size());
    for (std::uint64_t x = 0; x < ctx.size(); ++x) f[x] = root_of_unity(table[x], ctx.p());
    return f;
}

double l2_discrepancy(const ResidueFunction& f, const YPoly& P, const CtxPtr& ctx) {
    return l2_discrepancy(f, P, ctx, eta_image_sum(P, ctx));
}

double l2_discrepancy(const ResidueFunction& f, const YPoly& P, const CtxPtr& ctx, const Subspace& H) {
    if (f.size() != ctx->size()) throw PreconditionError("function table size does not match the ring");
    auto R = reduce_coeffs(P, *ctx);
    const auto values = value_table(R, *ctx);
    const auto a0 = ctx->index_of(R.constant_term());
    auto shifts = H.elements();
    for (auto& z : shifts) z = ctx->add(z, a0);
    const auto N = static_cast<double>(ctx->size());
    double total = 0.0;
    for (std::uint64_t x = 0; x < ctx->size(); ++x) {
        std::complex<double> avg_y{}, avg_z{};
        for (auto v : values) avg_y += f[ctx->add(x, v)];
        for (auto z : shifts) avg_z += f[ctx->add(x, z)];
        total += std::norm(avg_y / N - avg_z / static_cast<double>(shifts.size()));
    }
    return std::sqrt(total / N);
}

double character_bound_rhs(std::uint32_t p, std::uint64_t d, int k, std::uint64_t lpf) {
    const double scale = std::pow(static_cast<double>(p), 2.0 * floor_log(d, p));
    return scale * static_cast<double>(k - 1) / static_cast<double>(lpf);
}

std::vector<BoundReport> check_character_bound(const YPoly& P, const CtxPtr& ctx, double tolerance, unsigned threads) {
    auto R = reduce_coeffs(P, *ctx);
    if (R.is_constant()) throw PreconditionError("character bound needs a polynomial that is nonconstant mod Q");
    const auto d = R.degree();
    const int k = d_deg(R);
    const double rhs = character_bound_rhs(ctx->p(), d, k, ctx->lpf());
    const auto M = multiplier(R, ctx, threads);
    const auto P_text = to_string(P);
    const auto Q_text = to_string(ctx->modulus());
    const double exponent = std::ldexp(1.0, k - 1);
    std::vector<BoundReport> out;
    out.reserve(ctx->size());
    for (std::uint64_t s = 0; s < ctx->size(); ++s) {
        const double lhs = M.modulus[s] == 0.0 ? 0.0 : std::pow(M.modulus[s], exponent);
        out.push_back({ctx->p(), Q_text, P_text, ctx->lpf(), d, k, s, lhs, rhs, lhs <= rhs + tolerance});
    }
    return out;
}

void SweepSummary::add(const BoundReport& r) {
    ++instances;
    if (!r.satisfied) ++violations;
    if (r.rhs > 0.0) max_ratio = std::max(max_ratio, r.lhs / r.rhs);
}

void SweepSummary::merge(const SweepSummary& other) {
    violations += other.violations;
    instances += other.instances;
    max_ratio = std::max(max_ratio, other.max_ratio);
}

TeResult te_discrepancy(const Poly& m, const CtxPtr& ctx) {
    if (m.is_zero()) throw PreconditionError("te_discrepancy needs m != 0");
    const auto mr = ctx->reduce(m);
    bool nonzero_multiplier = false;
    for (std::uint64_t s = 1; s < ctx->size() && !nonzero_multiplier; ++s)
        nonzero_multiplier = mulmod(poly_from_index(ctx->p(), s), mr, ctx->modulus()).is_zero();
    const auto g = gcd(m, ctx->modulus());
    if (nonzero_multiplier != (g.degree() > 0)) throw InvariantError("multiplier scan disagrees with gcd(m, Q)");
    TeResult out;
    if (!nonzero_multiplier) return out;
    out.value = 1.0;
    auto g0 = least_irreducible_factor(g);
    const auto order = static_cast<double>(g0.norm());
    ResidueFunction w(ctx->size());
    for (std::uint64_t x = 0; x < ctx->size(); ++x) {
        const auto k = index_of_poly(poly_from_index(ctx->p(), x) % g0);
        w[x] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / order);
    }
    out.common_factor = std::move(g0);
    out.witness = std::move(w);
    return out;
}

double te_operator_discrepancy(const ResidueFunction& f, const Poly& m, const CtxPtr& ctx) {
    if (f.size() != ctx->size()) throw PreconditionError("function table size does not match the ring");
    const auto mi = ctx->index_of(ctx->reduce(m));
    std::vector<std::uint64_t> steps(ctx->size());
    for (std::uint64_t y = 0; y < ctx->size(); ++y) steps[y] = ctx->mul(mi, y);
    std::complex<double> mean{};
    for (auto v : f) mean += v;
    const auto N = static_cast<double>(ctx->size());
    mean /= N;
    double total = 0.0;
    for (std::uint64_t x = 0; x < ctx->size(); ++x) {
        std::complex<double> avg{};
        for (auto st : steps) avg += f[ctx->add(x, st)];
        total += std::norm(avg / N - mean);
    }
    return std::sqrt(total / N);
}

namespace {

std::complex<double> vdc_average(const ResidueFunction& g, const ResidueCtx& ctx, const std::vector<std::uint64_t>& H,
                                 int remaining) {
    if (remaining == 0) {
        std::complex<double> acc{};
        for (auto v : g) acc += v;
        return acc / static_cast<double>(g.size());
    }
    std::complex<double> acc{};
    ResidueFunction diff(g.size());
    for (auto v : H) {
        for (std::uint64_t u = 0; u < g.size(); ++u) diff[u] = g[ctx.add(u, v)] * std::conj(g[u]);
        acc += vdc_average(diff, ctx, H, remaining - 1);
    }
    return acc / static_cast<double>(H.size());
}

}  // namespace

VdcSides vdc_check(const ResidueFunction& f, const Subspace& H, int k) {
    if (k < 1 || k > 3) throw PreconditionError("vdc_check supports 1 <= k <= 3");
    const auto& ctx = *H.ctx();
    if (f.size() != ctx.size()) throw PreconditionError("function table size does not match the ring");
    std::complex<double> mean{};
    for (auto v : f) mean += v;
    mean /= static_cast<double>(f.size());
    const auto rhs = vdc_average(f, ctx, H.elements(), k);
    return {std::pow(std::abs(mean), std::ldexp(1.0, k)), rhs.real(), rhs.imag()};
}

RootCount root_count_check(const YPoly& T, const CtxPtr& ctx) {
    auto R = reduce_coeffs(T, *ctx);
    if (R.is_zero()) throw PreconditionError("polynomial vanishes mod Q");
    RootCount out;
    for (auto v : value_table(R, *ctx)) out.count += v == 0;
    out.degree_sum = R.degree();
    out.bound = static_cast<double>(out.degree_sum) * static_cast<double>(ctx->size()) / static_cast<double>(ctx->lpf());
    return out;
}

RootCount root_count_check(const BiPoly& T, const CtxPtr& ctx) {
    if (T.p != ctx->p()) throw PreconditionError("polynomial and ring have different characteristic");
    const auto N = ctx->size();
    std::vector<std::vector<std::uint64_t>> ys, zs;
    std::uint64_t dy = 0, dz = 0;
    for (const auto& [k, c] : T.terms) {
        auto cr = ctx->reduce(c);
        if (cr.is_zero()) continue;
        dy = std::max(dy, k.first);
        dz = std::max(dz, k.second);
        std::vector<std::uint64_t> a(N), b(N);
        const auto ci = ctx->element(cr);
        for (std::uint64_t x = 0; x < N; ++x) {
            a[x] = (ci * ctx->at(x).pow(k.first)).index();
            b[x] = ctx->at(x).pow(k.second).index();
        }
        ys.push_back(std::move(a));
        zs.push_back(std::move(b));
    }
    if (ys.empty()) throw PreconditionError("polynomial vanishes mod Q");
    RootCount out;
    for (std::uint64_t y = 0; y < N; ++y)
        for (std::uint64_t z = 0; z < N; ++z) {
            std::uint64_t v = 0;
            for (std::size_t t = 0; t < ys.size(); ++t) v = ctx->add(v, ctx->mul(ys[t][y], zs[t][z]));
            out.count += v == 0;
        }
    out.degree_sum = dy + dz;
    out.bound = static_cast<double>(out.degree_sum) * static_cast<double>(N) * static_cast<double>(N) /
                static_cast<double>(ctx->lpf());
    return out;
}

DiagonalResult diagonal_discrepancy(const ResidueFunction& f, const YPoly& P, const CtxPtr& ctx, int m) {
    if (m < 1 || m > 2) throw PreconditionError("diagonal_discrepancy supports m in {1, 2}");
    const auto N = ctx->size();
    const auto H = eta_image_sum(P, ctx);
    DiagonalResult out;
    out.bound = multiplier(P, ctx, H).norm() * l2_norm(f);
    if (m == 1) {
        out.value = l2_discrepancy(f, P, ctx, H);
        return out;
    }
    if (f.size() != N * N) throw PreconditionError("function table size does not match the ring squared");
    auto R = reduce_coeffs(P, *ctx);
    const auto values = value_table(R, *ctx);
    const auto a0 = ctx->index_of(R.constant_term());
    auto shifts = H.elements();
    for (auto& z : shifts) z = ctx->add(z, a0);
    double total = 0.0;
    for (std::uint64_t x2 = 0; x2 < N; ++x2)
        for (std::uint64_t x1 = 0; x1 < N; ++x1) {
            std::complex<double> avg_y{}, avg_z{};
            for (auto v : values) avg_y += f[ctx->add(x1, v) + N * ctx->add(x2, v)];
            for (auto z : shifts) avg_z += f[ctx->add(x1, z) + N * ctx->add(x2, z)];
            total += std::norm(avg_y / static_cast<double>(N) - avg_z / static_cast<double>(shifts.size()));
        }
    out.value = std::sqrt(total / static_cast<double>(N * N));
    return out;
}

}  // namespace fpt
