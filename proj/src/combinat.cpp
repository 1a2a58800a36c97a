#include "fpt/combinat.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fpt/addpoly.hpp"
#include "fpt/ergodic.hpp"
#include "fpt/errors.hpp"

namespace fpt {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
        rows.push_back(std::move(cells));
    }
    return rows;
}

bool is_header(const std::vector<std::string>& row) { return !row.empty() && row[0] == "residue"; }

std::uint64_t parse_residue(const CtxPtr& ctx, const std::string& text) {
    return ctx->index_of(ctx->reduce(parse_poly(ctx->p(), text)));
}

std::vector<std::uint64_t> histogram(const std::vector<std::uint64_t>& values, std::uint64_t size) {
    std::vector<std::uint64_t> h(size, 0);
    for (auto v : values) ++h[v];
    return h;
}

ResidueFunction to_function(const std::vector<std::uint64_t>& h) { return {h.begin(), h.end()}; }

std::uint64_t round_count(double v) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-6 * std::max(1.0, std::abs(v)) || r < -0.5)
        throw InvariantError("transform count is not an integer: " + std::to_string(v));
    return static_cast<std::uint64_t>(r);
}

}  // namespace

Coloring make_coloring(const CtxPtr& ctx, std::vector<std::uint32_t> color) {
    if (color.size() != ctx->size()) throw PreconditionError("coloring must assign a color to every residue");
    std::uint32_t r = 1;
    for (auto c : color) r = std::max(r, c + 1);
    return {ctx, std::move(color), r};
}

Coloring load_coloring_csv(const CtxPtr& ctx, const std::string& path) {
    std::vector<std::int64_t> color(ctx->size(), -1);
    for (const auto& row : read_csv(path)) {
        if (is_header(row)) continue;
        if (row.size() != 2) throw ParseError("coloring rows must be `residue,color`");
        const auto x = parse_residue(ctx, row[0]);
        std::int64_t c = 0;
        try {
            c = std::stoll(row[1]);
        } catch (const std::exception&) {
            throw ParseError("bad color value '" + row[1] + "'");
        }
        if (c < 0) throw ParseError("colors must be nonnegative");
        if (color[x] >= 0 && color[x] != c) throw ParseError("residue " + row[0] + " colored twice");
        color[x] = c;
    }
    std::vector<std::uint32_t> out;
    for (auto c : color) {
        if (c < 0) throw ParseError("coloring does not cover every residue");
        out.push_back(static_cast<std::uint32_t>(c));
    }
    return make_coloring(ctx, std::move(out));
}

std::vector<std::uint64_t> load_residue_set_csv(const CtxPtr& ctx, const std::string& path) {
    std::vector<std::uint64_t> out;
    for (const auto& row : read_csv(path)) {
        if (is_header(row)) continue;
        if (row.empty()) continue;
        out.push_back(parse_residue(ctx, row[0]));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IntersectiveResult is_intersective_upto(const YPoly& P, int D) {
    if (D < 1) throw PreconditionError("intersectivity depth must be >= 1");
    if (P.constant_term().is_zero()) return {};
    if (checked_pow(P.p(), static_cast<unsigned>(D)) > (std::uint64_t{1} << 20))
        throw PreconditionError("intersectivity depth too large for exhaustive root search");
    for (int e = 1; e <= D; ++e) {
        for (const auto& Q : enumerate_monic(P.p(), e)) {
            if (!is_irreducible(Q)) continue;
            Poly power = Q;
            for (int s = 1; s * e <= D; ++s, power = power * Q) {
                auto ctx = ResidueCtx::create(power);
                auto values = value_table(P, *ctx);
                if (std::find(values.begin(), values.end(), 0) == values.end()) return {false, power};
            }
        }
    }
    return {};
}

PatternCount count_patterns(const std::vector<std::uint64_t>& A, const std::vector<std::uint64_t>& B, const YPoly& P,
                            const CtxPtr& ctx) {
    const auto N = ctx->size();
    std::vector<std::uint64_t> a(N, 0), b(N, 0);
    for (auto x : A) a.at(x) = 1;
    for (auto x : B) b.at(x) = 1;
    const auto h = histogram(value_table(P, *ctx), N);
    // conv(w) = #{(x, y) : x in A, x + P(y) = w}; its transform is N * a^ * h^.
    auto ah = fourier_transform(to_function(a), *ctx);
    auto hh = fourier_transform(to_function(h), *ctx);
    for (std::uint64_t s = 0; s < N; ++s) ah[s] *= hh[s] * static_cast<double>(N);
    auto conv = inverse_fourier_transform(ah, *ctx);
    double total = 0.0;
    for (std::uint64_t w = 0; w < N; ++w)
        if (b[w]) total += conv[w].real();
    PatternCount out;
    out.count = round_count(total);
    double na = 0, nb = 0;
    for (auto v : a) na += static_cast<double>(v);
    for (auto v : b) nb += static_cast<double>(v);
    out.expected = na * nb;
    out.deviation = std::abs(static_cast<double>(out.count) - out.expected);
    const double m_full = multiplier(P, ctx, Subspace::full(ctx)).norm();
    out.bound = std::sqrt(na * nb) * static_cast<double>(N) * m_full;
    return out;
}

namespace {

using Mask = std::uint64_t;

class IndependentSetSearch {
   public:
    explicit IndependentSetSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

    Mask run(Mask start_set, Mask candidates) {
        best_ = start_set;
        search(start_set, candidates);
        return best_;
    }

   private:
    void search(Mask current, Mask cand) {
        if (std::popcount(current) + std::popcount(cand) <= std::popcount(best_)) return;
        if (cand == 0) {
            best_ = current;
            return;
        }
        // Some maximum set contains v or one of its neighbours inside cand; branch on the
        // vertex of least degree to keep that list short.
        int v = -1, best_deg = 65;
        for (Mask m = cand; m; m &= m - 1) {
            int u = std::countr_zero(m);
            int deg = std::popcount(adj_[u] & cand);
            if (deg < best_deg) {
                best_deg = deg;
                v = u;
            }
        }
        Mask branch = (adj_[v] & cand) | (Mask{1} << v);
        for (Mask m = branch; m; m &= m - 1) {
            int u = std::countr_zero(m);
            search(current | (Mask{1} << u), cand & ~adj_[u] & ~(Mask{1} << u));
            cand &= ~(Mask{1} << u);
            if (std::popcount(current) + std::popcount(cand) <= std::popcount(best_)) return;
        }
    }

    std::vector<Mask> adj_;
    Mask best_ = 0;
};

}  // namespace

FreeSetResult max_free_set(const YPoly& P, const CtxPtr& ctx, bool allow_greedy) {
    const auto N = ctx->size();
    if (N > kExactFreeSetLimit && !allow_greedy)
        throw PreconditionError("ring has more than 64 elements; exact free-set search unavailable (use greedy mode)");
    const auto values = value_table(P, *ctx);
    std::vector<bool> diff(N, false);
    for (auto v : values)
        if (v != 0) {
            diff[v] = true;
            diff[ctx->neg(v)] = true;
        }
    FreeSetResult out;
    if (N <= kExactFreeSetLimit) {
        std::vector<Mask> adj(N, 0);
        for (std::uint64_t a = 0; a < N; ++a)
            for (std::uint64_t b = 0; b < N; ++b)
                if (a != b && diff[ctx->sub(b, a)]) adj[a] |= Mask{1} << b;
        // The graph is invariant under translation, so some maximum set contains 0.
        Mask all = N == 64 ? ~Mask{0} : (Mask{1} << N) - 1;
        Mask best = IndependentSetSearch(adj).run(Mask{1}, all & ~adj[0] & ~Mask{1});
        for (Mask m = best; m; m &= m - 1) out.example.push_back(static_cast<std::uint64_t>(std::countr_zero(m)));
    } else {
        out.exact = false;
        std::vector<bool> blocked(N, false);
        for (std::uint64_t a = 0; a < N; ++a) {
            if (blocked[a]) continue;
            out.example.push_back(a);
            for (std::uint64_t b = 0; b < N; ++b)
                if (diff[ctx->sub(b, a)]) blocked[b] = true;
        }
    }
    out.size = out.example.size();

    auto R = reduce_coeffs(P, *ctx);
    const bool has_root = std::find(values.begin(), values.end(), 0) != values.end();
    out.bound_applies = has_root && !R.is_constant();
    if (out.bound_applies) {
        const auto d = R.degree();
        const int k = d_deg(R);
        const double gamma = std::ldexp(1.0, -(k - 1));
        const double C = std::pow(character_bound_rhs(ctx->p(), d, k, 1), gamma);
        const double q = static_cast<double>(N);
        const double lpf = static_cast<double>(ctx->lpf());
        out.bound = C * q * std::pow(lpf, -gamma) + static_cast<double>(d) * q / lpf;
    }
    return out;
}

std::vector<std::uint64_t> solution_counts_three(const YPoly& P1, const YPoly& P2, const YPoly& P3, const CtxPtr& ctx) {
    const auto N = ctx->size();
    // The triple convolution of the value histograms has transform N^2 h1^ h2^ h3^.
    ResidueFunction prod(N, {1.0 / static_cast<double>(N), 0.0});
    for (const auto* P : {&P1, &P2, &P3}) {
        auto hh = fourier_transform(to_function(histogram(value_table(*P, *ctx), N)), *ctx);
        for (std::uint64_t s = 0; s < N; ++s) prod[s] *= hh[s] * static_cast<double>(N);
    }
    auto counts = inverse_fourier_transform(prod, *ctx);
    std::vector<std::uint64_t> out(N);
    for (std::uint64_t c = 0; c < N; ++c) out[c] = round_count(counts[c].real());
    return out;
}

ThreeTermCount count_solutions_three(const YPoly& P1, const YPoly& P2, const YPoly& P3, const Residue& c) {
    const auto& ctx = c.ctx();
    for (const auto* P : {&P1, &P2, &P3}) {
        if (!P->constant_term().is_zero()) throw PreconditionError("each polynomial must satisfy P(0) = 0");
        if (reduce_coeffs(*P, *ctx).is_constant()) throw PreconditionError("each polynomial must be nonconstant mod Q");
    }
    const auto N = ctx->size();
    const double q = static_cast<double>(N);
    Subspace H = sum(sum(image_subgroup(P1, ctx), image_subgroup(P2, ctx)), image_subgroup(P3, ctx));

    ThreeTermCount out;
    out.counts.count = solution_counts_three(P1, P2, P3, ctx)[c.index()];
    out.c_in_H = H.contains(c);
    out.H_size = H.size();
    out.counts.expected = out.c_in_H ? q * q * q / static_cast<double>(out.H_size) : 0.0;
    out.counts.deviation = std::abs(static_cast<double>(out.counts.count) - out.counts.expected);

    double d[3], M[3];
    int i = 0;
    for (const auto* P : {&P1, &P2, &P3}) {
        auto R = reduce_coeffs(*P, *ctx);
        d[i] = static_cast<double>(R.degree());
        const int k = d_deg(R);
        M[i] = std::pow(character_bound_rhs(ctx->p(), R.degree(), k, ctx->lpf()), std::ldexp(1.0, -(k - 1)));
        ++i;
    }
    out.relative_bound = M[0] * std::sqrt(d[1] * d[2]) + M[1] * std::sqrt(d[0] * d[2]) + M[2] * std::sqrt(d[0] * d[1]);
    out.counts.bound = out.relative_bound * q * q;
    out.relative_deviation = out.counts.deviation / (q * q);
    return out;
}

std::uint64_t monochromatic_count(const Coloring& coloring, const YPoly& P, const YPoly& Qp) {
    const auto& ctx = coloring.ctx;
    const auto N = ctx->size();
    const auto pv = value_table(P, *ctx);
    const auto qv = value_table(Qp, *ctx);
    double total = 0.0;
    for (std::uint32_t cls = 0; cls < coloring.classes; ++cls) {
        std::vector<std::uint64_t> hp(N, 0), hq(N, 0);
        bool any = false;
        for (std::uint64_t x = 0; x < N; ++x)
            if (coloring.color[x] == cls) {
                ++hp[pv[x]];
                ++hq[qv[x]];
                any = true;
            }
        if (!any) continue;
        auto fp = fourier_transform(to_function(hp), *ctx);
        auto fq = fourier_transform(to_function(hq), *ctx);
        std::complex<double> acc{};
        for (std::uint64_t s = 0; s < N; ++s) acc += std::norm(fp[s]) * std::conj(fq[s]);
        total += acc.real() * static_cast<double>(N) * static_cast<double>(N);
    }
    return round_count(total);
}

std::uint64_t schur_count(const Coloring& coloring, const YPoly& P) { return monochromatic_count(coloring, P, P); }

Poly first_irreducible(std::uint32_t p, int k) {
    for (const auto& Q : enumerate_monic(p, k))
        if (is_irreducible(Q)) return Q;
    throw InvariantError("no irreducible polynomial of degree " + std::to_string(k));
}

ConstantCondition check_constant_condition(const YPoly& Qp, int k) {
    if (k < 1) throw PreconditionError("field degree k must be >= 1");
    if (!Qp.has_constant_coeffs()) throw PreconditionError("constant condition needs coefficients in F_p");
    auto ctx = ResidueCtx::create(first_irreducible(Qp.p(), k));
    Subspace H(ctx);
    auto dec = decompose(Qp);
    if (!dec.parts.empty()) {
        std::vector<AdditivePoly> etas;
        for (const auto& [r, coeffs] : dec.parts) {
            std::vector<std::uint32_t> c;
            for (const auto& x : coeffs) c.push_back(x.coeff(0));
            etas.emplace_back(Qp.p(), std::move(c));
        }
        H = additive_image(reduce_family(etas).eta, ctx);
    }
    ConstantCondition out{H.contains(ctx->element(Qp.constant_term())), ctx->modulus(), {}};
    for (const auto& r : H.basis_residues()) out.basis.push_back(to_string(r));
    return out;
}

}  // namespace fpt
