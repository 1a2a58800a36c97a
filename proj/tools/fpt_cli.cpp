// fpt: command-line front end. One subcommand per operation; see README.md.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "fpt/acceptance.hpp"
#include "fpt/addpoly.hpp"
#include "fpt/combinat.hpp"
#include "fpt/ergodic.hpp"
#include "fpt/errors.hpp"
#include "fpt/parallel.hpp"
#include "fpt/subgroup.hpp"
#include "fpt/text.hpp"

using json = nlohmann::ordered_json;
using namespace fpt;

namespace {

struct RunConfig {
    std::uint32_t p = 0;
    std::string modulus;
    std::string deg_range;
    bool irreducible_only = false;
    std::vector<std::string> ypolys;
    std::string etas;
    std::string set_a, set_b, coloring;
    std::string c;
    std::string s;
    std::string m;
    int k = 0;
    int depth = 0;
    std::uint32_t colors = 2;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
    std::string out = "text";
    double tolerance = 1e-9;
    std::string which = "image";
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void need(bool ok, const std::string& what) {
    if (!ok) throw ParseError(what);
}

std::uint32_t prime(const RunConfig& cfg) {
    need(cfg.p != 0, "--p is required");
    PrimeField check(cfg.p);
    return cfg.p;
}

std::vector<Poly> moduli(const RunConfig& cfg) {
    const auto p = prime(cfg);
    if (!cfg.modulus.empty()) {
        need(cfg.deg_range.empty(), "give either --modulus or --modulus-deg-range, not both");
        return {parse_poly(p, cfg.modulus)};
    }
    need(!cfg.deg_range.empty(), "--modulus or --modulus-deg-range is required");
    const auto dots = cfg.deg_range.find("..");
    need(dots != std::string::npos, "--modulus-deg-range must look like A..B");
    int lo = 0, hi = 0;
    try {
        lo = std::stoi(cfg.deg_range.substr(0, dots));
        hi = std::stoi(cfg.deg_range.substr(dots + 2));
    } catch (const std::exception&) {
        throw ParseError("bad --modulus-deg-range '" + cfg.deg_range + "'");
    }
    need(lo >= 1 && hi >= lo, "--modulus-deg-range needs 1 <= A <= B");
    std::vector<Poly> out;
    for (int n = lo; n <= hi; ++n) {
        if (checked_pow(p, static_cast<unsigned>(n)) > (std::uint64_t{1} << 20))
            throw PreconditionError("modulus degree " + std::to_string(n) + " gives a ring larger than 2^20");
        for (const auto& Q : enumerate_monic(p, n))
            if (!cfg.irreducible_only || is_irreducible(Q)) out.push_back(Q);
    }
    return out;
}

CtxPtr single_ring(const RunConfig& cfg) {
    auto all = moduli(cfg);
    need(all.size() == 1, "this command takes a single --modulus");
    return ResidueCtx::create(all.front());
}

YPoly ypoly(const RunConfig& cfg, std::size_t i = 0) {
    need(cfg.ypolys.size() > i, "--ypoly is required" + (i > 0 ? " (" + std::to_string(i + 1) + " times)" : std::string()));
    return parse_ypoly(prime(cfg), cfg.ypolys[i]);
}

std::vector<std::string> split_etas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(item.substr(b, item.find_last_not_of(" \t") - b + 1));
    }
    return out;
}

json complex_json(std::complex<double> v) { return json::array({v.real(), v.imag()}); }

void print_function(const ResidueCtx& ctx, const ResidueFunction& f, const char* var) {
    std::cout << var << ",re,im\n";
    for (std::uint64_t i = 0; i < f.size(); ++i)
        std::cout << to_string(ctx.at(i)) << "," << fmt(f[i].real()) << "," << fmt(f[i].imag()) << "\n";
}

// ---- commands ------------------------------------------------------------------------

int cmd_lpf(const RunConfig& cfg) {
    auto all = moduli(cfg);
    if (cfg.out == "text" && all.size() == 1) {
        std::cout << lpf(all.front()) << "\n";
        return 0;
    }
    if (cfg.out == "json") {
        json rows = json::array();
        for (const auto& Q : all) rows.push_back({{"Q", to_string(Q)}, {"lpf", lpf(Q)}});
        std::cout << rows.dump(2) << "\n";
        return 0;
    }
    std::cout << "Q,lpf\n";
    for (const auto& Q : all) std::cout << to_string(Q) << "," << lpf(Q) << "\n";
    return 0;
}

int cmd_factor(const RunConfig& cfg) {
    need(!cfg.modulus.empty(), "--modulus is required");
    auto Q = parse_poly(prime(cfg), cfg.modulus);
    auto sq = squarefree_decomposition(Q);
    auto prof = distinct_degree_profile(Q);
    json j{{"Q", to_string(Q)}};
    json parts = json::array();
    for (const auto& [g, e] : sq) parts.push_back({{"factor", to_string(g)}, {"multiplicity", e}});
    j["squarefree"] = parts;
    json degrees = json::object();
    for (const auto& [d, count] : prof.degree_multiset) degrees[std::to_string(d)] = count;
    j["degree_profile"] = degrees;
    j["lpf"] = lpf(Q);
    j["irreducible"] = is_irreducible(Q);
    j["least_irreducible_factor"] = to_string(least_irreducible_factor(Q));
    if (cfg.out == "json") {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "squarefree:";
    for (const auto& [g, e] : sq) std::cout << " (" << to_string(g) << ")^" << e;
    std::cout << "\ndegrees:";
    for (const auto& [d, count] : prof.degree_multiset) std::cout << " " << d << "x" << count;
    std::cout << "\nlpf: " << lpf(Q) << "\nirreducible: " << (is_irreducible(Q) ? "true" : "false") << "\n";
    return 0;
}

int cmd_charsum(const RunConfig& cfg) {
    auto ctx = single_ring(cfg);
    auto P = ypoly(cfg);
    if (!cfg.s.empty()) {
        auto s = ctx->element(parse_poly(ctx->p(), cfg.s));
        auto acc = char_sum(P, s);
        auto v = acc.value();
        if (cfg.out == "json") {
            json counts = json::array();
            for (auto c : acc.counts()) counts.push_back(c);
            std::cout << json{{"s", to_string(s)}, {"value", complex_json(v)}, {"abs", std::abs(v)},
                              {"exact_zero", acc.is_exact_zero()}, {"exponent_counts", counts}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << fmt(v.real()) << "," << fmt(v.imag()) << "\n";
        }
        return 0;
    }
    ResidueFunction all(ctx->size());
    for (std::uint64_t s = 0; s < ctx->size(); ++s) all[s] = char_sum(P, *ctx, s).value();
    print_function(*ctx, all, "s");
    return 0;
}

int cmd_mnorm(const RunConfig& cfg) {
    auto P = ypoly(cfg);
    auto all = moduli(cfg);
    if (all.size() == 1 && cfg.out == "text") {
        auto ctx = ResidueCtx::create(all.front());
        std::cout << fmt(multiplier_norm(P, ctx, cfg.threads)) << "\n";
        return 0;
    }
    json rows = json::array();
    if (cfg.out != "json") std::cout << "Q,lpf,norm,argmax\n";
    for (const auto& Q : all) {
        auto ctx = ResidueCtx::create(Q);
        auto M = multiplier(P, ctx, cfg.threads);
        if (cfg.out == "json")
            rows.push_back({{"Q", to_string(Q)}, {"lpf", ctx->lpf()}, {"norm", M.norm()},
                            {"argmax", to_string(ctx->at(M.argmax()))}});
        else
            std::cout << to_string(Q) << "," << ctx->lpf() << "," << fmt(M.norm()) << "," << to_string(ctx->at(M.argmax()))
                      << "\n";
    }
    if (cfg.out == "json") std::cout << rows.dump(2) << "\n";
    return 0;
}

int cmd_bound_sweep(const RunConfig& cfg) {
    need(!cfg.ypolys.empty(), "--ypoly is required");
    auto all = moduli(cfg);
    SweepSummary summary;
    const bool rows = cfg.out == "csv";
    if (rows) std::cout << "p,Q,lpf,P,d,k,s,lhs,rhs,ok\n";
    for (std::size_t i = 0; i < cfg.ypolys.size(); ++i) {
        auto P = ypoly(cfg, i);
        for (const auto& Q : all) {
            auto ctx = ResidueCtx::create(Q);
            for (const auto& r : check_character_bound(P, ctx, cfg.tolerance, cfg.threads)) {
                summary.add(r);
                if (rows)
                    std::cout << r.p << "," << r.Q << "," << r.lpf << "," << r.P << "," << r.d << "," << r.k << ","
                              << to_string(ctx->at(*r.s)) << "," << fmt(r.lhs) << "," << fmt(r.rhs) << ","
                              << (r.satisfied ? "true" : "false") << "\n";
            }
        }
    }
    if (!rows)
        std::cout << json{{"violations", summary.violations}, {"max_ratio", summary.max_ratio}, {"instances", summary.instances}}
                         .dump(2)
                  << "\n";
    return summary.violations == 0 ? 0 : 1;
}

int cmd_te(const RunConfig& cfg) {
    need(!cfg.m.empty(), "--m is required");
    auto m = parse_poly(prime(cfg), cfg.m);
    auto all = moduli(cfg);
    if (all.size() == 1) {
        auto ctx = ResidueCtx::create(all.front());
        auto res = te_discrepancy(m, ctx);
        if (cfg.out == "csv") {
            need(res.witness.has_value(), "no witness: the discrepancy is 0");
            print_function(*ctx, *res.witness, "x");
            return 0;
        }
        json j{{"m", to_string(m)}, {"Q", to_string(ctx->modulus())}, {"value", res.value}};
        if (res.common_factor) {
            j["common_factor"] = to_string(*res.common_factor);
            j["witness_discrepancy"] = te_operator_discrepancy(*res.witness, m, ctx);
        }
        if (cfg.out == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << fmt(res.value) << (res.common_factor ? "\ncommon factor: " + to_string(*res.common_factor) : "")
                      << "\n";
        return 0;
    }
    std::cout << "m,Q,value,common_factor\n";
    for (const auto& Q : all) {
        auto res = te_discrepancy(m, ResidueCtx::create(Q));
        std::cout << to_string(m) << "," << to_string(Q) << "," << fmt(res.value) << ","
                  << (res.common_factor ? to_string(*res.common_factor) : "") << "\n";
    }
    return 0;
}

int cmd_vdc(const RunConfig& cfg) {
    auto ctx = single_ring(cfg);
    need(cfg.k >= 1, "--k is required");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ResidueFunction f(ctx->size());
    for (auto& v : f) v = {u(rng), u(rng)};
    Subspace H = cfg.ypolys.empty() ? Subspace::full(ctx) : image_subgroup(ypoly(cfg), ctx);
    auto sides = vdc_check(f, H, cfg.k);
    json j{{"rng", kRngName}, {"seed", cfg.seed}, {"Q", to_string(ctx->modulus())}, {"H_size", H.size()},
           {"k", cfg.k},      {"lhs", sides.lhs}, {"rhs", sides.rhs},                   {"ok", sides.lhs <= sides.rhs + cfg.tolerance}};
    if (cfg.out == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << fmt(sides.lhs) << " <= " << fmt(sides.rhs) << " " << (j["ok"].get<bool>() ? "ok" : "VIOLATED") << "\n";
    return j["ok"].get<bool>() ? 0 : 1;
}

int cmd_roots(const RunConfig& cfg) {
    need(!cfg.ypolys.empty(), "--ypoly is required");
    const auto p = prime(cfg);
    const bool bivariate = cfg.ypolys[0].find('z') != std::string::npos;
    std::vector<json> rows;
    bool all_ok = true;
    for (const auto& Q : moduli(cfg)) {
        auto ctx = ResidueCtx::create(Q);
        auto r = bivariate ? root_count_check(parse_bipoly(p, cfg.ypolys[0]), ctx) : root_count_check(ypoly(cfg), ctx);
        all_ok = all_ok && r.satisfied();
        rows.push_back({{"Q", to_string(Q)}, {"count", r.count}, {"bound", r.bound}, {"ok", r.satisfied()}});
    }
    if (cfg.out == "json") {
        std::cout << json(rows).dump(2) << "\n";
    } else {
        std::cout << "Q,count,bound,ok\n";
        for (const auto& r : rows)
            std::cout << r["Q"].get<std::string>() << "," << r["count"] << "," << fmt(r["bound"].get<double>()) << ","
                      << (r["ok"].get<bool>() ? "true" : "false") << "\n";
    }
    return all_ok ? 0 : 1;
}

std::string additive_text(std::uint32_t p, const std::vector<Poly>& coeffs) {
    YPoly::Terms terms;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (!coeffs[j].is_zero()) terms.emplace(checked_pow(p, static_cast<unsigned>(j)), coeffs[j]);
    return to_string(YPoly(p, terms));
}

int cmd_decompose(const RunConfig& cfg) {
    auto P = ypoly(cfg);
    auto dec = decompose(P);
    if (reassemble(dec) != P) throw InvariantError("decomposition does not reassemble");
    if (cfg.out == "json") {
        json parts = json::array();
        for (const auto& [r, coeffs] : dec.parts) parts.push_back({{"r", r}, {"eta", additive_text(P.p(), coeffs)}});
        std::cout << json{{"a0", to_string(dec.a0)}, {"parts", parts}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "a0: " << coefficient_text(dec.a0.is_zero() ? Poly(P.p()) : dec.a0, true) << "\n";
    for (const auto& [r, coeffs] : dec.parts) std::cout << "r=" << r << ": " << additive_text(P.p(), coeffs) << "\n";
    return 0;
}

int cmd_ddeg(const RunConfig& cfg) {
    std::cout << d_deg(ypoly(cfg)) << "\n";
    return 0;
}

json certificate_json(const std::vector<AdditivePoly>& etas, const ReductionCertificate& cert) {
    json zetas = json::array();
    for (const auto& z : cert.zetas) zetas.push_back(to_string(z));
    json inputs = json::array();
    for (const auto& e : etas) inputs.push_back(to_string(e));
    return {{"etas", inputs}, {"eta", to_string(cert.eta)}, {"zetas", zetas}, {"identity_holds", certificate_holds(etas, cert)}};
}

void print_certificate(const ReductionCertificate& cert) {
    for (std::size_t i = 0; i < cert.zetas.size(); ++i)
        std::cout << "zeta" << i + 1 << ": " << to_string(cert.zetas[i]) << "\n";
}

int cmd_reduce(const RunConfig& cfg) {
    need(!cfg.etas.empty(), "--etas is required");
    std::vector<AdditivePoly> etas;
    for (const auto& text : split_etas(cfg.etas)) etas.push_back(parse_additive(prime(cfg), text));
    need(!etas.empty(), "--etas lists no polynomials");
    auto cert = reduce_family(etas);
    if (cfg.out == "json") {
        std::cout << certificate_json(etas, cert).dump(2) << "\n";
        return 0;
    }
    std::cout << to_string(cert.eta) << "\n";
    print_certificate(cert);
    return 0;
}

int cmd_goodeq(const RunConfig& cfg) {
    auto P = ypoly(cfg);
    try {
        auto v = is_good_equidistribution(P);
        if (cfg.out == "json") {
            auto j = certificate_json(v.etas, v.certificate);
            json rs = json::array();
            for (auto r : v.exponents) rs.push_back(r);
            std::cout << json{{"P", to_string(P)}, {"good", v.good}, {"r", rs}, {"certificate", j}}.dump(2) << "\n";
            return 0;
        }
        std::cout << (v.good ? "true" : "false") << "\n";
        for (std::size_t i = 0; i < v.etas.size(); ++i)
            std::cout << "eta" << i + 1 << " (r=" << v.exponents[i] << "): " << to_string(v.etas[i]) << "\n";
        std::cout << "eta: " << to_string(v.certificate.eta) << "\n";
        print_certificate(v.certificate);
        return 0;
    } catch (const UndecidableError&) {
        if (separable_hint(P)) {
            std::cout << "true (separable; coefficients outside F_p)\n";
            return 0;
        }
        throw;
    }
}

int cmd_subgroup(const RunConfig& cfg) {
    auto ctx = single_ring(cfg);
    auto P = ypoly(cfg);
    Subspace H(ctx);
    if (cfg.which == "image")
        H = image_subgroup(P, ctx);
    else if (cfg.which == "eta")
        H = eta_image_sum(P, ctx);
    else if (cfg.which == "annihilator")
        H = annihilator(eta_image_sum(P, ctx));
    else
        throw ParseError("--which must be image, eta or annihilator");
    if (cfg.out == "json") {
        json basis = json::array();
        for (const auto& r : H.basis_residues()) basis.push_back(to_string(r));
        std::cout << json{{"Q", to_string(ctx->modulus())}, {"rank", H.rank()}, {"size", H.size()}, {"basis", basis}}.dump(2)
                  << "\n";
    } else {
        std::cout << to_string(H);
    }
    return 0;
}

std::vector<std::uint64_t> random_set(std::mt19937_64& rng, std::uint64_t size) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < size; ++x)
        if (rng() & 1u) out.push_back(x);
    return out;
}

json counts_json(const CtxPtr& ctx, const std::string& P, std::uint32_t r, const PatternCount& c) {
    return {{"q", ctx->size()},       {"P", P},           {"Q", to_string(ctx->modulus())}, {"r", r},
            {"count", c.count},       {"expected", c.expected}, {"bound", c.bound},        {"ok", c.ok()}};
}

int cmd_sarkozy(const RunConfig& cfg) {
    auto P = ypoly(cfg);
    if (cfg.depth > 0) {
        auto res = is_intersective_upto(P, cfg.depth);
        std::cout << (res.verdict ? "intersective up to degree " + std::to_string(cfg.depth)
                                  : "not intersective: no root mod " + to_string(*res.witness))
                  << "\n";
        if (cfg.modulus.empty() && cfg.deg_range.empty()) return 0;
    }
    auto ctx = single_ring(cfg);
    std::mt19937_64 rng(cfg.seed);
    auto A = cfg.set_a.empty() ? random_set(rng, ctx->size()) : load_residue_set_csv(ctx, cfg.set_a);
    auto B = cfg.set_b.empty() ? random_set(rng, ctx->size()) : load_residue_set_csv(ctx, cfg.set_b);
    auto c = count_patterns(A, B, P, ctx);
    auto j = counts_json(ctx, to_string(P), 1, c);
    j["rng"] = kRngName;
    j["seed"] = cfg.seed;
    std::cout << j.dump(2) << "\n";
    return c.ok() ? 0 : 1;
}

int cmd_freeset(const RunConfig& cfg) {
    auto ctx = single_ring(cfg);
    auto P = ypoly(cfg);
    auto res = max_free_set(P, ctx, true);
    json example = json::array();
    for (auto x : res.example) example.push_back(to_string(ctx->at(x)));
    json j{{"q", ctx->size()}, {"P", to_string(P)}, {"Q", to_string(ctx->modulus())}, {"size", res.size},
           {"exact", res.exact}, {"example", example}};
    if (res.bound_applies) {
        j["bound"] = res.bound;
        j["ok"] = static_cast<double>(res.size) <= res.bound + cfg.tolerance;
    }
    if (cfg.out == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << res.size << (res.exact ? "" : " (greedy lower bound)")
                  << (res.bound_applies ? " <= " + fmt(res.bound) : "") << "\n";
    return 0;
}

int cmd_solve3(const RunConfig& cfg) {
    need(cfg.ypolys.size() == 3, "solve3 needs --ypoly three times");
    auto P1 = ypoly(cfg, 0), P2 = ypoly(cfg, 1), P3 = ypoly(cfg, 2);
    auto all = moduli(cfg);
    if (all.size() == 1 && !cfg.c.empty() && cfg.out != "csv") {
        auto ctx = ResidueCtx::create(all.front());
        auto res = count_solutions_three(P1, P2, P3, ctx->element(parse_poly(ctx->p(), cfg.c)));
        auto j = counts_json(ctx, to_string(P1) + " ; " + to_string(P2) + " ; " + to_string(P3), 3, res.counts);
        j["c_in_H"] = res.c_in_H;
        j["H_size"] = res.H_size;
        j["relative_deviation"] = res.relative_deviation;
        j["relative_bound"] = res.relative_bound;
        std::cout << j.dump(2) << "\n";
        return res.counts.ok() ? 0 : 1;
    }
    bool ok = true;
    std::cout << "p,k,q,Q,c,count,expected,c_in_H,relative_deviation,relative_bound,ok\n";
    for (const auto& Q : all) {
        auto ctx = ResidueCtx::create(Q);
        std::vector<std::uint64_t> cs;
        if (cfg.c.empty())
            for (std::uint64_t x = 0; x < ctx->size(); ++x) cs.push_back(x);
        else
            cs.push_back(ctx->index_of(ctx->reduce(parse_poly(ctx->p(), cfg.c))));
        for (auto ci : cs) {
            auto res = count_solutions_three(P1, P2, P3, ctx->at(ci));
            ok = ok && res.counts.ok();
            std::cout << ctx->p() << "," << ctx->degree() << "," << ctx->size() << "," << to_string(Q) << ","
                      << to_string(ctx->at(ci)) << "," << res.counts.count << "," << fmt(res.counts.expected) << ","
                      << (res.c_in_H ? "true" : "false") << "," << fmt(res.relative_deviation) << ","
                      << fmt(res.relative_bound) << "," << (res.counts.ok() ? "true" : "false") << "\n";
        }
    }
    return ok ? 0 : 1;
}

// Exhaustive minimum over all r-colorings, or the count for one coloring from CSV.
int monochromatic_command(const RunConfig& cfg, const YPoly& P, const YPoly& Qp, bool schur) {
    auto ctx = single_ring(cfg);
    auto count = [&](const Coloring& col) { return schur ? schur_count(col, P) : monochromatic_count(col, P, Qp); };
    const std::string label = schur ? to_string(P) : to_string(P) + " ; " + to_string(Qp);
    if (!cfg.coloring.empty()) {
        auto col = load_coloring_csv(ctx, cfg.coloring);
        PatternCount c;
        c.count = count(col);
        std::cout << json{{"q", ctx->size()}, {"P", label}, {"Q", to_string(ctx->modulus())}, {"r", col.classes},
                          {"count", c.count}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    need(cfg.colors >= 1, "--colors must be >= 1");
    const double total_d = std::pow(static_cast<double>(cfg.colors), static_cast<double>(ctx->size()));
    if (total_d > static_cast<double>(std::uint64_t{1} << 24))
        throw PreconditionError("too many colorings for exhaustive search; pass --coloring");
    const auto total = static_cast<std::uint64_t>(total_d);
    std::vector<std::uint64_t> counts(total);
    parallel_for(total, cfg.threads, [&](std::size_t code) {
        std::vector<std::uint32_t> color(ctx->size());
        auto rest = code;
        for (auto& c : color) {
            c = static_cast<std::uint32_t>(rest % cfg.colors);
            rest /= cfg.colors;
        }
        counts[code] = count(Coloring{ctx, std::move(color), cfg.colors});
    });
    auto it = std::min_element(counts.begin(), counts.end());
    json argmin = json::array();
    auto rest = static_cast<std::uint64_t>(it - counts.begin());
    for (std::uint64_t x = 0; x < ctx->size(); ++x, rest /= cfg.colors) argmin.push_back(rest % cfg.colors);
    std::cout << json{{"q", ctx->size()}, {"P", label},          {"Q", to_string(ctx->modulus())}, {"r", cfg.colors},
                      {"colorings", total}, {"min_count", *it}, {"argmin", argmin}}
                     .dump(2)
              << "\n";
    return 0;
}

int cmd_mono(const RunConfig& cfg) {
    need(cfg.ypolys.size() == 2, "mono needs --ypoly P --ypoly Q");
    return monochromatic_command(cfg, ypoly(cfg, 0), ypoly(cfg, 1), false);
}

int cmd_schur(const RunConfig& cfg) {
    auto P = ypoly(cfg);
    return monochromatic_command(cfg, P, P, true);
}

int cmd_constcond(const RunConfig& cfg) {
    auto Qp = ypoly(cfg);
    need(cfg.k >= 1, "--k is required");
    json rows = json::array();
    for (int k = 1; k <= cfg.k; ++k) {
        auto res = check_constant_condition(Qp, k);
        if (cfg.out == "json")
            rows.push_back({{"k", k}, {"field_modulus", to_string(res.modulus)}, {"holds", res.holds}, {"H_basis", res.basis}});
        else
            std::cout << "k=" << k << " (mod " << to_string(res.modulus) << "): " << (res.holds ? "true" : "false") << "\n";
    }
    if (cfg.out == "json") std::cout << rows.dump(2) << "\n";
    return 0;
}

int cmd_verify_all(const RunConfig& cfg) {
    AcceptanceOptions opt;
    opt.seed = cfg.seed;
    opt.threads = cfg.threads;
    std::cout << "# rng " << kRngName << " seed " << cfg.seed << "\n";
    int failed = 0;
    run_acceptance(opt, [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        failed += !r.passed;
    });
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character sums, discrepancy and combinatorial counts over F_p[t]/(Q)"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());

    app.add_option("--p", cfg.p, "prime characteristic");
    app.add_option("--modulus", cfg.modulus, "monic modulus Q in t");
    app.add_option("--modulus-deg-range", cfg.deg_range, "sweep all monic Q with degree in A..B");
    app.add_flag("--irreducible-only", cfg.irreducible_only, "restrict the sweep to irreducible Q");
    app.add_option("--ypoly", cfg.ypolys, "polynomial in y (repeat where several are needed)");
    app.add_option("--etas", cfg.etas, "additive polynomials separated by ';'");
    app.add_option("--set-a", cfg.set_a, "CSV file of residues");
    app.add_option("--set-b", cfg.set_b, "CSV file of residues");
    app.add_option("--coloring", cfg.coloring, "CSV file residue,color");
    app.add_option("--colors", cfg.colors, "number of colors for exhaustive search");
    app.add_option("--c", cfg.c, "target residue");
    app.add_option("--s", cfg.s, "frequency residue");
    app.add_option("--m", cfg.m, "multiplier polynomial for te");
    app.add_option("--k", cfg.k, "degree parameter");
    app.add_option("--depth", cfg.depth, "intersectivity search depth");
    app.add_option("--which", cfg.which, "subgroup: image|eta|annihilator");
    app.add_option("--seed", cfg.seed, "seed for the mt19937_64 generator");
    app.add_option("--threads", cfg.threads, "worker threads");
    app.add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--tolerance", cfg.tolerance, "absolute tolerance for inequalities");

    using Handler = int (*)(const RunConfig&);
    const std::vector<std::tuple<const char*, const char*, Handler>> commands = {
        {"lpf", "size of the least irreducible factor of Q", cmd_lpf},
        {"factor", "squarefree and distinct-degree data of Q", cmd_factor},
        {"charsum", "E_y e(sP(y)/Q)", cmd_charsum},
        {"mnorm", "multiplier norm of P mod Q", cmd_mnorm},
        {"bound-sweep", "character-sum bound over a modulus sweep", cmd_bound_sweep},
        {"te", "total ergodicity discrepancy for y -> m y", cmd_te},
        {"vdc", "van der Corput inequality for a seeded random f", cmd_vdc},
        {"roots", "root count against the lpf bound", cmd_roots},
        {"decompose", "separable decomposition of P", cmd_decompose},
        {"ddeg", "derivational degree of P", cmd_ddeg},
        {"reduce", "Euclidean reduction of additive polynomials", cmd_reduce},
        {"goodeq", "decide good for irrational equidistribution", cmd_goodeq},
        {"subgroup", "image subgroup, eta-image sum or annihilator", cmd_subgroup},
        {"sarkozy", "pattern counts x, x + P(y); intersectivity with --depth", cmd_sarkozy},
        {"freeset", "largest P-free set", cmd_freeset},
        {"solve3", "solutions of P1(x) + P2(y) + P3(z) = c", cmd_solve3},
        {"mono", "monochromatic solutions of P(x) - P(y) = Q(z)", cmd_mono},
        {"schur", "monochromatic solutions of P(x) + P(y) = P(z)", cmd_schur},
        {"constcond", "Q(0) in H^(k) for k = 1..K", cmd_constcond},
        {"verify-all", "run the acceptance suite", cmd_verify_all},
    };
    Handler chosen = nullptr;
    for (const auto& [name, help, handler] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->callback([&chosen, h = handler] { chosen = h; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return chosen(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
