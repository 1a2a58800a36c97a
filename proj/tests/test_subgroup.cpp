#include <set>

#include "doctest.h"
#include "fpt/errors.hpp"
#include "fpt/ergodic.hpp"
#include "fpt/subgroup.hpp"
#include "support.hpp"

using namespace fpt;
using fpt::testing::rng;

namespace {

// Closure of a generating set under addition, by breadth-first search.
std::set<std::uint64_t> closure(const ResidueCtx& ctx, const std::vector<std::uint64_t>& gens) {
    std::set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> frontier{0};
    while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        for (auto g : gens) {
            auto y = ctx.add(x, g);
            if (seen.insert(y).second) frontier.push_back(y);
        }
    }
    return seen;
}

std::set<std::uint64_t> as_set(const Subspace& H) {
    auto e = H.elements();
    return {e.begin(), e.end()};
}

Subspace random_subspace(const CtxPtr& ctx, std::mt19937_64& g) {
    std::uniform_int_distribution<std::uint64_t> pick(0, ctx->size() - 1);
    std::uniform_int_distribution<int> count(0, ctx->degree());
    std::vector<std::uint64_t> gens;
    for (int i = 0, n = count(g); i < n; ++i) gens.push_back(pick(g));
    return span_indices(ctx, gens);
}

}  // namespace

TEST_CASE("span examples") {
    auto ctx = ResidueCtx::create(2, "t^2");
    CHECK(span(ctx, {}).size() == 1);
    auto one = span(ctx, {ctx->at(1)});
    CHECK(one.rank() == 1);
    CHECK(as_set(one) == std::set<std::uint64_t>{0, 1});
    CHECK(span(ctx, {ctx->at(1), ctx->at(2), ctx->at(3)}) == Subspace::full(ctx));
    CHECK_THROWS_AS(span(ctx, {ResidueCtx::create(2, "t^2+1")->at(1)}), PreconditionError);
    CHECK(to_string(Subspace::full(ctx)) == "1\nt\n");
}

TEST_CASE("span equals additive closure and membership is exact") {
    auto g = rng(40);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (const auto& Q : testing::monic_moduli(p, p == 5 ? 2 : 3)) {
            auto ctx = ResidueCtx::create(Q);
            for (int i = 0; i < 5; ++i) {
                std::uniform_int_distribution<std::uint64_t> pick(0, ctx->size() - 1);
                std::vector<std::uint64_t> gens{pick(g), pick(g)};
                auto H = span_indices(ctx, gens);
                auto expected = closure(*ctx, gens);
                REQUIRE(as_set(H) == expected);
                CHECK(H.size() == expected.size());
                CHECK(H.elements().size() == expected.size());
                for (std::uint64_t x = 0; x < ctx->size(); ++x) REQUIRE(H.contains(x) == (expected.count(x) == 1));
            }
        }
    }
}

TEST_CASE("annihilator duality") {
    auto ctx = ResidueCtx::create(2, "t^2");
    CHECK(annihilator(Subspace::full(ctx)).size() == 1);
    CHECK(annihilator(Subspace(ctx)) == Subspace::full(ctx));
    auto g = rng(41);
    for (std::uint32_t p : {2u, 3u}) {
        for (const auto& Q : testing::monic_moduli(p, 3)) {
            auto ctx2 = ResidueCtx::create(Q);
            for (int i = 0; i < 4; ++i) {
                auto H = random_subspace(ctx2, g);
                auto perp = annihilator(H);
                REQUIRE(H.size() * perp.size() == ctx2->size());
                REQUIRE(annihilator(perp) == H);
                std::set<std::uint64_t> brute;
                for (std::uint64_t s = 0; s < ctx2->size(); ++s) {
                    bool kills = true;
                    for (auto z : H.elements()) kills = kills && ctx2->pair(s, z) == 0;
                    if (kills) brute.insert(s);
                }
                REQUIRE(as_set(perp) == brute);
            }
        }
    }
}

TEST_CASE("image subgroup examples") {
    for (std::uint32_t p : {2u, 3u}) {
        for (const auto& Q : testing::monic_moduli(p, 2))
            CHECK(image_subgroup(YPoly::y(p), ResidueCtx::create(Q)).size() == ResidueCtx::create(Q)->size());
    }
    auto ctx = ResidueCtx::create(2, "t^2");
    auto H = image_subgroup(parse_ypoly(2, "y^2"), ctx);
    CHECK(as_set(H) == std::set<std::uint64_t>{0, 1});
    auto good = parse_ypoly(3, "y^9 + y^6 - y");
    for (auto Q : {"t^2+1", "t^3+2*t+1"}) {
        auto c = ResidueCtx::create(3, Q);
        CHECK(image_subgroup(good, c) == Subspace::full(c));
    }
}

TEST_CASE("image subgroup versus the sum of additive-part images") {
    // The two agree for additive P, and the span never exceeds the eta-image sum.
    auto g = rng(42);
    for (std::uint32_t p : {2u, 3u}) {
        std::vector<YPoly> family;
        for (int i = 0; i < 12; ++i) family.push_back(testing::random_ypoly(p, 3 * p * p, 0, g));
        for (int i = 0; i < 6; ++i) {
            YPoly::Terms terms;
            std::uniform_int_distribution<std::uint32_t> c(0, p - 1);
            for (std::uint64_t e = 1; e <= p * p * p; e *= p)
                if (auto v = c(g)) terms.insert_or_assign(e, Poly::constant(p, v));
            family.emplace_back(p, terms);
        }
        for (const auto& Q : testing::monic_moduli(p, 3)) {
            auto ctx = ResidueCtx::create(Q);
            for (const auto& P : family) {
                auto spanned = image_subgroup(P, ctx);
                auto etas = eta_image_sum(P, ctx);
                REQUIRE(sum(spanned, etas) == etas);
                bool additive = P.constant_term().is_zero();
                for (const auto& [e, c] : P.terms()) {
                    auto m = e;
                    while (m > 1 && m % p == 0) m /= p;
                    additive = additive && m == 1;
                }
                if (additive) REQUIRE(spanned == etas);
            }
        }
    }
    // Equality fails in general: y^6 + y vanishes on F_2, yet y itself is an additive part.
    auto ctx = ResidueCtx::create(2, "t");
    auto P = parse_ypoly(2, "y^6 + y");
    CHECK(image_subgroup(P, ctx).size() == 1);
    CHECK(eta_image_sum(P, ctx).size() == 2);
}

TEST_CASE("annihilator of the image is where the character sum collapses") {
    auto g = rng(43);
    for (std::uint32_t p : {2u, 3u}) {
        for (const auto& Q : testing::monic_moduli(p, 3)) {
            auto ctx = ResidueCtx::create(Q);
            auto P = testing::random_ypoly(p, 10, 1, g);
            auto a0 = ctx->reduce(P.constant_term());
            auto span_perp = annihilator(image_subgroup(P, ctx));
            auto eta_perp = annihilator(eta_image_sum(P, ctx));
            for (std::uint64_t s = 0; s < ctx->size(); ++s) {
                auto acc = char_sum(P, *ctx, s);
                bool collapses = acc.distance_to_root(ctx->pair(s, ctx->index_of(a0))) == 0.0;
                REQUIRE(span_perp.contains(s) == collapses);
                if (eta_perp.contains(s)) REQUIRE(collapses);
            }
        }
    }
}

TEST_CASE("coset averages") {
    auto ctx = ResidueCtx::create(3, "t^2+1");
    auto g = rng(44);
    auto f = testing::random_function(ctx->size(), g);
    CHECK(coset_average(f, Subspace(ctx), 5) == f[5]);
    std::complex<double> mean = 0;
    for (auto v : f) mean += v;
    mean /= static_cast<double>(f.size());
    CHECK(std::abs(coset_average(f, Subspace::full(ctx), 4) - mean) < 1e-12);
    auto H = span_indices(ctx, {1});
    for (std::uint64_t s = 0; s < ctx->size(); ++s) {
        if (ctx->pair(s, 1) == 0) continue;
        CHECK(std::abs(coset_average(character(*ctx, s), H, 7)) < 1e-12);
    }
}
