#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fpt/combinat.hpp"
#include "fpt/errors.hpp"
#include "fpt/subgroup.hpp"
#include "support.hpp"

using namespace fpt;
using fpt::testing::rng;

namespace {

YPoly Y(std::uint32_t p, const std::string& s) { return parse_ypoly(p, s); }

std::vector<std::uint64_t> random_subset(std::uint64_t N, double density, std::mt19937_64& g) {
    std::bernoulli_distribution keep(density);
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < N; ++x)
        if (keep(g)) out.push_back(x);
    return out;
}

// Largest P-free set by scanning every subset.
std::uint64_t subset_oracle(const YPoly& P, const ResidueCtx& ctx) {
    const auto N = ctx.size();
    auto values = value_table(P, ctx);
    std::vector<bool> diff(N, false);
    for (auto v : values) diff[v] = diff[ctx.neg(v)] = true;
    std::uint64_t best = 0;
    for (std::uint64_t mask = 1; mask < (1ULL << N); ++mask) {
        auto size = static_cast<std::uint64_t>(std::popcount(mask));
        if (size <= best) continue;
        bool ok = true;
        for (std::uint64_t a = 0; a < N && ok; ++a)
            for (std::uint64_t b = a + 1; b < N && ok; ++b)
                if ((mask >> a & 1) && (mask >> b & 1) && diff[ctx.sub(b, a)]) ok = false;
        if (ok) best = size;
    }
    return best;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("fpt_test_" + name)).string();
}

}  // namespace

TEST_CASE("intersectivity") {
    CHECK(is_intersective_upto(Y(2, "y^2 + y"), 4).verdict);
    CHECK(is_intersective_upto(Y(2, "y + t"), 5).verdict);
    auto r = is_intersective_upto(Y(2, "y^2 + y + 1"), 1);
    CHECK_FALSE(r.verdict);
    REQUIRE(r.witness);
    CHECK(*r.witness == Poly::t(2));
    // 2 = 3^2 in F_7 and the root lifts, so y^2 - 2 has roots mod every prime power of degree <= 2.
    CHECK(is_intersective_upto(Y(7, "y^2 - 2"), 2).verdict);
    // y^2 - 3 has no root mod t over F_7.
    CHECK(*is_intersective_upto(Y(7, "y^2 - 3"), 2).witness == Poly::t(7));
    // y^2 + t has a root mod t but not mod t^2.
    CHECK(*is_intersective_upto(Y(3, "y^2 + t"), 2).witness == parse_poly(3, "t^2"));
    CHECK_THROWS_AS(is_intersective_upto(Y(2, "y+1"), 0), PreconditionError);
}

TEST_CASE("pattern counts agree with the double loop") {
    auto ctx = ResidueCtx::create(2, "t^3+t+1");
    std::vector<std::uint64_t> all(ctx->size());
    for (std::uint64_t x = 0; x < ctx->size(); ++x) all[x] = x;
    CHECK(count_patterns(all, all, Y(2, "y^3"), ctx).count == ctx->size() * ctx->size());
    CHECK(count_patterns({}, all, Y(2, "y^3"), ctx).count == 0);
    // y^3 permutes F_8, so the deviation vanishes.
    auto g = rng(60);
    auto A = random_subset(8, 0.5, g), B = random_subset(8, 0.5, g);
    CHECK(count_patterns(A, B, Y(2, "y^3"), ctx).deviation == 0.0);

    const std::vector<std::pair<std::uint32_t, const char*>> moduli = {
        {2, "t^3+t+1"}, {2, "t^4+t+1"}, {3, "t^2+1"}, {3, "t^3+2*t+1"}, {5, "t^2+2"}, {2, "t^4"}, {3, "t^3"}};
    const std::vector<const char*> polys = {"y^2", "y^3", "y^6+y", "(t+1)*y^2+y", "y^4-y^2"};
    int instances = 0;
    for (int i = 0; i < 100; ++i) {
        auto [p, Qtext] = moduli[static_cast<std::size_t>(i) % moduli.size()];
        auto c = ResidueCtx::create(p, Qtext);
        auto P = Y(p, polys[static_cast<std::size_t>(i / 7) % polys.size()]);
        auto As = random_subset(c->size(), 0.4, g), Bs = random_subset(c->size(), 0.4, g);
        auto values = value_table(P, *c);
        std::vector<bool> inB(c->size(), false);
        for (auto b : Bs) inB[b] = true;
        std::uint64_t naive = 0;
        for (auto a : As)
            for (auto v : values) naive += inB[c->add(a, v)];
        auto pc = count_patterns(As, Bs, P, c);
        REQUIRE(pc.count == naive);
        CHECK(pc.ok());
        ++instances;
    }
    CHECK(instances == 100);
}

TEST_CASE("free sets") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        auto ctx = ResidueCtx::create(Poly::t(p));
        CHECK(max_free_set(YPoly::y(p), ctx).size == 1);
    }
    // y^2 - y vanishes identically on F_2: no constraints.
    auto ctx2 = ResidueCtx::create(2, "t");
    CHECK(max_free_set(Y(2, "y^2 + y"), ctx2).size == 2);

    for (std::uint32_t q : {5u, 7u, 11u, 13u}) {
        auto ctx = ResidueCtx::create(Poly::t(q));
        auto r = max_free_set(Y(q, "y^2"), ctx);
        CHECK(r.exact);
        CHECK(r.size == subset_oracle(Y(q, "y^2"), *ctx));
        CHECK(r.example.size() == r.size);
        auto values = value_table(Y(q, "y^2"), *ctx);
        for (auto a : r.example)
            for (auto b : r.example)
                if (a != b) CHECK(std::find(values.begin(), values.end(), ctx->sub(b, a)) == values.end());
        CHECK(r.bound_applies);
        CHECK(static_cast<double>(r.size) <= r.bound);
    }
    for (std::uint32_t p : {2u, 3u}) {
        for (const auto& Q : testing::monic_moduli(p, p == 2 ? 4 : 2)) {
            auto ctx = ResidueCtx::create(Q);
            for (auto Ptext : {"y^2", "y^3+t*y", "y^4+y"}) {
                auto P = Y(p, Ptext);
                REQUIRE(max_free_set(P, ctx).size == subset_oracle(P, *ctx));
            }
        }
    }
    auto big = ResidueCtx::create(3, "t^4+t+2");
    CHECK_THROWS_AS(max_free_set(Y(3, "y^2"), big), PreconditionError);
    auto greedy = max_free_set(Y(3, "y^2"), big, true);
    CHECK_FALSE(greedy.exact);
    CHECK(greedy.size >= 1);
}

TEST_CASE("three-term solution counts") {
    auto ctx = ResidueCtx::create(5, "t");
    auto counts = solution_counts_three(Y(5, "y"), Y(5, "y"), Y(5, "y"), ctx);
    for (auto c : counts) CHECK(c == 25);

    for (auto [p, Qtext] : {std::pair{5u, "t"}, std::pair{5u, "t^2+2"}, std::pair{3u, "t^2+1"}, std::pair{2u, "t^3+t+1"}}) {
        auto c = ResidueCtx::create(p, Qtext);
        auto P1 = Y(p, "y^2"), P3 = -Y(p, "y^2");
        auto fast = solution_counts_three(P1, P1, P3, c);
        auto v1 = value_table(P1, *c), v3 = value_table(P3, *c);
        std::vector<std::uint64_t> naive(c->size(), 0);
        for (auto a : v1)
            for (auto b : v1)
                for (auto d : v3) ++naive[c->add(c->add(a, b), d)];
        REQUIRE(fast == naive);
        auto r = count_solutions_three(P1, P1, P3, c->zero());
        CHECK(r.counts.count == naive[0]);
        CHECK(r.c_in_H);
        CHECK(r.relative_deviation <= r.relative_bound + 1e-9);
    }
    // Constant mod Q, or a nonzero constant term: rejected.
    auto c2 = ResidueCtx::create(2, "t");
    CHECK_THROWS_AS(count_solutions_three(Y(2, "t*y^2"), Y(2, "y"), Y(2, "y"), c2->zero()), PreconditionError);
    CHECK_THROWS_AS(count_solutions_three(Y(5, "y^2+1"), Y(5, "y"), Y(5, "y"), ctx->zero()), PreconditionError);
    // Values confined to a proper subgroup: c outside it has no solutions.
    auto c4 = ResidueCtx::create(2, "t^2");
    auto frob = Y(2, "y^2");
    auto outside = count_solutions_three(frob, frob, frob, c4->element(Poly::t(2)));
    CHECK_FALSE(outside.c_in_H);
    CHECK(outside.H_size == 2);
    CHECK(outside.counts.count == 0);
}

TEST_CASE("monochromatic counts") {
    auto g = rng(61);
    for (auto [p, Qtext] : {std::pair{5u, "t"}, std::pair{7u, "t"}, std::pair{3u, "t^2+1"}}) {
        auto ctx = ResidueCtx::create(p, Qtext);
        auto P = Y(p, "y^2");
        auto Qp = Y(p, "y^3 + t*y");
        for (int i = 0; i < 10; ++i) {
            std::uniform_int_distribution<std::uint32_t> col(0, 1 + static_cast<std::uint32_t>(i % 2));
            std::vector<std::uint32_t> color(ctx->size());
            for (auto& c : color) c = col(g);
            std::uint32_t classes = *std::max_element(color.begin(), color.end()) + 1;
            auto coloring = make_coloring(ctx, color);
            CHECK(coloring.classes == classes);
            auto pv = value_table(P, *ctx), qv = value_table(Qp, *ctx);
            std::uint64_t mono = 0, schur = 0;
            for (std::uint64_t x = 0; x < ctx->size(); ++x)
                for (std::uint64_t y = 0; y < ctx->size(); ++y)
                    for (std::uint64_t z = 0; z < ctx->size(); ++z) {
                        if (color[x] != color[y] || color[y] != color[z]) continue;
                        mono += ctx->sub(pv[x], pv[y]) == qv[z];
                        schur += ctx->add(pv[x], pv[y]) == pv[z];
                    }
            REQUIRE(monochromatic_count(coloring, P, Qp) == mono);
            REQUIRE(schur_count(coloring, P) == schur);
        }
    }
    // One class: the total count equals the three-term count with the induced polynomials.
    auto ctx = ResidueCtx::create(5, "t");
    auto single = make_coloring(ctx, std::vector<std::uint32_t>(5, 0));
    auto P = Y(5, "y^2");
    CHECK(monochromatic_count(single, P, P) == solution_counts_three(P, -P, -P, ctx)[0]);
    CHECK_THROWS_AS(make_coloring(ctx, {0, 1}), PreconditionError);
}

TEST_CASE("coloring and residue-set CSV") {
    auto ctx = ResidueCtx::create(2, "t^2");
    auto path = temp_path("coloring.csv");
    {
        std::ofstream out(path);
        out << "residue,color\n0,0\n1,1\nt,1\nt+1,0\n";
    }
    auto coloring = load_coloring_csv(ctx, path);
    CHECK(coloring.color == std::vector<std::uint32_t>{0, 1, 1, 0});
    CHECK(coloring.classes == 2);
    {
        std::ofstream out(path);
        out << "0,0\n1,1\n";
    }
    CHECK_THROWS_AS(load_coloring_csv(ctx, path), ParseError);
    {
        std::ofstream out(path);
        out << "residue\nt+1\n1\nt\n1\n";
    }
    CHECK(load_residue_set_csv(ctx, path) == std::vector<std::uint64_t>{1, 2, 3});
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_coloring_csv(ctx, temp_path("missing.csv")), ParseError);
}

TEST_CASE("constant condition") {
    CHECK(first_irreducible(2, 2) == parse_poly(2, "t^2+t+1"));
    CHECK(first_irreducible(3, 1) == Poly::t(3));
    // y^4 + y^2 + 1 = eta(y^2) + 1 with eta = y^2 + y; 1 lies in eta(F_{2^k}) iff k is even.
    auto P = Y(2, "y^4 + y^2 + 1");
    for (int k = 1; k <= 4; ++k) CHECK(check_constant_condition(P, k).holds == (k % 2 == 0));
    for (std::uint32_t p : {2u, 3u})
        for (int k = 1; k <= 4; ++k) {
            CHECK(check_constant_condition(Y(p, "y^2 + y"), k).holds);
            CHECK(check_constant_condition(Y(p, "y^3 + 1"), k).holds);
        }
    // Direct membership: 1 in span{eta(x)} for eta = y^3 - y over F_{3^k}, from y^6 - y^2 + 1.
    for (int k = 1; k <= 4; ++k) {
        auto ctx = ResidueCtx::create(first_irreducible(3, k));
        std::vector<std::uint64_t> image;
        for (std::uint64_t x = 0; x < ctx->size(); ++x) image.push_back(ctx->sub(ctx->mul(ctx->mul(x, x), x), x));
        bool member = span_indices(ctx, image).contains(1);
        CHECK(check_constant_condition(Y(3, "y^6 - y^2 + 1"), k).holds == member);
    }
    CHECK_THROWS_AS(check_constant_condition(Y(2, "t*y"), 1), PreconditionError);
    CHECK_THROWS_AS(check_constant_condition(Y(2, "y"), 0), PreconditionError);
}
