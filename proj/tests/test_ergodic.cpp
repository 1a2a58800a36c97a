#include "doctest.h"
#include "fpt/errors.hpp"
#include "fpt/ergodic.hpp"
#include "fpt/subgroup.hpp"
#include "support.hpp"

using namespace fpt;
using fpt::testing::rng;

namespace {

YPoly Y(std::uint32_t p, const std::string& s) { return parse_ypoly(p, s); }

// Multiplier straight from the definition with complex arithmetic.
std::complex<double> naive_multiplier(const YPoly& P, const CtxPtr& ctx, const Subspace& H_perp, std::uint64_t s) {
    auto ps = poly_from_index(ctx->p(), s);
    auto value = testing::naive_char_sum(P, ps, ctx->modulus());
    if (H_perp.contains(s))
        value -= testing::e_p(testing::naive_pair(ps, P.constant_term() % ctx->modulus(), ctx->modulus()), ctx->p());
    return value;
}

std::uint64_t naive_roots(const BiPoly& T, const ResidueCtx& ctx) {
    std::uint64_t count = 0;
    for (std::uint64_t y = 0; y < ctx.size(); ++y)
        for (std::uint64_t z = 0; z < ctx.size(); ++z) {
            Poly acc(ctx.p());
            for (const auto& [e, c] : T.terms) {
                Poly term = c;
                for (std::uint64_t i = 0; i < e.first; ++i) term = mulmod(term, poly_from_index(ctx.p(), y), ctx.modulus());
                for (std::uint64_t i = 0; i < e.second; ++i) term = mulmod(term, poly_from_index(ctx.p(), z), ctx.modulus());
                acc += term;
            }
            count += (acc % ctx.modulus()).is_zero();
        }
    return count;
}

}  // namespace

TEST_CASE("character sum examples") {
    auto ctx = ResidueCtx::create(2, "t^2+t+1");
    auto s = ctx->element(Poly::t(2));
    auto acc = char_sum(Y(2, "y^3"), s);
    auto brute = testing::naive_char_sum(Y(2, "y^3"), Poly::t(2), ctx->modulus());
    CHECK(std::abs(acc.value() - brute) < 1e-12);
    CHECK(acc.value().real() == doctest::Approx(-0.5));
    CHECK(acc.counts() == std::vector<std::uint64_t>{1, 3});

    // Linear P: the sum vanishes exactly when s*s1 != 0 (t+1 is a zero divisor mod t^2+2).
    auto ctx3 = ResidueCtx::create(3, "t^2+2");
    auto linear = Y(3, "(t+1)*y + t");
    const auto s1 = ctx3->index_of(parse_poly(3, "t+1"));
    for (std::uint64_t s3 = 1; s3 < ctx3->size(); ++s3)
        CHECK(char_sum(linear, *ctx3, s3).is_exact_zero() == (ctx3->mul(s3, s1) != 0));
    CHECK_THROWS_AS(char_sum(linear, *ctx3, 9), PreconditionError);
}

TEST_CASE("multiplier matches the definition") {
    auto g = rng(50);
    for (std::uint32_t p : {2u, 3u}) {
        for (const auto& Q : testing::monic_moduli(p, 3)) {
            auto ctx = ResidueCtx::create(Q);
            auto P = testing::random_ypoly(p, 12, 1, g);
            auto M = multiplier(P, ctx);
            CHECK(M.H_perp == annihilator(eta_image_sum(P, ctx)));
            for (std::uint64_t s = 0; s < ctx->size(); ++s) {
                auto expected = naive_multiplier(P, ctx, M.H_perp, s);
                REQUIRE(std::abs(M.value[s] - expected) < 1e-9);
                REQUIRE(std::abs(M.modulus[s] - std::abs(expected)) < 1e-9);
            }
        }
    }
}

TEST_CASE("multiplier norm examples") {
    for (const auto& Q : testing::monic_moduli(2, 4)) CHECK(multiplier_norm(YPoly::y(2), ResidueCtx::create(Q)) == 0.0);
    auto ctx = ResidueCtx::create(3, "t^2+1");
    auto M = multiplier(Y(3, "y^9 + y^6 - y"), ctx);
    CHECK(M.H == Subspace::full(ctx));
    CHECK(M.modulus[0] == 0.0);
    // y^2 over odd-characteristic fields: Gauss sums of modulus q^{-1/2}.
    for (auto [p, Qtext] : {std::pair{3u, "t^2+1"}, std::pair{3u, "t^3+2*t+1"}, std::pair{5u, "t^2+2"}}) {
        auto c = ResidueCtx::create(p, Qtext);
        CHECK(multiplier_norm(Y(p, "y^2"), c) == doctest::Approx(1.0 / std::sqrt(static_cast<double>(c->size()))));
    }
}

TEST_CASE("l2 discrepancy is bounded by the multiplier norm") {
    auto g = rng(51);
    struct Case {
        std::uint32_t p;
        const char* P;
        const char* Q;
    };
    for (auto [p, Ptext, Qtext] : {Case{2, "y^3", "t^3+t+1"}, Case{2, "y^6+y", "t^4+t+1"}, Case{3, "y^2", "t^2+1"},
                                   Case{3, "y^9+y^6-y", "t^3+2*t+1"}, Case{2, "y+t", "t^2"}, Case{3, "y^6-y^2", "t^2"}}) {
        auto ctx = ResidueCtx::create(p, Qtext);
        auto P = Y(p, Ptext);
        auto M = multiplier(P, ctx);
        auto norm = M.norm();
        for (int i = 0; i < 20; ++i) {
            auto f = testing::random_function(ctx->size(), g);
            REQUIRE(l2_discrepancy(f, P, ctx) <= norm * l2_norm(f) + 1e-9);
        }
        auto extremal = character(*ctx, M.argmax());
        CHECK(l2_discrepancy(extremal, P, ctx) == doctest::Approx(norm).epsilon(1e-9));
        CHECK(l2_discrepancy(ResidueFunction(ctx->size(), 2.5), P, ctx) < 1e-12);
    }
}

TEST_CASE("character bound reports") {
    auto ctx = ResidueCtx::create(2, "t^2+t+1");
    auto reports = check_character_bound(Y(2, "y^3"), ctx);
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].lhs == 0.0);
    CHECK(reports[1].lhs == doctest::Approx(1.0));
    CHECK(reports[1].rhs == doctest::Approx(1.0));
    CHECK(reports[2].lhs == doctest::Approx(0.25));
    for (const auto& r : reports) CHECK(r.satisfied);
    CHECK(character_bound_rhs(2, 3, 2, 4) == doctest::Approx(1.0));
    CHECK(character_bound_rhs(3, 9, 2, 9) == doctest::Approx(9.0));
    CHECK(character_bound_rhs(5, 7, 1, 5) == 0.0);

    SweepSummary summary;
    for (const auto& Q : testing::monic_moduli(2, 4)) {
        auto c = ResidueCtx::create(Q);
        for (auto Ptext : {"y^3", "y^5", "y^6+y", "y^4+y^4-y", "y^4-y^2", "y+t"}) {
            auto P = Y(2, Ptext);
            if (reduce_coeffs(P, *c).is_constant()) continue;
            for (const auto& r : check_character_bound(P, c)) summary.add(r);
        }
    }
    CHECK(summary.violations == 0);
    CHECK(summary.max_ratio <= 1.0 + 1e-12);
    CHECK_THROWS_AS(check_character_bound(Y(2, "7"), ctx), PreconditionError);
}

TEST_CASE("total ergodicity dichotomy") {
    auto ctx = ResidueCtx::create(2, "t^2");
    auto r = te_discrepancy(Poly::t(2), ctx);
    CHECK(r.value == 1.0);
    REQUIRE(r.witness);
    CHECK(*r.common_factor == Poly::t(2));
    CHECK(te_operator_discrepancy(*r.witness, Poly::t(2), ctx) == doctest::Approx(1.0));
    CHECK(te_discrepancy(parse_poly(2, "t+1"), ctx).value == 0.0);
    CHECK_FALSE(te_discrepancy(parse_poly(2, "t+1"), ctx).witness);
    CHECK_THROWS_AS(te_discrepancy(Poly(2), ctx), PreconditionError);

    auto g = rng(52);
    for (std::uint32_t p : {2u, 3u}) {
        for (const auto& Q : testing::monic_moduli(p, 3)) {
            auto c = ResidueCtx::create(Q);
            CHECK(te_discrepancy(Poly::constant(p, 1), c).value == 0.0);
            for (int i = 0; i < 4; ++i) {
                auto m = testing::random_poly(p, 3, g);
                if (m.is_zero()) continue;
                auto res = te_discrepancy(m, c);
                CHECK((res.value == 1.0) == (gcd(m, Q).degree() > 0));
                auto f = testing::random_function(c->size(), g);
                REQUIRE(te_operator_discrepancy(f, m, c) <= res.value * l2_norm(f) + 1e-9);
                if (res.witness) REQUIRE(te_operator_discrepancy(*res.witness, m, c) >= 1.0 - 1e-9);
            }
        }
    }
}

TEST_CASE("van der Corput inequality") {
    auto ctx = ResidueCtx::create(3, "t^2+1");
    auto full = Subspace::full(ctx);
    CHECK(vdc_check(character(*ctx, 4), full, 1).lhs < 1e-12);
    auto g = rng(53);
    auto f = testing::random_function(ctx->size(), g);
    for (int k = 1; k <= 3; ++k) {
        // H = {0}: Jensen.
        auto sides = vdc_check(f, Subspace(ctx), k);
        double jensen = 0;
        for (auto v : f) jensen += std::pow(std::abs(v), std::ldexp(1.0, k));
        CHECK(sides.rhs == doctest::Approx(jensen / f.size()));
    }
    CHECK_THROWS_AS(vdc_check(f, full, 0), PreconditionError);
    CHECK_THROWS_AS(vdc_check(f, full, 4), PreconditionError);
    for (std::uint32_t p : {2u, 3u}) {
        for (const auto& Q : testing::monic_moduli(p, 2)) {
            auto c = ResidueCtx::create(Q);
            for (int i = 0; i < 10; ++i) {
                auto h = testing::random_function(c->size(), g);
                std::uniform_int_distribution<std::uint64_t> pick(0, c->size() - 1);
                auto H = span_indices(c, {pick(g)});
                for (int k = 1; k <= 3; ++k) {
                    auto s = vdc_check(h, H, k);
                    REQUIRE(s.lhs <= s.rhs + 1e-9);
                    REQUIRE(std::abs(s.rhs_imag) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("root counts") {
    auto ctx = ResidueCtx::create(2, "t^2");
    auto r = root_count_check(Y(2, "y^2"), ctx);
    CHECK(r.count == 2);
    CHECK(r.bound == doctest::Approx(4.0));
    CHECK(r.satisfied());
    for (const auto& Q : testing::monic_moduli(3, 2)) {
        auto c = ResidueCtx::create(Q);
        auto one = root_count_check(YPoly::y(3), c);
        CHECK(one.count == 1);
        CHECK(one.satisfied());
    }
    CHECK_THROWS_AS(root_count_check(Y(2, "t^2*y"), ctx), PreconditionError);

    auto g = rng(54);
    for (std::uint32_t p : {2u, 3u}) {
        for (const auto& Q : testing::monic_moduli(p, 2)) {
            auto c = ResidueCtx::create(Q);
            for (int i = 0; i < 5; ++i) {
                auto P = testing::random_ypoly(p, 5, 2, g);
                if (reduce_coeffs(P, *c).is_zero()) continue;
                auto rc = root_count_check(P, c);
                std::uint64_t brute = 0;
                for (std::uint64_t y = 0; y < c->size(); ++y)
                    brute += testing::naive_eval(P, poly_from_index(p, y), Q).is_zero();
                REQUIRE(rc.count == brute);
                REQUIRE(rc.satisfied());
            }
            auto T = parse_bipoly(p, "y*z + t*y + z^2");
            auto bi = root_count_check(T, c);
            CHECK(bi.count == naive_roots(T, *c));
            CHECK(bi.satisfied());
        }
    }
}

TEST_CASE("diagonal action") {
    auto g = rng(55);
    for (auto [p, Qtext, Ptext] : {std::tuple{2u, "t^3+t+1", "y^3"}, std::tuple{3u, "t^2+1", "y^2+t*y"}}) {
        auto ctx = ResidueCtx::create(p, Qtext);
        auto P = Y(p, Ptext);
        auto f = testing::random_function(ctx->size(), g);
        auto one = diagonal_discrepancy(f, P, ctx, 1);
        CHECK(one.value == doctest::Approx(l2_discrepancy(f, P, ctx)));
        CHECK(one.value <= one.bound + 1e-9);

        // f(x1, x2) = g(x1) reduces to the one-dimensional value.
        auto N = ctx->size();
        ResidueFunction lifted(N * N);
        for (std::uint64_t x2 = 0; x2 < N; ++x2)
            for (std::uint64_t x1 = 0; x1 < N; ++x1) lifted[x1 + N * x2] = f[x1];
        CHECK(diagonal_discrepancy(lifted, P, ctx, 2).value == doctest::Approx(one.value));

        for (int i = 0; i < 5; ++i) {
            auto F = testing::random_function(N * N, g);
            auto two = diagonal_discrepancy(F, P, ctx, 2);
            CHECK(two.value <= two.bound + 1e-9);
        }
        CHECK_THROWS_AS(diagonal_discrepancy(f, P, ctx, 3), PreconditionError);
    }
}
