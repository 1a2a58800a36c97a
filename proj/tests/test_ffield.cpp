#include <algorithm>

#include "doctest.h"
#include "fpt/errors.hpp"
#include "fpt/poly.hpp"
#include "support.hpp"

using namespace fpt;
using fpt::testing::rng;

namespace {

Poly P2(const char* s) { return parse_poly(2, s); }

// Trial division by every monic polynomial of degree <= deg/2.
bool trial_irreducible(const Poly& f) {
    for (int d = 1; 2 * d <= f.degree(); ++d)
        for (auto g : enumerate_monic(f.p(), d))
            if ((f % g).is_zero()) return false;
    return f.degree() >= 1;
}

std::uint64_t trial_lpf(const Poly& f) {
    for (int d = 1; d <= f.degree(); ++d)
        for (auto g : enumerate_monic(f.p(), d))
            if (trial_irreducible(g) && (f % g).is_zero()) return checked_pow(f.p(), static_cast<unsigned>(d));
    return 0;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u, 65521u}) {
        PrimeField F(p);
        for (std::uint32_t a = 1; a < std::min(p, 200u); ++a) CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK_THROWS_AS(F.inv(0), PreconditionError);
    }
    CHECK_THROWS_AS(PrimeField(4), PreconditionError);
    CHECK_THROWS_AS(PrimeField(65537), PreconditionError);
    CHECK(PrimeField(5).signed_rep(3) == -2);
    for (std::uint64_t n = 0; n < 2000; ++n) {
        bool prime = n >= 2;
        for (std::uint64_t d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
        CHECK(is_prime(n) == prime);
    }
}

TEST_CASE("divmod examples") {
    auto [q1, r1] = divmod(P2("t^2+t"), P2("t"));
    CHECK(q1 == P2("t+1"));
    CHECK(r1.is_zero());
    auto [q2, r2] = divmod(P2("t^3+t+1"), P2("t^2+1"));
    CHECK(q2 == P2("t"));
    CHECK(r2 == P2("1"));
    CHECK_THROWS_AS(divmod(P2("t"), Poly(2)), PreconditionError);
}

TEST_CASE("divmod reconstruction and gcd properties") {
    auto g = rng(1);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int i = 0; i < 300; ++i) {
            auto a = testing::random_poly(p, 9, g);
            auto b = testing::random_poly(p, 6, g);
            if (b.is_zero()) continue;
            auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
            if (a.is_zero()) continue;
            auto d = gcd(a, b);
            CHECK(d.is_monic());
            CHECK((a % d).is_zero());
            CHECK((b % d).is_zero());
            CHECK(d == gcd(b, a));
        }
    }
    CHECK(gcd(P2("t"), P2("t^2")) == P2("t"));
    CHECK(gcd(P2("t^2+1"), P2("t+1")) == P2("t+1"));
    CHECK(gcd(parse_poly(3, "2*t+1"), Poly(3)) == parse_poly(3, "t+2"));
}

TEST_CASE("distinct degree profile") {
    CHECK(distinct_degree_profile(P2("t^2+t+1")).degree_multiset == std::map<int, int>{{2, 1}});
    CHECK(distinct_degree_profile(P2("t^2+t")).degree_multiset == std::map<int, int>{{1, 2}});
    CHECK(distinct_degree_profile(P2("t^4+t^2+1")).degree_multiset == std::map<int, int>{{2, 2}});
    for (std::uint32_t p : {2u, 3u, 5u}) {
        int max_degree = p == 2 ? 8 : (p == 3 ? 6 : 4);
        for (int d = 1; d <= max_degree; ++d)
            for (auto Q : enumerate_monic(p, d)) {
                auto profile = distinct_degree_profile(Q);
                REQUIRE(profile.total_degree() == d);
            }
    }
}

TEST_CASE("squarefree decomposition reassembles") {
    auto g = rng(2);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int i = 0; i < 100; ++i) {
            auto a = testing::random_poly(p, 4, g);
            auto b = testing::random_poly(p, 3, g);
            auto f = a * b * b;
            if (f.degree() < 1) continue;
            Poly prod = Poly::constant(p, 1);
            for (const auto& [h, mult] : squarefree_decomposition(f))
                for (int k = 0; k < mult; ++k) prod *= h;
            CHECK(prod == f.monic());
        }
    }
}

TEST_CASE("lpf and irreducibility against trial division") {
    CHECK(lpf(P2("t^2+t+1")) == 4);
    CHECK(lpf(P2("t^3+t^2+t")) == 2);
    CHECK(lpf(P2("t^3+t+1")) == 8);
    CHECK(is_irreducible(P2("t^2+t+1")));
    CHECK_FALSE(is_irreducible(P2("t^2+1")));
    for (std::uint32_t p : {2u, 3u, 5u}) CHECK(is_irreducible(Poly::t(p)));

    for (auto [p, max_degree] : {std::pair{2u, 6}, std::pair{3u, 4}}) {
        for (int d = 1; d <= max_degree; ++d) {
            int irreducible = 0;
            for (auto Q : enumerate_monic(p, d)) {
                bool expected = trial_irreducible(Q);
                REQUIRE(is_irreducible(Q) == expected);
                REQUIRE(lpf(Q) == trial_lpf(Q));
                irreducible += expected;
            }
            // Necklace count of monic irreducibles.
            static const std::map<std::pair<std::uint32_t, int>, int> counts = {
                {{2, 1}, 2}, {{2, 2}, 1}, {{2, 3}, 2}, {{2, 4}, 3}, {{2, 5}, 6}, {{2, 6}, 9},
                {{3, 1}, 3}, {{3, 2}, 3}, {{3, 3}, 8}, {{3, 4}, 18}};
            CHECK(irreducible == counts.at({p, d}));
        }
    }
}

TEST_CASE("lpf of a product is the minimum") {
    auto g = rng(3);
    for (std::uint32_t p : {2u, 3u}) {
        auto moduli = testing::monic_moduli(p, 3);
        std::uniform_int_distribution<std::size_t> pick(0, moduli.size() - 1);
        for (int i = 0; i < 200; ++i) {
            auto a = moduli[pick(g)], b = moduli[pick(g)];
            CHECK(lpf(a * b) == std::min(lpf(a), lpf(b)));
        }
    }
}

TEST_CASE("monic enumeration order") {
    std::vector<std::string> got;
    for (auto Q : enumerate_monic(2, 2)) got.push_back(to_string(Q));
    CHECK(got == std::vector<std::string>{"t^2", "t^2+1", "t^2+t", "t^2+t+1"});
    got.clear();
    for (auto Q : enumerate_monic(2, 1)) got.push_back(to_string(Q));
    CHECK(got == std::vector<std::string>{"t", "t+1"});
    CHECK(enumerate_monic(3, 0).size() == 1);
    CHECK(*enumerate_monic(3, 0).begin() == Poly::constant(3, 1));
}

TEST_CASE("text grammar round trip") {
    CHECK(to_string(parse_poly(2, "t^3+t+1")) == "t^3+t+1");
    CHECK(to_string(parse_poly(3, "4*t^2 + 5")) == "t^2+2");
    CHECK(to_string(parse_poly(5, "t - 1")) == "t+4");
    CHECK(to_string(Poly(7)) == "0");
    CHECK_THROWS_AS(parse_poly(2, "t^^2"), ParseError);
    CHECK_THROWS_AS(parse_poly(2, "t +"), ParseError);
    CHECK_THROWS_AS(parse_poly(2, "y"), ParseError);
    auto g = rng(4);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        for (int i = 0; i < 200; ++i) {
            auto f = testing::random_poly(p, 8, g);
            CHECK(parse_poly(p, to_string(f)) == f);
            CHECK(poly_from_index(p, index_of_poly(f)) == f);
        }
    }
}
