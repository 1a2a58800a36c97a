// Brute-force oracles and small helpers shared by the unit tests.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "fpt/poly.hpp"
#include "fpt/quotient.hpp"
#include "fpt/ypoly.hpp"

namespace fpt::testing {

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(20240611ULL ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline Poly random_poly(std::uint32_t p, int max_degree, std::mt19937_64& g) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::uniform_int_distribution<std::uint32_t> c(0, p - 1);
    int d = deg(g);
    std::vector<std::uint32_t> v(static_cast<std::size_t>(d + 1));
    for (auto& x : v) x = c(g);
    return Poly(p, v);
}

inline YPoly random_ypoly(std::uint32_t p, std::uint64_t max_exp, int t_degree, std::mt19937_64& g) {
    std::uniform_int_distribution<std::uint64_t> e(0, max_exp);
    std::uniform_int_distribution<int> count(1, 4);
    YPoly::Terms terms;
    for (int i = 0, n = count(g); i < n; ++i) {
        auto c = random_poly(p, t_degree, g);
        if (!c.is_zero()) terms.insert_or_assign(e(g), c);
    }
    return YPoly(p, terms);
}

inline ResidueFunction random_function(std::uint64_t n, std::mt19937_64& g) {
    std::normal_distribution<double> d;
    ResidueFunction f(n);
    for (auto& v : f) v = {d(g), d(g)};
    return f;
}

/// P(y) by repeated multiplication, no Horner and no sparse tricks.
inline Poly naive_eval(const YPoly& P, const Poly& y, const Poly& Q) {
    Poly acc(P.p());
    for (const auto& [e, c] : P.terms()) {
        Poly term = c % Q;
        for (std::uint64_t i = 0; i < e; ++i) term = (term * y) % Q;
        acc += term;
    }
    return acc % Q;
}

/// <s, x> read off the remainder, independently of the Gram matrix.
inline std::uint32_t naive_pair(const Poly& s, const Poly& x, const Poly& Q) {
    return ((s * x) % Q).coeff(static_cast<std::size_t>(Q.degree() - 1));
}

inline std::complex<double> e_p(std::uint32_t c, std::uint32_t p) {
    return std::polar(1.0, 2.0 * std::numbers::pi * c / p);
}

/// E_y e(s P(y) / Q) by plain complex summation.
inline std::complex<double> naive_char_sum(const YPoly& P, const Poly& s, const Poly& Q) {
    std::uint64_t N = 1;
    for (int i = 0; i < Q.degree(); ++i) N *= P.p();
    std::complex<double> acc = 0;
    for (std::uint64_t y = 0; y < N; ++y) acc += e_p(naive_pair(s, naive_eval(P, poly_from_index(P.p(), y), Q), Q), P.p());
    return acc / static_cast<double>(N);
}

inline std::vector<Poly> monic_moduli(std::uint32_t p, int max_degree) {
    std::vector<Poly> out;
    for (int d = 1; d <= max_degree; ++d)
        for (auto Q : enumerate_monic(p, d)) out.push_back(Q);
    return out;
}

}  // namespace fpt::testing
