#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpt/quotient.hpp"
#include "fpt/subgroup.hpp"
#include "fpt/ypoly.hpp"

namespace fpt {

/// Total r-coloring of F[t]_Q; color[x] is the class of residue index x.
struct Coloring {
    CtxPtr ctx;
    std::vector<std::uint32_t> color;
    std::uint32_t classes = 1;
};

/// Validates that every residue is colored with a value in [0, classes).
Coloring make_coloring(const CtxPtr& ctx, std::vector<std::uint32_t> color);
/// CSV rows `residue,color`, residue in the t-polynomial grammar; a header row is allowed.
Coloring load_coloring_csv(const CtxPtr& ctx, const std::string& path);
/// CSV rows `residue`, one per line, optional header.
std::vector<std::uint64_t> load_residue_set_csv(const CtxPtr& ctx, const std::string& path);

struct PatternCount {
    std::uint64_t count = 0;
    double expected = 0.0;
    double deviation = 0.0;
    double bound = 0.0;
    bool ok() const noexcept { return deviation <= bound + 1e-9; }
};

struct IntersectiveResult {
    bool verdict = true;
    std::optional<Poly> witness;  ///< a modulus with no root
};

/// Root of P mod Q^s for every irreducible Q and s with deg Q^s <= D.
IntersectiveResult is_intersective_upto(const YPoly& P, int D);

/// #{(x, y) : x in A, x + P(y) in B}, by transforms. The deviation from |A||B| is
/// compared with sqrt(|A||B|) |Q| max_{s != 0} |E_y e(sP(y)/Q)|.
PatternCount count_patterns(const std::vector<std::uint64_t>& A, const std::vector<std::uint64_t>& B, const YPoly& P,
                            const CtxPtr& ctx);

struct FreeSetResult {
    std::uint64_t size = 0;
    std::vector<std::uint64_t> example;
    bool exact = true;              ///< false: greedy lower bound
    bool bound_applies = false;     ///< P has a root mod Q and P is nonzero mod Q
    double bound = 0.0;             ///< C |Q| lpf^(-1/2^(k-1)) + d |Q| / lpf
};

inline constexpr std::uint64_t kExactFreeSetLimit = 64;

/// Largest A with no distinct a, b and y such that b - a = P(y). Exact for |Q| <= 64
/// unless `allow_greedy` is set for larger rings.
FreeSetResult max_free_set(const YPoly& P, const CtxPtr& ctx, bool allow_greedy = false);

struct ThreeTermCount {
    PatternCount counts;
    bool c_in_H = false;
    std::uint64_t H_size = 0;
    double relative_deviation = 0.0;  ///< deviation / q^2
    double relative_bound = 0.0;      ///< bound / q^2
};

/// N(q, c) = #{(x, y, z) : P1(x) + P2(y) + P3(z) = c} with H_q the sum of the value spans.
/// Bound: q^2 sum_i M_i sqrt(d_j d_k), M_i the character-sum bound for P_i.
ThreeTermCount count_solutions_three(const YPoly& P1, const YPoly& P2, const YPoly& P3, const Residue& c);
/// N(q, c) for every c at once.
std::vector<std::uint64_t> solution_counts_three(const YPoly& P1, const YPoly& P2, const YPoly& P3, const CtxPtr& ctx);

/// Monochromatic (x, y, z) with P(x) - P(y) = Qp(z).
std::uint64_t monochromatic_count(const Coloring& coloring, const YPoly& P, const YPoly& Qp);
/// Monochromatic (x, y, z) with P(x) + P(y) = P(z).
std::uint64_t schur_count(const Coloring& coloring, const YPoly& P);

struct ConstantCondition {
    bool holds = false;
    Poly modulus;  ///< the irreducible used to build F_{p^k}
    std::vector<std::string> basis;
};

/// Qp(0) in H^(k), H^(k) the sum of the additive-part images in F_{p^k}.
ConstantCondition check_constant_condition(const YPoly& Qp, int k);

/// First monic irreducible of degree k in enumeration order.
Poly first_irreducible(std::uint32_t p, int k);

}  // namespace fpt
