#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpt/quotient.hpp"
#include "fpt/subgroup.hpp"
#include "fpt/ypoly.hpp"

namespace fpt {

/// Histogram of P over the ring: hist[x] = #{y : P(y) = x}.
std::vector<std::uint64_t> value_histogram(const YPoly& P, const ResidueCtx& ctx);

/// E_y e(s P(y) / Q), as exact unity-exponent counts.
SumAccumulator char_sum(const YPoly& P, const ResidueCtx& ctx, std::uint64_t s);
SumAccumulator char_sum(const YPoly& P, const Residue& s);

/// m(s) = E_y e(sP(y)/Q) - e(s a0/Q) 1_{H^perp}(s) for every s, where H is the sum of
/// the additive-part images (or a caller-supplied subgroup).
struct Multiplier {
    CtxPtr ctx;
    YPoly P;  ///< coefficients reduced mod Q
    Subspace H;
    Subspace H_perp;
    std::vector<std::complex<double>> value;
    std::vector<double> modulus;  ///< exact 0 where the counts cancel exactly

    double norm() const;
    std::uint64_t argmax() const;
};

Multiplier multiplier(const YPoly& P, const CtxPtr& ctx, unsigned threads = 1);
Multiplier multiplier(const YPoly& P, const CtxPtr& ctx, const Subspace& H, unsigned threads = 1);
double multiplier_norm(const YPoly& P, const CtxPtr& ctx, unsigned threads = 1);

/// ||f||_2 with respect to the uniform probability measure.
double l2_norm(const ResidueFunction& f);
/// e(s x / Q) as a function of x.
ResidueFunction character(const ResidueCtx& ctx, std::uint64_t s);

/// || E_y f(x + P(y)) - E_{z in H} f(x + a0 + z) ||_2, evaluated in x-space.
double l2_discrepancy(const ResidueFunction& f, const YPoly& P, const CtxPtr& ctx);
double l2_discrepancy(const ResidueFunction& f, const YPoly& P, const CtxPtr& ctx, const Subspace& H);

struct BoundReport {
    std::uint32_t p = 0;
    std::string Q;
    std::string P;
    std::uint64_t lpf = 0;
    std::uint64_t d = 0;
    int k = 0;
    std::optional<std::uint64_t> s;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
};

/// p^(2 floor(log_p d)) (k-1) / lpf.
double character_bound_rhs(std::uint32_t p, std::uint64_t d, int k, std::uint64_t lpf);
/// One report per s: |m(s)|^(2^(k-1)) against the bound above.
std::vector<BoundReport> check_character_bound(const YPoly& P, const CtxPtr& ctx, double tolerance = 1e-9,
                                               unsigned threads = 1);

struct SweepSummary {
    std::uint64_t violations = 0;
    double max_ratio = 0.0;
    std::uint64_t instances = 0;

    void add(const BoundReport& r);
    void merge(const SweepSummary& other);
};

struct TeResult {
    double value = 0.0;
    std::optional<Poly> common_factor;  ///< least irreducible factor of gcd(m, Q)
    std::optional<ResidueFunction> witness;
};

/// sup over ||f||_2 = 1 of || E_y f(x + m y) - E_z f(z) ||_2, by multiplier analysis.
TeResult te_discrepancy(const Poly& m, const CtxPtr& ctx);
/// || E_y f(x + m y) - E_z f(z) ||_2 for a given f, evaluated directly.
double te_operator_discrepancy(const ResidueFunction& f, const Poly& m, const CtxPtr& ctx);

struct VdcSides {
    double lhs = 0.0;
    double rhs = 0.0;
    double rhs_imag = 0.0;
};

/// |E_x f|^(2^k) against E_{v in H^k} E_u Delta_{v1..vk} f(u), with Delta_v f(u) = f(u+v) conj(f(u)).
VdcSides vdc_check(const ResidueFunction& f, const Subspace& H, int k);

struct RootCount {
    std::uint64_t count = 0;
    std::uint64_t degree_sum = 0;
    double bound = 0.0;
    bool satisfied() const noexcept { return static_cast<double>(count) <= bound + 1e-9; }
};

/// Roots of T in F[t]_Q against (sum of degrees) |Q|^l / lpf(Q).
RootCount root_count_check(const YPoly& T, const CtxPtr& ctx);
RootCount root_count_check(const BiPoly& T, const CtxPtr& ctx);

struct DiagonalResult {
    double value = 0.0;
    double bound = 0.0;
};

/// f on (F[t]_Q)^m indexed by x1 + |Q| x2; shift along the diagonal by P(y). m in {1, 2}.
DiagonalResult diagonal_discrepancy(const ResidueFunction& f, const YPoly& P, const CtxPtr& ctx, int m);

}  // namespace fpt
