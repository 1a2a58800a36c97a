#include "fpt/ypoly.hpp"

#include "fpt/errors.hpp"
#include "fpt/text.hpp"

namespace fpt {

YPoly::YPoly(std::uint32_t p, Terms terms) : p_(p) {
    PrimeField check(p);
    for (auto& [e, c] : terms) {
        if (c.p() != p) throw PreconditionError("coefficient field does not match");
        if (!c.is_zero()) terms_.emplace(e, std::move(c));
    }
}

YPoly YPoly::monomial(std::uint32_t p, const Poly& c, std::uint64_t e) { return YPoly(p, Terms{{e, c}}); }

Poly YPoly::coeff(std::uint64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Poly(p_) : it->second;
}

bool YPoly::has_constant_coeffs() const noexcept {
    for (const auto& [e, c] : terms_)
        if (!c.is_constant()) return false;
    return true;
}

YPoly YPoly::operator-() const {
    Terms out;
    for (const auto& [e, c] : terms_) out.emplace(e, -c);
    return YPoly(p_, std::move(out));
}

YPoly operator+(const YPoly& a, const YPoly& b) {
    if (a.p_ != b.p_) throw PreconditionError("y-polynomials over different fields");
    auto out = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        auto [it, inserted] = out.emplace(e, c);
        if (!inserted) it->second += c;
    }
    return YPoly(a.p_, std::move(out));
}

namespace {

std::string monomial_text(const Poly& c, const std::string& var) {
    auto ct = coefficient_text(c, false);
    if (ct.empty()) return var;
    if (ct == "-") return "-" + var;
    return ct + "*" + var;
}

std::string power_text(char v, std::uint64_t e) {
    if (e == 0) return "";
    std::string s(1, v);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += (parts[i][0] == '-' ? "" : "+") + parts[i];
    return out;
}

}  // namespace

std::string to_string(const YPoly& P) {
    std::vector<std::string> parts;
    for (auto it = P.terms().rbegin(); it != P.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        parts.push_back(e == 0 ? coefficient_text(c, true) : monomial_text(c, power_text('y', e)));
    }
    return join_terms(parts);
}

YPoly parse_ypoly(std::uint32_t p, const std::string& text) {
    YPoly::Terms terms;
    for (auto& [k, c] : parse_monomials(p, text, "y")) terms.emplace(k.first, c);
    return YPoly(p, std::move(terms));
}

std::string to_string(const BiPoly& T) {
    std::vector<std::string> parts;
    for (auto it = T.terms.rbegin(); it != T.terms.rend(); ++it) {
        const auto& [k, c] = *it;
        auto var = power_text('y', k.first);
        auto zv = power_text('z', k.second);
        if (!var.empty() && !zv.empty()) var += "*";
        var += zv;
        parts.push_back(var.empty() ? coefficient_text(c, true) : monomial_text(c, var));
    }
    return join_terms(parts);
}

BiPoly parse_bipoly(std::uint32_t p, const std::string& text) { return {p, parse_monomials(p, text, "yz")}; }

SeparableDecomposition decompose(const YPoly& P) {
    SeparableDecomposition dec{P.p(), P.constant_term(), {}};
    for (const auto& [m, c] : P.terms()) {
        if (m == 0) continue;
        std::uint64_t r = m;
        std::size_t j = 0;
        while (r % P.p() == 0) {
            r /= P.p();
            ++j;
        }
        auto& part = dec.parts[r];
        if (part.size() <= j) part.resize(j + 1, Poly(P.p()));
        part[j] = c;
    }
    return dec;
}

YPoly reassemble(const SeparableDecomposition& dec) {
    YPoly::Terms terms;
    if (!dec.a0.is_zero()) terms.emplace(0, dec.a0);
    for (const auto& [r, coeffs] : dec.parts) {
        std::uint64_t e = r;
        for (const auto& c : coeffs) {
            if (!c.is_zero()) {
                auto [it, inserted] = terms.emplace(e, c);
                if (!inserted) it->second += c;
            }
            e *= dec.p;
        }
    }
    return YPoly(dec.p, std::move(terms));
}

int digit_sum(std::uint64_t m, std::uint32_t p) noexcept {
    int s = 0;
    for (; m > 0; m /= p) s += static_cast<int>(m % p);
    return s;
}

int floor_log(std::uint64_t d, std::uint32_t p) noexcept {
    int k = 0;
    for (; d >= p; d /= p) ++k;
    return k;
}

int d_deg(const YPoly& P) {
    int best = 0;
    for (const auto& [m, c] : P.terms()) best = std::max(best, digit_sum(m, P.p()));
    return best;
}

YPoly reduce_coeffs(const YPoly& P, const ResidueCtx& ctx) {
    if (P.p() != ctx.p()) throw PreconditionError("y-polynomial and ring have different characteristic");
    YPoly::Terms out;
    for (const auto& [e, c] : P.terms()) out.emplace(e, ctx.reduce(c));
    return YPoly(P.p(), std::move(out));
}

Residue eval_mod(const YPoly& P, const Residue& y) {
    const auto& ctx = *y.ctx();
    if (P.p() != ctx.p()) throw PreconditionError("y-polynomial and ring have different characteristic");
    Residue acc = ctx.zero();
    std::uint64_t prev = P.degree();
    // Horner over the sparse exponents, descending; gaps are bridged with a power.
    for (auto it = P.terms().rbegin(); it != P.terms().rend(); ++it) {
        acc = acc * y.pow(prev - it->first) + ctx.element(it->second);
        prev = it->first;
    }
    return acc * y.pow(prev);
}

std::vector<std::uint64_t> value_table(const YPoly& P, const ResidueCtx& ctx) {
    auto R = reduce_coeffs(P, ctx);
    std::vector<std::uint64_t> out(ctx.size());
    for (std::uint64_t i = 0; i < ctx.size(); ++i) out[i] = eval_mod(R, ctx.at(i)).index();
    return out;
}

}  // namespace fpt
