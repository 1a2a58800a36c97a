#include "fpt/addpoly.hpp"

#include "fpt/errors.hpp"

namespace fpt {

AdditivePoly::AdditivePoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : field_(p), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= p;
    trim();
}

AdditivePoly AdditivePoly::frobenius(std::uint32_t p, std::size_t e) {
    std::vector<std::uint32_t> c(e + 1, 0);
    c[e] = 1;
    return AdditivePoly(p, std::move(c));
}

AdditivePoly AdditivePoly::from_ypoly(const YPoly& P) {
    std::vector<std::uint32_t> c;
    for (const auto& [m, coeff] : P.terms()) {
        if (!coeff.is_constant()) throw PreconditionError("additive polynomial coefficients must lie in F_p");
        std::uint64_t r = m;
        std::size_t j = 0;
        while (r > 1 && r % P.p() == 0) {
            r /= P.p();
            ++j;
        }
        if (m == 0 || r != 1) throw PreconditionError("not additive: exponent " + std::to_string(m) + " is not a power of p");
        if (c.size() <= j) c.resize(j + 1, 0);
        c[j] = coeff.coeff(0);
    }
    return AdditivePoly(P.p(), std::move(c));
}

void AdditivePoly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

YPoly AdditivePoly::to_ypoly() const {
    YPoly::Terms terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) terms.emplace(checked_pow(p(), static_cast<unsigned>(i)), Poly::constant(p(), coeffs_[i]));
    return YPoly(p(), std::move(terms));
}

AdditivePoly AdditivePoly::scaled(std::uint32_t c) const {
    auto out = coeffs_;
    for (auto& x : out) x = field_.mul(x, c % p());
    return AdditivePoly(p(), std::move(out));
}

AdditivePoly AdditivePoly::shifted(std::size_t e) const {
    if (is_zero()) return *this;
    std::vector<std::uint32_t> out(e, 0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return AdditivePoly(p(), std::move(out));
}

Residue AdditivePoly::apply(const Residue& x) const {
    if (x.ctx()->p() != p()) throw PreconditionError("additive polynomial and ring have different characteristic");
    Residue acc = x.ctx()->zero();
    Residue power = x;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) acc = acc + x.ctx()->element(power.rep().scaled(coeffs_[i]));
        power = power.pow(p());
    }
    return acc;
}

AdditivePoly operator+(const AdditivePoly& a, const AdditivePoly& b) {
    if (a.p() != b.p()) throw PreconditionError("additive polynomials over different fields");
    std::vector<std::uint32_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return AdditivePoly(a.p(), std::move(out));
}

AdditivePoly operator-(const AdditivePoly& a, const AdditivePoly& b) {
    return a + b.scaled(b.p() - 1);
}

std::string to_string(const AdditivePoly& a) { return to_string(a.to_ypoly()); }

AdditivePoly parse_additive(std::uint32_t p, const std::string& text) {
    return AdditivePoly::from_ypoly(parse_ypoly(p, text));
}

AdditivePoly compose(const AdditivePoly& a, const AdditivePoly& b) {
    if (a.p() != b.p()) throw PreconditionError("additive polynomials over different fields");
    if (a.is_zero() || b.is_zero()) return AdditivePoly(a.p());
    // Frobenius fixes F_p, so composition is the convolution of coefficient sequences.
    std::vector<std::uint32_t> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    const auto& F = a.field();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a.coeff(i), b.coeff(j)));
    return AdditivePoly(a.p(), std::move(out));
}

bool certificate_holds(const std::vector<AdditivePoly>& etas, const ReductionCertificate& cert) {
    if (etas.size() != cert.zetas.size() || etas.empty()) return false;
    AdditivePoly sum(etas.front().p());
    for (std::size_t i = 0; i < etas.size(); ++i) sum = sum + compose(etas[i], cert.zetas[i]);
    return sum == cert.eta;
}

namespace {

// An additive polynomial together with witnesses (w1, w2): value = eta1 o w1 + eta2 o w2.
struct Tracked {
    AdditivePoly value;
    AdditivePoly w1;
    AdditivePoly w2;
};

// big <- b*big - a*small(y^(p^e)), where a, b are the leading coefficients; the top term cancels.
void reduce_step(Tracked& big, const Tracked& small) {
    const auto e = static_cast<std::size_t>(big.value.degree_index() - small.value.degree_index());
    const auto a = big.value.lead();
    const auto b = small.value.lead();
    big.value = big.value.scaled(b) - small.value.shifted(e).scaled(a);
    big.w1 = big.w1.scaled(b) - small.w1.shifted(e).scaled(a);
    big.w2 = big.w2.scaled(b) - small.w2.shifted(e).scaled(a);
}

}  // namespace

ReductionCertificate reduce_pair(const AdditivePoly& eta1, const AdditivePoly& eta2) {
    if (eta1.p() != eta2.p()) throw PreconditionError("additive polynomials over different fields");
    const auto p = eta1.p();
    Tracked A{eta1, AdditivePoly::identity(p), AdditivePoly(p)};
    Tracked B{eta2, AdditivePoly(p), AdditivePoly::identity(p)};
    for (;;) {
        if (A.value.is_zero()) return {B.value, {B.w1, B.w2}};
        if (B.value.is_zero()) return {A.value, {A.w1, A.w2}};
        if (A.value.degree_index() >= B.value.degree_index())
            reduce_step(A, B);
        else
            reduce_step(B, A);
    }
}

ReductionCertificate reduce_family(const std::vector<AdditivePoly>& etas) {
    if (etas.empty()) throw PreconditionError("reduce_family needs at least one additive polynomial");
    ReductionCertificate acc{etas.front(), {AdditivePoly::identity(etas.front().p())}};
    for (std::size_t i = 1; i < etas.size(); ++i) {
        auto step = reduce_pair(acc.eta, etas[i]);
        for (auto& z : acc.zetas) z = compose(z, step.zetas[0]);
        acc.zetas.push_back(step.zetas[1]);
        acc.eta = step.eta;
    }
    if (!certificate_holds(etas, acc)) throw InvariantError("reduction certificate does not reproduce eta");
    return acc;
}

EquidistributionVerdict is_good_equidistribution(const YPoly& P) {
    if (P.is_constant()) throw PreconditionError("equidistribution decision needs a nonconstant polynomial");
    if (!P.has_constant_coeffs())
        throw UndecidableError("coefficients outside F_p: no decision procedure (try the separability hint)");
    auto dec = decompose(P);
    std::vector<std::uint64_t> exponents;
    std::vector<AdditivePoly> etas;
    for (const auto& [r, coeffs] : dec.parts) {
        std::vector<std::uint32_t> c;
        for (const auto& x : coeffs) c.push_back(x.coeff(0));
        exponents.push_back(r);
        etas.emplace_back(P.p(), std::move(c));
    }
    auto cert = reduce_family(etas);
    const bool good = cert.eta.degree_index() == 0;
    return {good, std::move(exponents), std::move(etas), std::move(cert)};
}

bool separable_hint(const YPoly& P) {
    if (P.is_constant()) return false;
    for (const auto& [m, c] : P.terms())
        if (m != 0 && m % P.p() == 0) return false;
    return true;
}

}  // namespace fpt
