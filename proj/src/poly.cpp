#include "fpt/poly.hpp"

#include <algorithm>

#include "fpt/errors.hpp"

namespace fpt {

Poly::Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : field_(p), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= p;
    normalize();
}

Poly Poly::from_ints(std::uint32_t p, std::span<const std::int64_t> coeffs) {
    Poly f(p);
    f.coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) f.coeffs_.push_back(f.field_.reduce(c));
    f.normalize();
    return f;
}

Poly Poly::constant(std::uint32_t p, std::int64_t c) { return monomial(p, c, 0); }

Poly Poly::monomial(std::uint32_t p, std::int64_t c, std::size_t degree) {
    Poly f(p);
    auto v = f.field_.reduce(c);
    if (v == 0) return f;
    f.coeffs_.assign(degree + 1, 0);
    f.coeffs_[degree] = v;
    return f;
}

void Poly::normalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t Poly::norm() const { return is_zero() ? 0 : checked_pow(p(), static_cast<unsigned>(degree())); }

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(lead()));
}

Poly Poly::scaled(std::uint32_t c) const {
    Poly r(*this);
    c %= p();
    for (auto& x : r.coeffs_) x = field_.mul(x, c);
    r.normalize();
    return r;
}

Poly Poly::derivative() const {
    Poly r(p());
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_[i - 1] = field_.mul(coeffs_[i], static_cast<std::uint32_t>(i % p()));
    r.normalize();
    return r;
}

std::uint32_t Poly::eval(std::uint32_t x) const noexcept {
    std::uint32_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& x : r.coeffs_) x = field_.neg(x);
    return r;
}

void require_same_field(const Poly& a, const Poly& b) {
    if (a.p() != b.p())
        throw PreconditionError("mismatched coefficient fields F_" + std::to_string(a.p()) + " and F_" +
                                std::to_string(b.p()));
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_field(*this, rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_field(*this, rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    require_same_field(*this, rhs);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    // Accumulate unreduced products; p^2 * len stays well inside 64 bits for p < 2^16.
    std::vector<std::uint64_t> acc(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            acc[i + j] += static_cast<std::uint64_t>(coeffs_[i]) * rhs.coeffs_[j];
    }
    coeffs_.resize(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) coeffs_[k] = static_cast<std::uint32_t>(acc[k] % p());
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (int i = a.degree(); i >= 0; --i)
        if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    const auto& F = a.field();
    const auto inv_lead = F.inv(b.lead());
    const int db = b.degree();
    std::vector<std::uint32_t> rem(a.coeffs().begin(), a.coeffs().end());
    if (a.degree() < db) return {Poly(a.p()), a};
    std::vector<std::uint32_t> quot(a.degree() - db + 1, 0);
    const auto bc = b.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        auto c = rem[i];
        if (c == 0) continue;
        c = F.mul(c, inv_lead);
        quot[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, bc[j]));
    }
    rem.resize(db);
    return {Poly(a.p(), std::move(quot)), Poly(a.p(), std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly result = Poly::constant(base.p(), 1) % m;
    Poly b = base % m;
    while (e) {
        if (e & 1) result = mulmod(result, b, m);
        e >>= 1;
        if (e) b = mulmod(b, b, m);
    }
    return result;
}

int FactorProfile::total_degree() const {
    int s = 0;
    for (auto [e, mult] : degree_multiset) s += e * mult;
    return s;
}

namespace {

void require_monic_nonconstant(const Poly& f, const char* what) {
    if (f.degree() < 1) throw PreconditionError(std::string(what) + ": modulus must be nonconstant");
    if (!f.is_monic()) throw PreconditionError(std::string(what) + ": modulus must be monic");
}

// f has only exponents divisible by p; return g with g^p = f (Frobenius fixes F_p).
Poly pth_root(const Poly& f) {
    const auto p = f.p();
    std::vector<std::uint32_t> c(f.degree() / p + 1, 0);
    for (int i = 0; i <= f.degree(); i += p) c[i / p] = f.coeff(i);
    return Poly(p, std::move(c));
}

// Count irreducible factors of each degree of a monic squarefree g.
void distinct_degree_split(Poly g, int multiplicity, std::map<int, int>& out) {
    const auto p = g.p();
    const Poly t = Poly::t(p);
    Poly h = t % g;
    for (int e = 1; g.degree() >= 2 * e; ++e) {
        h = powmod(h, p, g);
        Poly d = gcd(g, h - t);
        if (d.degree() > 0) {
            out[e] += multiplicity * (d.degree() / e);
            g = g / d;
            h = h % g;
        }
    }
    if (g.degree() > 0) out[g.degree()] += multiplicity;
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    if (f.degree() < 1) return {};
    std::vector<std::pair<Poly, int>> out;
    const auto p = f.p();
    Poly monic = f.monic();
    Poly c = gcd(monic, monic.derivative());
    Poly w = monic / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_decomposition(pth_root(c))) out.emplace_back(g, m * static_cast<int>(p));
    }
    return out;
}

FactorProfile distinct_degree_profile(const Poly& f) {
    require_monic_nonconstant(f, "distinct_degree_profile");
    FactorProfile profile{f, {}};
    for (auto& [g, m] : squarefree_decomposition(f)) distinct_degree_split(g, m, profile.degree_multiset);
    return profile;
}

std::uint64_t lpf(const Poly& f) {
    auto profile = distinct_degree_profile(f);
    return checked_pow(f.p(), static_cast<unsigned>(profile.degree_multiset.begin()->first));
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw PreconditionError("is_irreducible: constant input");
    auto profile = distinct_degree_profile(f.monic());
    return profile.degree_multiset.size() == 1 && profile.degree_multiset.begin()->first == f.degree() &&
           profile.degree_multiset.begin()->second == 1;
}

Poly least_irreducible_factor(const Poly& f) {
    require_monic_nonconstant(f, "least_irreducible_factor");
    const int e = distinct_degree_profile(f).degree_multiset.begin()->first;
    for (auto candidate : enumerate_monic(f.p(), e))
        if ((f % candidate).is_zero()) return candidate;
    throw InvariantError("no factor found in the least degree reported by the profile");
}

MonicRange::MonicRange(std::uint32_t p, int degree) : p_(p), degree_(degree) {
    if (degree < 0) throw PreconditionError("enumerate_monic: negative degree");
    PrimeField check(p);
    count_ = checked_pow(p, static_cast<unsigned>(degree));
}

Poly MonicRange::at(std::uint64_t index) const {
    std::vector<std::uint32_t> c(degree_ + 1, 0);
    for (int i = 0; i < degree_; ++i) {
        c[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    c[degree_] = 1;
    return Poly(p_, std::move(c));
}

Poly poly_from_index(std::uint32_t p, std::uint64_t index) {
    std::vector<std::uint32_t> c;
    while (index) {
        c.push_back(static_cast<std::uint32_t>(index % p));
        index /= p;
    }
    return Poly(p, std::move(c));
}

std::uint64_t index_of_poly(const Poly& f) {
    std::uint64_t idx = 0;
    for (int i = f.degree(); i >= 0; --i) idx = idx * f.p() + f.coeff(i);
    return idx;
}

}  // namespace fpt
