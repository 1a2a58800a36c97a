#include "fpt/text.hpp"

#include <cctype>
#include <limits>

#include "fpt/errors.hpp"

namespace fpt {

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 20;

void add_into(MonomialMap& acc, const std::pair<std::uint64_t, std::uint64_t>& key, const Poly& c) {
    auto it = acc.find(key);
    if (it == acc.end()) {
        if (!c.is_zero()) acc.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

MonomialMap multiply(const MonomialMap& a, const MonomialMap& b) {
    MonomialMap out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            if (ka.first + kb.first > kMaxExponent || ka.second + kb.second > kMaxExponent)
                throw ParseError("exponent too large");
            add_into(out, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
        }
    return out;
}

class Parser {
   public:
    Parser(std::uint32_t p, std::string_view text, std::string_view vars) : p_(p), text_(text), vars_(vars) {}

    MonomialMap parse() {
        auto result = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return result;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::uint64_t integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > std::numeric_limits<std::uint32_t>::max()) fail("integer too large");
            ++pos_;
        }
        return v;
    }

    std::uint64_t optional_exponent() {
        if (peek() != '^') return 1;
        ++pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '{') {
            ++pos_;
            auto e = integer();
            if (peek() != '}') fail("expected '}'");
            ++pos_;
            return e;
        }
        auto e = integer();
        if (e > kMaxExponent) fail("exponent too large");
        return e;
    }

    MonomialMap expression() {
        MonomialMap acc;
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        for (;;) {
            auto t = term();
            for (auto& [k, v] : t) add_into(acc, k, negate ? -v : v);
            c = peek();
            if (c != '+' && c != '-') break;
            negate = c == '-';
            ++pos_;
        }
        return acc;
    }

    static bool starts_factor(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || std::isalpha(static_cast<unsigned char>(c)); }

    MonomialMap term() {
        auto acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = multiply(acc, factor());
            } else if (starts_factor(c)) {
                acc = multiply(acc, factor());
            } else {
                break;
            }
        }
        return acc;
    }

    MonomialMap power(const MonomialMap& base, std::uint64_t e) {
        MonomialMap result{{{0, 0}, Poly::constant(p_, 1)}};
        for (std::uint64_t i = 0; i < e; ++i) result = multiply(result, base);
        return result;
    }

    MonomialMap factor() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto v = integer();
            MonomialMap m;
            add_into(m, {0, 0}, Poly::constant(p_, static_cast<std::int64_t>(v)));
            return m;
        }
        if (c == '(') {
            ++pos_;
            auto inner = expression();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            if (peek() == '^') {
                auto e = optional_exponent();
                if (e > 4096) fail("exponent on parenthesised expression too large");
                return power(inner, e);
            }
            return inner;
        }
        if (c == 't') {
            ++pos_;
            auto e = optional_exponent();
            return {{{0, 0}, Poly::monomial(p_, 1, e)}};
        }
        if (c == 'y' || c == 'z') {
            if (vars_.find(c) == std::string_view::npos) fail(std::string("variable '") + c + "' not allowed here");
            ++pos_;
            auto e = optional_exponent();
            auto key = c == 'y' ? std::pair<std::uint64_t, std::uint64_t>{e, 0} : std::pair<std::uint64_t, std::uint64_t>{0, e};
            return {{key, Poly::constant(p_, 1)}};
        }
        fail("expected a term");
    }

    std::uint32_t p_;
    std::string_view text_;
    std::string_view vars_;
    std::size_t pos_ = 0;
};

}  // namespace

MonomialMap parse_monomials(std::uint32_t p, std::string_view text, std::string_view variables) {
    PrimeField check(p);
    return Parser(p, text, variables).parse();
}

Poly parse_poly(std::uint32_t p, const std::string& text) {
    auto m = parse_monomials(p, text, "");
    if (m.empty()) return Poly(p);
    return m.begin()->second;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        auto c = f.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += 't';
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string coefficient_text(const Poly& c, bool standalone) {
    if (c.is_constant()) {
        auto v = c.field().signed_rep(c.coeff(0));
        if (standalone || (v != 1 && v != -1)) return std::to_string(v);
        return v == 1 ? "" : "-";
    }
    bool single_term = true;
    int nonzero = 0;
    for (auto x : c.coeffs()) nonzero += x != 0;
    single_term = nonzero == 1;
    return single_term ? to_string(c) : "(" + to_string(c) + ")";
}

}  // namespace fpt
