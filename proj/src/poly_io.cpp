#include "fplab/poly_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <stdexcept>

namespace fplab {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t m) : s_(text), m_(m) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " +
                                    what + " in \"" + std::string(s_) + "\"");
    }

    std::uint64_t natural() {
        skip_ws();
        std::uint64_t v = 0;
        auto first = s_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
        if (ec == std::errc::result_out_of_range) fail("number too large");
        if (ec != std::errc() || ptr == first) fail("expected a number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    std::size_t variable() {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != 'x') fail("expected a variable");
        ++pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::uint64_t idx = 0;
            auto first = s_.data() + pos_;
            auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), idx);
            if (ec != std::errc()) fail("bad variable index");
            pos_ += static_cast<std::size_t>(ptr - first);
            if (idx < 1 || idx > m_) fail("variable x" + std::to_string(idx) + " out of range");
            return static_cast<std::size_t>(idx - 1);
        }
        if (m_ != 1) fail("bare x is only allowed for univariate polynomials");
        return 0;
    }

    void factors(Multiindex& e) {
        while (true) {
            std::size_t k = variable();
            std::uint64_t power = 1;
            if (accept('^')) power = natural();
            if (power > UINT32_MAX - e[k]) fail("exponent too large");
            e[k] += static_cast<Multiindex::value_type>(power);
            if (!accept('*')) return;
        }
    }

    std::string_view s_;
    std::size_t m_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PrimeField& field, std::size_t num_vars) {
    Parser p(text, num_vars);
    Polynomial result(field, num_vars);
    if (p.at_end()) p.fail("empty input");
    bool negative = false;
    if (p.accept('-')) {
        negative = true;
    } else {
        p.accept('+');
    }
    while (true) {
        Multiindex e(num_vars);
        FieldElement c = field.one();
        char c0 = p.peek();
        if (std::isdigit(static_cast<unsigned char>(c0))) {
            std::uint64_t v = p.natural();
            c = FieldElement{static_cast<std::uint32_t>(v % field.modulus())};
            if (p.accept('*')) p.factors(e);
        } else if (c0 == 'x') {
            p.factors(e);
        } else {
            p.fail("expected a term");
        }
        result.add_term(e, negative ? field.neg(c) : c);
        if (p.at_end()) break;
        if (p.accept('+')) {
            negative = false;
        } else if (p.accept('-')) {
            negative = true;
        } else {
            p.fail("expected '+' or '-'");
        }
    }
    return result;
}

std::string format_monomial(const Multiindex& i) {
    std::string s;
    for (std::size_t k = 0; k < i.size(); ++k) {
        if (i[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(k + 1);
        if (i[k] > 1) s += "^" + std::to_string(i[k]);
    }
    return s.empty() ? "1" : s;
}

Multiindex parse_monomial(std::string_view text, std::size_t num_vars) {
    Parser p(text, num_vars);
    Multiindex e(num_vars);
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
        if (p.natural() != 1) p.fail("the only constant monomial is 1");
    } else {
        p.factors(e);
    }
    if (!p.at_end()) p.fail("trailing characters after monomial");
    return e;
}

std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& e : f.support_descending(MonomialOrdering::grlex(f.num_vars()))) {
        FieldElement c = f.coefficient(e);
        std::string term;
        if (e.is_zero()) {
            term = std::to_string(c.value);
        } else if (c.value == 1) {
            term = format_monomial(e);
        } else {
            term = std::to_string(c.value) + "*" + format_monomial(e);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

}  // namespace fplab
