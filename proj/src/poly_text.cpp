#include <cctype>

#include "spk/polynomial.hpp"

namespace spk {

// Canonical form: terms in the graded term order, joined with " + " / " - ".
// Each term is C, C*v1^e1*..., or v1^e1*... with unit coefficient omitted;
// "^1" is omitted and exponents may be negative ("x^-2").
std::string Polynomial::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool need_star = false;
        if (mag != 1 || m.is_unit()) {
            out += mag.str();
            need_star = true;
        }
        for (const auto& [v, e] : m.factors()) {
            if (need_star) out += "*";
            out += v.str();
            if (e != 1) {
                out += "^";
                out += std::to_string(e);
            }
            need_star = true;
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) throw ParseError("expected integer", pos);
        return Int(std::string(s.substr(start, pos - start)));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        auto head = [](char c) {
            return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
        };
        if (pos >= s.size() || !head(s[pos])) throw ParseError("expected variable name", pos);
        ++pos;
        while (pos < s.size() &&
               (head(s[pos]) || std::isdigit((unsigned char)s[pos])))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }

    int exponent() {
        skip_ws();
        bool negative = accept('-');
        Int e = integer();
        if (e > 1'000'000) throw ParseError("exponent too large", pos);
        int v = (int)e;
        return negative ? -v : v;
    }
};

// term := INT ['*' factor ('*' factor)*] | factor ('*' factor)*
// factor := IDENT ['^' ['-'] INT]
Polynomial parse_term(Cursor& cur) {
    Int coeff = 1;
    Monomial mono;
    bool saw_factor = false;
    if (std::isdigit((unsigned char)cur.peek())) {
        coeff = cur.integer();
        saw_factor = true;
        if (!cur.accept('*')) return Polynomial(std::move(mono), std::move(coeff));
        saw_factor = false;
    }
    do {
        std::string name = cur.ident();
        int e = 1;
        if (cur.accept('^')) e = cur.exponent();
        mono = mono * Monomial::single(VarName(name), e);
        saw_factor = true;
    } while (cur.accept('*'));
    if (!saw_factor) throw ParseError("expected term", cur.pos);
    return Polynomial(std::move(mono), std::move(coeff));
}

}  // namespace

Polynomial Polynomial::parse(std::string_view input) {
    Cursor cur{input};
    if (cur.eof()) throw ParseError("empty input", 0);
    Polynomial result;
    bool negate = cur.accept('-');
    for (;;) {
        Polynomial term = parse_term(cur);
        if (negate)
            result -= term;
        else
            result += term;
        if (cur.eof()) break;
        if (cur.accept('+'))
            negate = false;
        else if (cur.accept('-'))
            negate = true;
        else
            throw ParseError("expected '+' or '-'", cur.pos);
    }
    return result;
}

}  // namespace spk
