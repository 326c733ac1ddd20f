#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "folsym/oneform.hpp"

namespace folsym {

namespace detail {

struct Token {
    enum Kind { Num, Ident, Sqrt, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit((unsigned char)c)) {
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            out.push_back({Token::Num, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            while (i < s.size() &&
                   (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
                ++i;
            std::string word = s.substr(start, i - start);
            out.push_back({word == "sqrt" ? Token::Sqrt : Token::Ident, word, start});
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            case '^': k = Token::Caret; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({k, s.substr(start, 1), start});
        ++i;
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

/** Scalar plus a differential part: s + p*d(vx) + q*d(vy). */
struct FormVal {
    RatFn s, p, q;

    bool has_diff() const { return !p.is_zero() || !q.is_zero(); }
};

inline const std::array<std::pair<char, char>, 4>& canonical_pairs() {
    static const std::array<std::pair<char, char>, 4> pairs{
        {{'x', 'y'}, {'z', 'w'}, {'u', 'v'}, {'s', 't'}}};
    return pairs;
}

class FormParser {
  public:
    FormParser(const std::string& text, std::optional<std::pair<std::string, std::string>> vars)
        : toks_(tokenize(text)) {
        if (vars)
            vars_ = *vars;
        else
            vars_ = infer_vars();
    }

    RatOneForm parse_form() {
        FormVal v = parse_expr();
        expect(Token::End);
        if (!v.s.is_zero())
            throw ParseError("expression has a term without a differential", 0);
        return {v.p, v.q, vars_.first, vars_.second};
    }

    RatFn parse_function() {
        FormVal v = parse_expr();
        expect(Token::End);
        if (v.has_diff()) throw ParseError("expected a function, found a differential", 0);
        return v.s;
    }

    const std::pair<std::string, std::string>& vars() const { return vars_; }

  private:
    std::pair<std::string, std::string> infer_vars() const {
        std::vector<char> letters;
        auto note = [&](char c) {
            for (char l : letters)
                if (l == c) return;
            letters.push_back(c);
        };
        for (const auto& t : toks_) {
            if (t.kind != Token::Ident) continue;
            if (t.text.size() == 1)
                note(t.text[0]);
            else if (t.text.size() == 2 && t.text[0] == 'd')
                note(t.text[1]);
            else
                throw ParseError("unknown identifier '" + t.text + "'", t.pos);
        }
        for (const auto& [a, b] : canonical_pairs()) {
            bool ok = true;
            for (char l : letters)
                if (l != a && l != b) ok = false;
            if (ok) return {std::string(1, a), std::string(1, b)};
        }
        if (letters.size() == 2) {
            char a = std::min(letters[0], letters[1]), b = std::max(letters[0], letters[1]);
            return {std::string(1, a), std::string(1, b)};
        }
        throw ParseError("cannot infer a chart from the variables used", 0);
    }

    const Token& peek() const { return toks_[idx_]; }
    Token next() { return toks_[idx_++]; }
    void expect(Token::Kind k) {
        if (peek().kind != k)
            throw ParseError("unexpected token '" + (peek().kind == Token::End
                                                         ? std::string("end of input")
                                                         : peek().text) +
                                 "'",
                             peek().pos);
        ++idx_;
    }

    FormVal parse_expr() {
        FormVal acc = parse_term();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = next().kind == Token::Minus;
            FormVal rhs = parse_term();
            if (minus) {
                acc.s = acc.s - rhs.s;
                acc.p = acc.p - rhs.p;
                acc.q = acc.q - rhs.q;
            } else {
                acc.s = acc.s + rhs.s;
                acc.p = acc.p + rhs.p;
                acc.q = acc.q + rhs.q;
            }
        }
        return acc;
    }

    FormVal parse_term() {
        FormVal acc = parse_factor();
        while (peek().kind == Token::Star || peek().kind == Token::Slash) {
            Token op = next();
            FormVal rhs = parse_factor();
            if (op.kind == Token::Star) {
                if (acc.has_diff() && rhs.has_diff())
                    throw ParseError("product of two differentials", op.pos);
                if (rhs.has_diff())
                    acc = {acc.s * rhs.s, acc.s * rhs.p, acc.s * rhs.q};
                else
                    acc = {acc.s * rhs.s, acc.p * rhs.s, acc.q * rhs.s};
            } else {
                if (rhs.has_diff()) throw ParseError("division by a differential", op.pos);
                if (rhs.s.is_zero()) throw ParseError("division by zero", op.pos);
                acc = {acc.s / rhs.s, acc.p / rhs.s, acc.q / rhs.s};
            }
        }
        return acc;
    }

    FormVal parse_factor() {
        if (peek().kind == Token::Plus) {
            next();
            return parse_factor();
        }
        if (peek().kind == Token::Minus) {
            next();
            FormVal v = parse_factor();
            return {-v.s, -v.p, -v.q};
        }
        FormVal base = parse_primary();
        if (peek().kind == Token::Caret) {
            Token op = next();
            if (base.has_diff()) throw ParseError("power of a differential", op.pos);
            int sign = 1;
            if (peek().kind == Token::Minus) {
                next();
                sign = -1;
            }
            if (peek().kind != Token::Num) throw ParseError("expected integer exponent", peek().pos);
            Token e = next();
            long v = std::stol(e.text);
            if (v > 64) throw ParseError("exponent too large", e.pos);
            base.s = base.s.pow((int)(sign * v));
        }
        return base;
    }

    FormVal parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Num: {
                next();
                return {RatFn(QuadNumber(Rational(Int(t.text)))), RatFn(), RatFn()};
            }
            case Token::Sqrt: {
                next();
                expect(Token::LParen);
                FormVal arg = parse_expr();
                expect(Token::RParen);
                if (arg.has_diff()) throw ParseError("sqrt of a differential", t.pos);
                if (!arg.s.num().is_constant() || !arg.s.den().is_constant())
                    throw ParseError("sqrt argument must be constant", t.pos);
                QuadNumber v = arg.s.eval(QuadNumber(0), QuadNumber(0));
                QuadNumber root = scalar_sqrt(v, t.pos);
                return {RatFn(root), RatFn(), RatFn()};
            }
            case Token::LParen: {
                next();
                FormVal v = parse_expr();
                expect(Token::RParen);
                return v;
            }
            case Token::Ident: {
                next();
                if (t.text == vars_.first) return {RatFn::var_x(), RatFn(), RatFn()};
                if (t.text == vars_.second) return {RatFn::var_y(), RatFn(), RatFn()};
                if (t.text == "d" + vars_.first) return {RatFn(), RatFn(1), RatFn()};
                if (t.text == "d" + vars_.second) return {RatFn(), RatFn(), RatFn(1)};
                throw ParseError("unknown identifier '" + t.text + "'", t.pos);
            }
            default:
                throw ParseError("unexpected token '" +
                                     (t.kind == Token::End ? std::string("end of input") : t.text) +
                                     "'",
                                 t.pos);
        }
    }

    static QuadNumber scalar_sqrt(const QuadNumber& v, std::size_t pos) {
        if (v.is_rational()) {
            const Rational& r = v.rational_part();
            if (r == 0) return QuadNumber(0);
            auto exact = rational_sqrt(r);
            if (exact) return QuadNumber(*exact);
            Int pq = numerator(r) * denominator(r);
            auto [f, s] = squarefree_split(pq);
            return QuadNumber(0, Rational(s, denominator(r)), f);
        }
        auto root = field_sqrt(v);
        if (!root)
            throw FieldTowerExceeded("sqrt(" + v.str() + ") needs a second extension");
        (void)pos;
        return *root;
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
    std::pair<std::string, std::string> vars_;
};

}  // namespace detail

/** Parse "p*dx + q*dy" style input; variables inferred unless given. */
inline RatOneForm parse_rational_form(
    const std::string& text,
    std::optional<std::pair<std::string, std::string>> vars = std::nullopt) {
    detail::FormParser parser(text, vars);
    return parser.parse_form();
}

/** Parse and saturate a polynomial one-form (denominators are cleared). */
inline OneForm parse_form(const std::string& text,
                          std::optional<std::pair<std::string, std::string>> vars = std::nullopt) {
    return OneForm::from_rational(parse_rational_form(text, vars));
}

/** Parse a rational function of the chart variables. */
inline RatFn parse_function(const std::string& text,
                            std::optional<std::pair<std::string, std::string>> vars = std::nullopt) {
    detail::FormParser parser(text, vars);
    return parser.parse_function();
}

/** Parse a constant such as "-3/2" or "1 + sqrt(2)". */
inline QuadNumber parse_scalar(const std::string& text) {
    detail::FormParser parser(text, std::make_pair(std::string("x"), std::string("y")));
    RatFn f = parser.parse_function();
    if (!f.num().is_constant() || !f.den().is_constant())
        throw ParseError("expected a constant", 0);
    return f.eval(QuadNumber(0), QuadNumber(0));
}

}  // namespace folsym
