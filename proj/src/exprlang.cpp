#include "qlt/exprlang.hpp"

#include "qlt/errors.hpp"

#include <cctype>
#include <sstream>

namespace qlt {

namespace {

struct Token {
    enum Kind { Ident, Integer, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };
    Kind kind = End;
    std::string text;
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        current_.offset = pos_;
        if (pos_ >= src_.size()) {
            current_ = {Token::End, "", pos_};
            return;
        }
        char ch = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
            }
            current_ = {Token::Ident, src_.substr(start, pos_ - start), start};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
            }
            current_ = {Token::Integer, src_.substr(start, pos_ - start), start};
            return;
        }
        Token::Kind kind;
        switch (ch) {
        case '+': kind = Token::Plus; break;
        case '-': kind = Token::Minus; break;
        case '*': kind = Token::Star; break;
        case '/': kind = Token::Slash; break;
        case '^': kind = Token::Caret; break;
        case '(': kind = Token::LParen; break;
        case ')': kind = Token::RParen; break;
        case ',': kind = Token::Comma; break;
        default:
            throw parse_error(std::string("unexpected character '") + ch + "'", pos_);
        }
        current_ = {kind, src_.substr(pos_, 1), pos_};
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    Parser(const std::string& src, const AlgebraSpec& spec) : lex_(src), spec_(spec) {}

    OpExpr parse_all() {
        OpExpr e = parse_expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::End) {
            throw parse_error("unexpected trailing input '" + t.text + "'", t.offset);
        }
        return e;
    }

private:
    OpExpr parse_expr() {
        bool negate = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            negate = true;
        }
        OpExpr e = parse_term();
        if (negate) {
            e = -e;
        }
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.take().kind == Token::Minus;
            OpExpr rhs = parse_term();
            e = minus ? e - rhs : e + rhs;
        }
        return e;
    }

    OpExpr parse_term() {
        OpExpr e = parse_factor();
        while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
            Token op = lex_.take();
            OpExpr rhs = parse_factor();
            if (op.kind == Token::Star) {
                e = e * rhs;
            } else {
                e = e.scaled(scalar_inverse_of(rhs, op.offset));
            }
        }
        return e;
    }

    OpExpr parse_factor() {
        OpExpr atom = parse_atom();
        if (lex_.peek().kind != Token::Caret) {
            return atom;
        }
        Token caret = lex_.take();
        long long exp = parse_signed_int();
        return power(atom, exp, caret.offset);
    }

    long long parse_signed_int() {
        long long sign = 1;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            sign = -1;
        }
        Token t = lex_.take();
        if (t.kind != Token::Integer) {
            throw parse_error("expected integer exponent", t.offset);
        }
        return sign * std::stoll(t.text);
    }

    OpExpr parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case Token::Integer:
            return OpExpr::scalar(Scalar::from_rational(Rational(t.text)), spec_.name());
        case Token::LParen: {
            OpExpr e = parse_expr();
            expect(Token::RParen, ")");
            return e;
        }
        case Token::Ident:
            return parse_ident(t);
        default:
            throw parse_error("unexpected token '" + t.text + "'", t.offset);
        }
    }

    OpExpr parse_ident(const Token& t) {
        if (t.text == "comm" || t.text == "acomm" || t.text == "sym") {
            expect(Token::LParen, "(");
            OpExpr a = parse_expr();
            expect(Token::Comma, ",");
            OpExpr b = parse_expr();
            expect(Token::RParen, ")");
            BracketKind kind = t.text == "comm"    ? BracketKind::Commutator
                               : t.text == "acomm" ? BracketKind::Anticommutator
                                                   : BracketKind::Symmetrized;
            return brackets(a, b, kind, spec_);
        }
        if (t.text == "i") {
            return OpExpr::scalar(Scalar::imaginary_unit(), spec_.name());
        }
        if (t.text == "hbar") {
            return OpExpr::scalar(Scalar::hbar(), spec_.name());
        }
        if (t.text == "c") {
            return OpExpr::scalar(Scalar::c(), spec_.name());
        }
        if (t.text == "m") {
            return OpExpr::scalar(Scalar::mass(), spec_.name());
        }
        int gen = spec_.generator_index(t.text);
        if (gen < 0) {
            throw parse_error("unknown generator '" + t.text + "' for algebra '" +
                                  spec_.name() + "'",
                              t.offset);
        }
        return OpExpr::word(OpWord::generator(gen), Scalar::one(), spec_.name());
    }

    // atom ^ exp. Positive exponents multiply out formally; negative exponents
    // require an invertible generator or an invertible scalar.
    OpExpr power(const OpExpr& base, long long exp, std::size_t offset) {
        if (exp == 0) {
            return OpExpr::scalar(Scalar::one(), spec_.name());
        }
        if (exp > 0) {
            OpExpr out = base;
            for (long long k = 1; k < exp; ++k) {
                out = out * base;
            }
            return out;
        }
        if (base.terms().size() == 1) {
            const auto& [w, s] = *base.terms().begin();
            if (w.empty()) {
                Scalar inv = invertible_scalar(base, offset).inverse();
                OpExpr out = OpExpr::scalar(Scalar::one(), spec_.name());
                for (long long k = 0; k < -exp; ++k) {
                    out = out.scaled(inv);
                }
                return out;
            }
            if (w.factors().size() == 1 && s == Scalar::one()) {
                const OpFactor& f = w.factors().front();
                if (!spec_.generator(f.gen).invertible) {
                    throw parse_error("negative exponent on non-invertible generator '" +
                                          spec_.generator(f.gen).name + "'",
                                      offset);
                }
                return OpExpr::word(OpWord::generator(f.gen, static_cast<int>(f.power * exp)),
                                    Scalar::one(), spec_.name());
            }
        }
        throw parse_error("negative exponent requires an invertible generator or scalar",
                          offset);
    }

    Scalar invertible_scalar(const OpExpr& e, std::size_t offset) {
        if (e.terms().size() == 1) {
            const auto& [w, s] = *e.terms().begin();
            if (w.empty() && s.is_invertible()) {
                return s;
            }
        }
        throw parse_error("divisor must be an invertible scalar (single unit monomial)",
                          offset);
    }

    Scalar scalar_inverse_of(const OpExpr& e, std::size_t offset) {
        return invertible_scalar(e, offset).inverse();
    }

    void expect(Token::Kind kind, const char* what) {
        Token t = lex_.take();
        if (t.kind != kind) {
            throw parse_error(std::string("expected '") + what + "', got '" + t.text + "'",
                              t.offset);
        }
    }

    Lexer lex_;
    const AlgebraSpec& spec_;
};

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1) {
        os << "/" << boost::multiprecision::denominator(q);
    }
    return os.str();
}

void append_unit(std::vector<std::string>& parts, const char* name, int exp) {
    if (exp == 0) {
        return;
    }
    if (exp == 1) {
        parts.emplace_back(name);
    } else {
        parts.push_back(std::string(name) + "^" + std::to_string(exp));
    }
}

} // namespace

OpExpr parse(const std::string& text, const AlgebraSpec& spec) {
    return Parser(text, spec).parse_all();
}

std::string render(const OpExpr& e, const AlgebraSpec& spec) {
    if (e.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [word, scalar] : e.terms()) {
        for (const auto& [unit, g] : scalar.terms()) {
            std::vector<std::string> parts;
            bool negative = false;
            if (g.im == 0) {
                negative = g.re < 0;
                Rational mag = negative ? Rational(-g.re) : g.re;
                if (mag != 1) {
                    parts.push_back(rational_str(mag));
                }
            } else if (g.re == 0) {
                negative = g.im < 0;
                Rational mag = negative ? Rational(-g.im) : g.im;
                if (mag != 1) {
                    parts.push_back(rational_str(mag));
                }
                parts.emplace_back("i");
            } else {
                std::string s = "(" + rational_str(g.re);
                s += g.im < 0 ? "-" : "+";
                Rational mag = g.im < 0 ? Rational(-g.im) : g.im;
                if (mag != 1) {
                    s += rational_str(mag) + "*";
                }
                s += "i)";
                parts.push_back(std::move(s));
            }
            append_unit(parts, "hbar", unit.hbar);
            append_unit(parts, "c", unit.c);
            append_unit(parts, "m", unit.m);
            for (const auto& f : word.factors()) {
                append_unit(parts, spec.generator(f.gen).name.c_str(), f.power);
            }
            if (parts.empty()) {
                parts.emplace_back("1");
            }

            if (first) {
                if (negative) {
                    out += "-";
                }
                first = false;
            } else {
                out += negative ? " - " : " + ";
            }
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i > 0) {
                    out += "*";
                }
                out += parts[i];
            }
        }
    }
    return out;
}

} // namespace qlt
