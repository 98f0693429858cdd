#include "ccx/parser.hpp"

#include "ccx/errors.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace ccx {

VarId identifier_to_var(std::string_view ident) {
    if (ident == "D") return VarId::partial();
    if (ident == "x") return VarId::bracket_lambda();
    if (ident == "y") return VarId::bracket_mu();
    if (ident.size() == 2 && ident[0] == 'x' && ident[1] >= '1' && ident[1] <= '9')
        return VarId::lambda(ident[1] - '0');
    return VarId::param(std::string(ident));
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    Rational value;   // Number
    std::string text; // Ident
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= s_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = lex_integer();
            Integer den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                advance();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError("expected digits after '/' at " + here(), line_, col_);
                den = lex_integer();
                if (den == 0) throw ParseError("zero denominator at " + here(), line_, col_);
            }
            t.kind = Tok::Number;
            t.value = Rational(num, den);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ident += s_[pos_];
                advance();
            }
            t.kind = Tok::Ident;
            t.text = std::move(ident);
            return t;
        }
        advance();
        switch (c) {
        case '+': t.kind = Tok::Plus; return t;
        case '-': t.kind = Tok::Minus; return t;
        case '*': t.kind = Tok::Star; return t;
        case '^': t.kind = Tok::Caret; return t;
        case '(': t.kind = Tok::LParen; return t;
        case ')': t.kind = Tok::RParen; return t;
        default:
            throw ParseError(std::string("unexpected character '") + c + "' at " +
                                 std::to_string(t.line) + ":" + std::to_string(t.col),
                             t.line, t.col);
        }
    }

private:
    void advance() {
        if (pos_ < s_.size()) {
            if (s_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
    Integer lex_integer() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits += s_[pos_];
            advance();
        }
        return Integer(digits);
    }
    std::string here() const { return std::to_string(line_) + ":" + std::to_string(col_); }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view s) : lex_(s) { shift(); }

    Polynomial parse() {
        Polynomial p = expr();
        if (cur_.kind != Tok::End)
            throw ParseError("unexpected trailing input at " + at(cur_), cur_.line, cur_.col);
        return p;
    }

private:
    void shift() {
        prev_ = cur_;
        cur_ = lex_.next();
    }
    static std::string at(const Token& t) {
        return std::to_string(t.line) + ":" + std::to_string(t.col);
    }

    Polynomial expr() {
        bool neg = false;
        if (cur_.kind == Tok::Minus) {
            neg = true;
            shift();
        }
        Polynomial p = term();
        if (neg) p = -p;
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            shift();
            Polynomial q = term();
            if (minus)
                p -= q;
            else
                p += q;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (cur_.kind == Tok::Star) {
            shift();
            p *= factor();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial p = atom();
        if (cur_.kind == Tok::Caret) {
            shift();
            if (cur_.kind != Tok::Number || denominator(cur_.value) != 1)
                throw ParseError("expected integer exponent at " + at(cur_), cur_.line, cur_.col);
            Integer e = numerator(cur_.value);
            if (e < 0 || e > 64)
                throw ParseError("exponent out of range at " + at(cur_), cur_.line, cur_.col);
            shift();
            p = p.pow(static_cast<int>(e));
        }
        return p;
    }

    Polynomial atom() {
        switch (cur_.kind) {
        case Tok::Number: {
            Polynomial p{cur_.value};
            shift();
            return p;
        }
        case Tok::Ident: {
            Polynomial p = Polynomial::variable(identifier_to_var(cur_.text));
            shift();
            return p;
        }
        case Tok::LParen: {
            shift();
            Polynomial p = expr();
            if (cur_.kind != Tok::RParen)
                throw ParseError("unbalanced parenthesis at " + at(prev_), prev_.line, prev_.col);
            shift();
            return p;
        }
        case Tok::Minus: {
            shift();
            return -factor();
        }
        default:
            throw ParseError("expected a value at " + at(cur_), cur_.line, cur_.col);
        }
    }

    Lexer lex_;
    Token cur_;
    Token prev_;
};

} // namespace

Polynomial parse_polynomial(std::string_view text) {
    return Parser(text).parse();
}

} // namespace ccx
