#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "polyldc/monoidal.hpp"
#include "polyldc/closure.hpp"

namespace polyldc {

/// Abstract syntax for the expression language over polynomials.
///
/// Grammar (whitespace insignificant):
///   expr     := 'let' IDENT '=' expr 'in' expr | tri
///   tri      := tens ('<|' tens)*            left associative
///   tens     := atom ('@' atom)*             left associative, binds tighter
///   atom     := literal | IDENT | 'lin' '(' NUM ')' | 'rep' '(' NUM ')'
///             | 'close' '(' expr ',' expr ')' | 'coclose' '(' expr ',' expr ')'
///             | '(' expr ')'
///   literal  := monomial ('+' monomial)*     '+' only joins monomials
///   monomial := NUM | [NUM] 'y' ['^' NUM]
struct Expr {
    enum class Kind { Literal, Var, Let, Tensor, Subst, Close, Coclose };
    Kind kind = Kind::Literal;
    Polynomial literal;
    std::string name;  // Var, Let
    std::vector<Expr> children;
    int line = 1, column = 1;
};

namespace detail {

struct Token {
    enum class Kind { Number, Ident, Y, Plus, Caret, At, Tri, LParen, RParen, Comma, Equals, End };
    Kind kind;
    u64 number = 0;
    std::string text;
    int line = 1, column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r')) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        current_ = Token{Token::Kind::End, 0, "", line_, col_};
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        if (c >= '0' && c <= '9') {
            u64 value = 0;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
                value = checked_add(checked_mul(value, 10), text_[pos_] - '0');
                ++pos_;
                ++col_;
            }
            current_.kind = Token::Kind::Number;
            current_.number = value;
            return;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                word += text_[pos_];
                ++pos_;
                ++col_;
            }
            if (word == "y") {
                current_.kind = Token::Kind::Y;
            } else {
                current_.kind = Token::Kind::Ident;
                current_.text = word;
            }
            return;
        }
        switch (c) {
            case '+': current_.kind = Token::Kind::Plus; break;
            case '^': current_.kind = Token::Kind::Caret; break;
            case '@': current_.kind = Token::Kind::At; break;
            case '(': current_.kind = Token::Kind::LParen; break;
            case ')': current_.kind = Token::Kind::RParen; break;
            case ',': current_.kind = Token::Kind::Comma; break;
            case '=': current_.kind = Token::Kind::Equals; break;
            case '<':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '|') {
                    current_.kind = Token::Kind::Tri;
                    ++pos_;
                    ++col_;
                    break;
                }
                throw ParseError("unexpected '<'", line_, col_, {"<|"});
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_,
                                 {"expression"});
        }
        ++pos_;
        ++col_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token current_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Expr parse() {
        Expr e = expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    [[noreturn]] void fail(const Token& t, std::vector<std::string> expected) {
        std::string got = t.kind == Token::Kind::End ? "end of input" : describe(t);
        std::string wanted;
        for (const auto& e : expected) wanted += (wanted.empty() ? "" : ", ") + e;
        throw ParseError("expected " + wanted + ", got " + got, t.line, t.column,
                         std::move(expected));
    }

    static std::string describe(const Token& t) {
        switch (t.kind) {
            case Token::Kind::Number: return "number " + std::to_string(t.number);
            case Token::Kind::Ident: return "identifier '" + t.text + "'";
            case Token::Kind::Y: return "'y'";
            case Token::Kind::Plus: return "'+'";
            case Token::Kind::Caret: return "'^'";
            case Token::Kind::At: return "'@'";
            case Token::Kind::Tri: return "'<|'";
            case Token::Kind::LParen: return "'('";
            case Token::Kind::RParen: return "')'";
            case Token::Kind::Comma: return "','";
            case Token::Kind::Equals: return "'='";
            case Token::Kind::End: return "end of input";
        }
        return "token";
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (lex_.peek().kind != kind) fail(lex_.peek(), {what});
        return lex_.take();
    }

    Expr expr() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Ident && t.text == "let") {
            Expr node;
            node.kind = Expr::Kind::Let;
            node.line = t.line;
            node.column = t.column;
            lex_.take();
            Token name = expect(Token::Kind::Ident, "identifier");
            node.name = name.text;
            expect(Token::Kind::Equals, "'='");
            node.children.push_back(expr());
            Token in = expect(Token::Kind::Ident, "'in'");
            if (in.text != "in") fail(in, {"'in'"});
            node.children.push_back(expr());
            return node;
        }
        return tri();
    }

    Expr tri() {
        Expr left = tens();
        while (lex_.peek().kind == Token::Kind::Tri) {
            Token op = lex_.take();
            Expr node;
            node.kind = Expr::Kind::Subst;
            node.line = op.line;
            node.column = op.column;
            node.children.push_back(std::move(left));
            node.children.push_back(tens());
            left = std::move(node);
        }
        return left;
    }

    Expr tens() {
        Expr left = atom();
        while (lex_.peek().kind == Token::Kind::At) {
            Token op = lex_.take();
            Expr node;
            node.kind = Expr::Kind::Tensor;
            node.line = op.line;
            node.column = op.column;
            node.children.push_back(std::move(left));
            node.children.push_back(atom());
            left = std::move(node);
        }
        return left;
    }

    Expr atom() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::Number:
            case Token::Kind::Y:
                return literal();
            case Token::Kind::LParen: {
                lex_.take();
                Expr inner = expr();
                expect(Token::Kind::RParen, "')'");
                return inner;
            }
            case Token::Kind::Ident: {
                if (t.text == "lin" || t.text == "rep") {
                    lex_.take();
                    expect(Token::Kind::LParen, "'('");
                    Token n = expect(Token::Kind::Number, "number");
                    expect(Token::Kind::RParen, "')'");
                    Expr node;
                    node.kind = Expr::Kind::Literal;
                    node.literal = t.text == "lin" ? linear(n.number) : representable(n.number);
                    node.line = t.line;
                    node.column = t.column;
                    return node;
                }
                if (t.text == "close" || t.text == "coclose") {
                    lex_.take();
                    expect(Token::Kind::LParen, "'('");
                    Expr node;
                    node.kind = t.text == "close" ? Expr::Kind::Close : Expr::Kind::Coclose;
                    node.line = t.line;
                    node.column = t.column;
                    node.children.push_back(expr());
                    expect(Token::Kind::Comma, "','");
                    node.children.push_back(expr());
                    expect(Token::Kind::RParen, "')'");
                    return node;
                }
                if (t.text == "let" || t.text == "in") fail(t, {"expression"});
                lex_.take();
                Expr node;
                node.kind = Expr::Kind::Var;
                node.name = t.text;
                node.line = t.line;
                node.column = t.column;
                return node;
            }
            default:
                fail(t, {"polynomial literal", "identifier", "'('"});
        }
    }

    /// One monomial: NUM | [NUM] y [^ NUM]; appends its positions.
    void monomial(std::vector<u64>& cards) {
        const Token t = lex_.peek();
        u64 count = 1;
        bool have_count = false;
        if (t.kind == Token::Kind::Number) {
            lex_.take();
            count = t.number;
            have_count = true;
        }
        if (lex_.peek().kind == Token::Kind::Y) {
            lex_.take();
            u64 exponent = 1;
            if (lex_.peek().kind == Token::Kind::Caret) {
                lex_.take();
                Token e = expect(Token::Kind::Number, "exponent");
                exponent = e.number;
            }
            guard_cap(checked_add(cards.size(), count), "polynomial literal positions");
            for (u64 i = 0; i < count; ++i) cards.push_back(exponent);
            return;
        }
        if (!have_count) fail(lex_.peek(), {"number", "'y'"});
        // bare number: that many directionless positions
        guard_cap(checked_add(cards.size(), count), "polynomial literal positions");
        for (u64 i = 0; i < count; ++i) cards.push_back(0);
    }

    Expr literal() {
        Expr node;
        node.kind = Expr::Kind::Literal;
        node.line = lex_.peek().line;
        node.column = lex_.peek().column;
        std::vector<u64> cards;
        monomial(cards);
        while (lex_.peek().kind == Token::Kind::Plus) {
            lex_.take();
            monomial(cards);
        }
        node.literal = Polynomial(std::move(cards));
        return node;
    }

    Lexer lex_;
};

}  // namespace detail

inline Expr parse_expr(const std::string& text) { return detail::Parser(text).parse(); }

inline Polynomial eval_expr(const Expr& e, std::map<std::string, Polynomial> env = {}) {
    switch (e.kind) {
        case Expr::Kind::Literal: return e.literal;
        case Expr::Kind::Var: {
            auto it = env.find(e.name);
            if (it == env.end())
                throw ParseError("unbound identifier '" + e.name + "'", e.line, e.column,
                                 {"bound identifier"});
            return it->second;
        }
        case Expr::Kind::Let: {
            Polynomial bound = eval_expr(e.children[0], env);
            env[e.name] = std::move(bound);
            return eval_expr(e.children[1], std::move(env));
        }
        case Expr::Kind::Tensor:
            return tensor(eval_expr(e.children[0], env), eval_expr(e.children[1], env));
        case Expr::Kind::Subst:
            return substitute(eval_expr(e.children[0], env), eval_expr(e.children[1], env));
        case Expr::Kind::Close:
            return close(eval_expr(e.children[0], env), eval_expr(e.children[1], env));
        case Expr::Kind::Coclose:
            return coclose(eval_expr(e.children[0], env), eval_expr(e.children[1], env));
    }
    throw ParseError("malformed expression tree", e.line, e.column, {});
}

/// Parse and evaluate in one step.
inline Polynomial parse_polynomial(const std::string& text) {
    return eval_expr(parse_expr(text));
}

}  // namespace polyldc
