#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <vector>

#include "jnpoly/polynomial.hpp"

namespace jnpoly {

/// AST for the polynomial expression grammar:
///
///   expr     := term (('+'|'-') term)*
///   term     := [rational '*'] factor
///   factor   := var | '(' expr ')' | factor '*' factor
///   var      := identifier like x1, y2
///   rational := int ['/' posint]
///
/// Products associate left. In strict mode an unparenthesized a*b*c is an
/// error; by default it parses with a warning, since non-associativity makes
/// the chain genuinely ambiguous.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Variable, Product, Sum };
    Kind kind = Kind::Variable;
    std::string name;                                  // Variable
    ExprPtr left, right;                               // Product
    std::vector<std::pair<Rational, ExprPtr>> terms;   // Sum
};

struct ParseOutcome {
    ExprPtr ast;
    std::vector<std::string> warnings;
};

namespace detail {

struct Token {
    enum class Kind { Integer, Identifier, Plus, Minus, Star, Slash, LParen, RParen, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            bump(src_[pos_]);
            ++pos_;
        }
        current_ = Token{Token::Kind::End, "", line_, col_};
        if (pos_ >= src_.size()) return;
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                bump(src_[pos_]);
                ++pos_;
            }
            current_.kind = Token::Kind::Integer;
            current_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
                bump(src_[pos_]);
                ++pos_;
            }
            current_.kind = Token::Kind::Identifier;
            current_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        switch (c) {
            case '+': current_.kind = Token::Kind::Plus; break;
            case '-': current_.kind = Token::Kind::Minus; break;
            case '*': current_.kind = Token::Kind::Star; break;
            case '/': current_.kind = Token::Kind::Slash; break;
            case '(': current_.kind = Token::Kind::LParen; break;
            case ')': current_.kind = Token::Kind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        current_.text = std::string(1, c);
        bump(c);
        ++pos_;
    }

    void bump(char c) {
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

class Parser {
public:
    Parser(std::string_view src, bool strict) : lex_(src), strict_(strict) {}

    ParseOutcome run() {
        ExprPtr e = parse_expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End) {
            throw ParseError("trailing input after expression", t.line, t.column);
        }
        return {std::move(e), std::move(warnings_)};
    }

private:
    ExprPtr parse_expr() {
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Kind::Sum;
        Rational sign(1);
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            sign = Rational(-1);
        } else if (lex_.peek().kind == Token::Kind::Plus) {
            lex_.take();
        }
        node->terms.push_back(parse_term(sign));
        while (lex_.peek().kind == Token::Kind::Plus || lex_.peek().kind == Token::Kind::Minus) {
            const Token sep = lex_.take();
            node->terms.push_back(
                parse_term(sep.kind == Token::Kind::Minus ? Rational(-1) : Rational(1)));
        }
        return node;
    }

    std::pair<Rational, ExprPtr> parse_term(const Rational& sign) {
        Rational coeff = sign;
        if (lex_.peek().kind == Token::Kind::Integer) {
            coeff = sign * parse_rational();
            expect(Token::Kind::Star, "'*' after coefficient");
        }
        return {coeff, parse_factor()};
    }

    Rational parse_rational() {
        const Token num = expect(Token::Kind::Integer, "integer");
        Rational value = Rational::from_string(num.text);
        if (lex_.peek().kind == Token::Kind::Slash) {
            lex_.take();
            const Token den = expect(Token::Kind::Integer, "positive denominator");
            const Rational d = Rational::from_string(den.text);
            if (d.is_zero()) throw ParseError("zero denominator", den.line, den.column);
            value = value / d;
        }
        return value;
    }

    ExprPtr parse_factor() {
        ExprPtr node = parse_primary();
        int chained = 0;
        while (lex_.peek().kind == Token::Kind::Star) {
            const Token star = lex_.take();
            ++chained;
            if (chained >= 2) {
                if (strict_) {
                    throw ParseError(
                        "ambiguous product chain; parenthesize explicitly (non-associative)",
                        star.line, star.column);
                }
                warnings_.push_back("ambiguous product chain at line " +
                                    std::to_string(star.line) + ", column " +
                                    std::to_string(star.column) +
                                    "; associating to the left");
            }
            auto prod = std::make_shared<ExprNode>();
            prod->kind = ExprNode::Kind::Product;
            prod->left = std::move(node);
            prod->right = parse_primary();
            node = std::move(prod);
        }
        return node;
    }

    ExprPtr parse_primary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Identifier) {
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Kind::Variable;
            node->name = lex_.take().text;
            return node;
        }
        if (t.kind == Token::Kind::LParen) {
            lex_.take();
            ExprPtr inner = parse_expr();
            expect(Token::Kind::RParen, "')'");
            return inner;
        }
        throw ParseError("expected a variable or '('", t.line, t.column);
    }

    Token expect(Token::Kind kind, const std::string& what) {
        const Token& t = lex_.peek();
        if (t.kind != kind) {
            throw ParseError("expected " + what, t.line, t.column);
        }
        return lex_.take();
    }

    Lexer lex_;
    bool strict_;
    std::vector<std::string> warnings_;
};

inline void collect_names(const ExprPtr& node, std::vector<std::string>& out) {
    switch (node->kind) {
        case ExprNode::Kind::Variable:
            out.push_back(node->name);
            break;
        case ExprNode::Kind::Product:
            collect_names(node->left, out);
            collect_names(node->right, out);
            break;
        case ExprNode::Kind::Sum:
            for (const auto& [c, t] : node->terms) {
                (void)c;
                collect_names(t, out);
            }
            break;
    }
}

// Orders "x2" before "x10" and "x9" before "y1".
inline bool name_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        size_t i = 0;
        while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        unsigned long long suffix = 0;
        bool has = i < s.size();
        for (size_t j = i; j < s.size(); ++j) suffix = suffix * 10 + (s[j] - '0');
        return std::tuple<std::string, bool, unsigned long long>(s.substr(0, i), has, suffix);
    };
    auto [pa, ha, na] = split(a);
    auto [pb, hb, nb] = split(b);
    if (pa != pb) return pa < pb;
    if (na != nb) return na < nb;
    if (ha != hb) return !ha;
    return a < b;
}

inline Polynomial lower_rec(const ExprPtr& node, const std::map<std::string, int>& ids) {
    switch (node->kind) {
        case ExprNode::Kind::Variable:
            return Polynomial::variable(ids.at(node->name));
        case ExprNode::Kind::Product:
            return lower_rec(node->left, ids) * lower_rec(node->right, ids);
        case ExprNode::Kind::Sum: {
            Polynomial acc;
            for (const auto& [coeff, term] : node->terms) {
                acc = acc + coeff * lower_rec(term, ids);
            }
            return acc;
        }
    }
    throw InvariantFault("unreachable expression kind");
}

}  // namespace detail

inline ParseOutcome parse_expression(std::string_view source, bool strict = false) {
    return detail::Parser(source, strict).run();
}

/// A lowered expression: the canonical Polynomial plus the source-name bound
/// to each canonical variable (variables[i] names x_{i+1}).
struct LoweredPolynomial {
    Polynomial poly;
    std::vector<std::string> variables;
};

/// Lossless lowering: distinct variable names are sorted (letters, then
/// numeric suffix) and bound to x1..xm in that order.
inline LoweredPolynomial lower_to_polynomial(const ExprPtr& ast) {
    std::vector<std::string> names;
    detail::collect_names(ast, names);
    std::sort(names.begin(), names.end(), detail::name_less);
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::map<std::string, int> ids;
    for (size_t i = 0; i < names.size(); ++i) ids[names[i]] = static_cast<int>(i) + 1;
    LoweredPolynomial out;
    out.poly = detail::lower_rec(ast, ids);
    out.variables = std::move(names);
    return out;
}

inline LoweredPolynomial parse_polynomial(std::string_view source, bool strict = false,
                                          std::vector<std::string>* warnings = nullptr) {
    ParseOutcome outcome = parse_expression(source, strict);
    if (warnings) *warnings = outcome.warnings;
    return lower_to_polynomial(outcome.ast);
}

}  // namespace jnpoly
