#include "sexag/calc.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <vector>

#include "sexag/errors.hpp"
#include "sexag/regular.hpp"

namespace sexag {
namespace {

enum class TokenKind { number, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    TokenKind kind;
    SexValue value;    // number tokens
    std::string text;  // as written, for messages
    int column;        // 1-based byte offset
};

bool starts_with(std::string_view s, std::size_t at, std::string_view prefix) {
    return s.substr(at, prefix.size()) == prefix;
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const auto push = [&](TokenKind kind, std::size_t at, std::size_t len) {
        tokens.push_back({kind, {}, std::string(text.substr(at, len)),
                          static_cast<int>(at) + 1});
        i = at + len;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '+') { push(TokenKind::plus, i, 1); continue; }
        if (c == '-') { push(TokenKind::minus, i, 1); continue; }
        if (c == '*') { push(TokenKind::star, i, 1); continue; }
        if (c == '/') { push(TokenKind::slash, i, 1); continue; }
        if (c == '^') { push(TokenKind::caret, i, 1); continue; }
        if (c == '(') { push(TokenKind::lparen, i, 1); continue; }
        if (c == ')') { push(TokenKind::rparen, i, 1); continue; }
        if (starts_with(text, i, "−")) { push(TokenKind::minus, i, 3); continue; }
        if (starts_with(text, i, "×")) { push(TokenKind::star, i, 2); continue; }
        if (starts_with(text, i, "÷")) { push(TokenKind::slash, i, 2); continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = i;
            while (end < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[end])) ||
                    text[end] == ',' || text[end] == ';')) {
                ++end;
            }
            Token token{TokenKind::number, {}, std::string(text.substr(i, end - i)),
                        static_cast<int>(i) + 1};
            try {
                token.value = SexValue::parse(token.text);
            } catch (const parse_error& e) {
                throw parse_error(e.what(), 0, token.column + e.column() - 1);
            }
            tokens.push_back(std::move(token));
            i = end;
            continue;
        }
        throw parse_error("unexpected character in expression", 0,
                          static_cast<int>(i) + 1);
    }
    tokens.push_back({TokenKind::end, {}, "", static_cast<int>(text.size()) + 1});
    return tokens;
}

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
    enum class Op { literal, add, sub, mul, div, pow, negate };
    Op op = Op::literal;
    SexValue value;        // literal
    unsigned exponent = 0; // pow
    NodePtr lhs, rhs;
    int column = 0;        // of the operator, for diagnostics
};

class Parser {
 public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    NodePtr parse() {
        NodePtr root = sum();
        expect(TokenKind::end, "expected end of expression");
        return root;
    }

 private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    void expect(TokenKind kind, const char* message) {
        if (peek().kind != kind) throw parse_error(message, 0, peek().column);
        ++pos_;
    }

    NodePtr sum() {
        NodePtr node = product();
        while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
            const Token& op = advance();
            auto parent = std::make_unique<Node>();
            parent->op = op.kind == TokenKind::plus ? Node::Op::add : Node::Op::sub;
            parent->column = op.column;
            parent->lhs = std::move(node);
            parent->rhs = product();
            node = std::move(parent);
        }
        return node;
    }

    NodePtr product() {
        NodePtr node = factor();
        while (peek().kind == TokenKind::star || peek().kind == TokenKind::slash) {
            const Token& op = advance();
            auto parent = std::make_unique<Node>();
            parent->op = op.kind == TokenKind::star ? Node::Op::mul : Node::Op::div;
            parent->column = op.column;
            parent->lhs = std::move(node);
            parent->rhs = factor();
            node = std::move(parent);
        }
        return node;
    }

    NodePtr factor() {
        if (peek().kind == TokenKind::minus) {
            const Token& op = advance();
            auto node = std::make_unique<Node>();
            node->op = Node::Op::negate;
            node->column = op.column;
            node->lhs = factor();
            return node;
        }
        return power();
    }

    NodePtr power() {
        NodePtr node = atom();
        while (peek().kind == TokenKind::caret) {
            const Token& op = advance();
            if (peek().kind != TokenKind::number) {
                throw parse_error("the exponent must be a whole number", 0,
                                  peek().column);
            }
            const Token& exponent = advance();
            if (!exponent.value.is_integer() || exponent.value.is_negative()) {
                throw parse_error("the exponent must be a whole number", 0,
                                  exponent.column);
            }
            if (SexValue::from_int(10000) <= exponent.value) {
                throw std::domain_error("exponent too large (limit 9999)");
            }
            auto parent = std::make_unique<Node>();
            parent->op = Node::Op::pow;
            parent->column = op.column;
            parent->exponent = static_cast<unsigned>(to_uint64(exponent.value));
            parent->lhs = std::move(node);
            node = std::move(parent);
        }
        return node;
    }

    NodePtr atom() {
        if (peek().kind == TokenKind::number) {
            auto node = std::make_unique<Node>();
            node->value = advance().value;
            return node;
        }
        if (peek().kind == TokenKind::lparen) {
            ++pos_;
            NodePtr node = sum();
            expect(TokenKind::rparen, "expected \")\"");
            return node;
        }
        throw parse_error("expected a number or \"(\"", 0, peek().column);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

bool contains_division(const Node& node) {
    if (node.op == Node::Op::div) return true;
    if (node.lhs && contains_division(*node.lhs)) return true;
    return node.rhs && contains_division(*node.rhs);
}

SexValue evaluate(const Node& node) {
    switch (node.op) {
        case Node::Op::literal: return node.value;
        case Node::Op::add: return evaluate(*node.lhs) + evaluate(*node.rhs);
        case Node::Op::sub: return evaluate(*node.lhs) - evaluate(*node.rhs);
        case Node::Op::mul: return evaluate(*node.lhs) * evaluate(*node.rhs);
        case Node::Op::negate: return -evaluate(*node.lhs);
        case Node::Op::pow: return pow(evaluate(*node.lhs), node.exponent);
        case Node::Op::div: {
            const SexValue divisor = evaluate(*node.rhs);
            if (divisor.is_zero()) throw std::domain_error("division by zero");
            // Scribal discipline: dividing is multiplying by the reciprocal,
            // so the divisor must be regular.
            return evaluate(*node.lhs) * reciprocal_value(divisor.abs()) *
                   (divisor.is_negative() ? SexValue::from_int(-1)
                                          : SexValue::from_int(1));
        }
    }
    throw std::domain_error("unreachable");
}

}  // namespace

std::string CalcResult::str() const {
    if (remainder) return value.str() + " r " + remainder->str();
    return value.str();
}

CalcResult evaluate_expression(std::string_view text, bool divmod) {
    const NodePtr root = Parser(lex(text)).parse();
    CalcResult result;
    if (divmod) {
        if (root->op != Node::Op::div) {
            throw parse_error(
                "remainder division expects one top-level \"/\"", 0, 1);
        }
        if (contains_division(*root->lhs) || contains_division(*root->rhs)) {
            throw parse_error(
                "remainder division allows no nested \"/\"", 0, root->column);
        }
        const SexValue dividend = evaluate(*root->lhs);
        const SexValue divisor = evaluate(*root->rhs);
        const DivModResult dm = sexag::divmod(dividend, divisor);
        result.value = dm.quotient;
        result.remainder = dm.remainder;
        return result;
    }
    result.value = evaluate(*root);
    return result;
}

}  // namespace sexag
