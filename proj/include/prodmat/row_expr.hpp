#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "prodmat/errors.hpp"
#include "prodmat/rational.hpp"

namespace prodmat {

// Exact integer expressions in the row/column variables i and j:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/'|'mod') factor)*
//   factor := '-' factor | atom ('^' uint)?
//   atom   := uint | 'i' | 'j' | '(' expr ')' | '[' expr relop expr ']'
//
// '/' is exact integer division and raises NonIntegerEntry on a nonzero
// remainder; 'mod' is Euclidean (result in [0, m)); '[cond]' is an Iverson
// bracket with relop one of = == != < <= > >=.
class IntExpr {
public:
    static IntExpr parse(std::string_view text);

    BigInt eval(const BigInt& i, const BigInt& j) const;

    const std::string& text() const { return text_; }

private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    enum class Op { Const, VarI, VarJ, Add, Sub, Mul, Div, Mod, Pow, Neg, Iverson };
    enum class Rel { Eq, Ne, Lt, Le, Gt, Ge };

    struct Node {
        Op op;
        BigInt value;  // Const payload, or the Pow exponent
        NodePtr a;
        NodePtr b;
        Rel rel = Rel::Eq;
    };

    std::string text_;
    NodePtr root_;

    static BigInt eval_node(const Node& n, const BigInt& i, const BigInt& j);

    class Parser;
};

class IntExpr::Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        NodePtr n = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return n;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(1, pos_ + 1, msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) != w) {
            return false;
        }
        std::size_t after = pos_ + w.size();
        if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after]))) {
            return false;
        }
        pos_ = after;
        return true;
    }

    static NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
        return std::make_shared<Node>(Node{op, BigInt(0), std::move(a), std::move(b)});
    }

    BigInt parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected a number");
        }
        BigInt v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    NodePtr expr() {
        NodePtr n = term();
        while (true) {
            if (eat('+')) {
                n = make(Op::Add, n, term());
            } else if (peek() == '-') {
                ++pos_;
                n = make(Op::Sub, n, term());
            } else {
                return n;
            }
        }
    }

    NodePtr term() {
        NodePtr n = factor();
        while (true) {
            if (eat('*')) {
                n = make(Op::Mul, n, factor());
            } else if (eat('/')) {
                n = make(Op::Div, n, factor());
            } else if (eat_word("mod")) {
                n = make(Op::Mod, n, factor());
            } else {
                return n;
            }
        }
    }

    NodePtr factor() {
        if (eat('-')) {
            return make(Op::Neg, factor());
        }
        NodePtr n = atom();
        if (eat('^')) {
            auto p = std::make_shared<Node>(Node{Op::Pow, parse_uint(), n, nullptr});
            n = p;
        }
        return n;
    }

    Rel relop() {
        skip_ws();
        auto two = text_.substr(pos_, 2);
        if (two == "==" || two == "<=" || two == ">=" || two == "!=") {
            pos_ += 2;
            if (two == "<=") return Rel::Le;
            if (two == ">=") return Rel::Ge;
            if (two == "!=") return Rel::Ne;
            return Rel::Eq;
        }
        char c = peek();
        if (c == '=' || c == '<' || c == '>') {
            ++pos_;
            if (c == '<') return Rel::Lt;
            if (c == '>') return Rel::Gt;
            return Rel::Eq;
        }
        fail("expected a comparison operator");
    }

    NodePtr atom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = std::make_shared<Node>(Node{Op::Const, parse_uint(), nullptr, nullptr});
            return n;
        }
        if (eat('(')) {
            NodePtr n = expr();
            if (!eat(')')) {
                fail("expected ')'");
            }
            return n;
        }
        if (eat('[')) {
            NodePtr lhs = expr();
            Rel r = relop();
            NodePtr rhs = expr();
            if (!eat(']')) {
                fail("expected ']'");
            }
            return std::make_shared<Node>(Node{Op::Iverson, BigInt(0), lhs, rhs, r});
        }
        if (c == 'i') {
            ++pos_;
            return make(Op::VarI);
        }
        if (c == 'j') {
            ++pos_;
            return make(Op::VarJ);
        }
        fail("expected an integer atom");
    }
};

inline IntExpr IntExpr::parse(std::string_view text) {
    IntExpr e;
    e.text_ = std::string(text);
    e.root_ = Parser(text).parse();
    return e;
}

inline BigInt IntExpr::eval_node(const Node& n, const BigInt& i, const BigInt& j) {
    switch (n.op) {
        case Op::Const:
            return n.value;
        case Op::VarI:
            return i;
        case Op::VarJ:
            return j;
        case Op::Add:
            return eval_node(*n.a, i, j) + eval_node(*n.b, i, j);
        case Op::Sub:
            return eval_node(*n.a, i, j) - eval_node(*n.b, i, j);
        case Op::Mul:
            return eval_node(*n.a, i, j) * eval_node(*n.b, i, j);
        case Op::Div: {
            BigInt num = eval_node(*n.a, i, j);
            BigInt den = eval_node(*n.b, i, j);
            if (den == 0) {
                throw DomainError("integer division by zero");
            }
            if (num % den != 0) {
                throw NonIntegerEntry("inexact integer division: " + num.str() + "/" + den.str());
            }
            return num / den;
        }
        case Op::Mod: {
            BigInt num = eval_node(*n.a, i, j);
            BigInt den = eval_node(*n.b, i, j);
            if (den <= 0) {
                throw DomainError("mod needs a positive modulus");
            }
            BigInt r = num % den;
            return r < 0 ? BigInt(r + den) : r;
        }
        case Op::Pow: {
            BigInt base = eval_node(*n.a, i, j);
            BigInt acc = 1;
            for (BigInt k = 0; k < n.value; ++k) {
                acc *= base;
            }
            return acc;
        }
        case Op::Neg:
            return -eval_node(*n.a, i, j);
        case Op::Iverson: {
            BigInt lhs = eval_node(*n.a, i, j);
            BigInt rhs = eval_node(*n.b, i, j);
            bool v = false;
            switch (n.rel) {
                case Rel::Eq: v = lhs == rhs; break;
                case Rel::Ne: v = lhs != rhs; break;
                case Rel::Lt: v = lhs < rhs; break;
                case Rel::Le: v = lhs <= rhs; break;
                case Rel::Gt: v = lhs > rhs; break;
                case Rel::Ge: v = lhs >= rhs; break;
            }
            return BigInt(v ? 1 : 0);
        }
    }
    throw DomainError("corrupt expression node");
}

inline BigInt IntExpr::eval(const BigInt& i, const BigInt& j) const {
    if (!root_) {
        throw DomainError("evaluating an empty expression");
    }
    return eval_node(*root_, i, j);
}

}  // namespace prodmat
