#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "prodmat/errors.hpp"
#include "prodmat/power_series.hpp"

namespace prodmat {

// Recursive-descent evaluator for the series expression language:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' uint)?
//   atom   := uint | 'z' | NAME | NAME '(' expr ')' | FUNC '(' expr ')' | '(' expr ')'
//
// NAME is one of the named series C M R S T F B; a parenthesized argument
// substitutes it (the argument needs a zero constant term). FUNC is exp,
// log or sqrt. Division is valuation-aware, so (C-1)/z works; expressions
// are evaluated with spare internal order to absorb such shifts.
namespace detail {

class SeriesExprParser {
public:
    SeriesExprParser(std::string_view text, std::size_t order) : text_(text), order_(order) {}

    PowerSeries parse() {
        PowerSeries v = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return v;
    }

private:
    std::string_view text_;
    std::size_t order_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SyntaxError(line, col, msg);
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

    void expect(char c) {
        if (!eat(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    std::size_t parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected a number");
        }
        std::size_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    PowerSeries expr() {
        PowerSeries v = term();
        while (true) {
            if (eat('+')) {
                v = v + term();
            } else if (eat('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    PowerSeries term() {
        PowerSeries v = factor();
        while (true) {
            if (eat('*')) {
                v = v * factor();
            } else if (eat('/')) {
                v = div_valuation(v, factor());
            } else {
                return v;
            }
        }
    }

    PowerSeries factor() {
        if (eat('-')) {
            return -factor();
        }
        PowerSeries v = atom();
        if (eat('^')) {
            v = pow(v, parse_uint());
        }
        return v;
    }

    PowerSeries atom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return PowerSeries::constant(Rational(BigInt(parse_uint())), order_);
        }
        if (eat('(')) {
            PowerSeries v = expr();
            expect(')');
            return v;
        }
        if (c == 'z') {
            ++pos_;
            return PowerSeries::identity(order_);
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
            ++pos_;
            PowerSeries base = named_series(c, order_);  // UnknownName on bad letters
            if (eat('(')) {
                PowerSeries inner = expr();
                expect(')');
                return compose(base, inner);
            }
            return base;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            std::string word(text_.substr(start, pos_ - start));
            expect('(');
            PowerSeries inner = expr();
            expect(')');
            if (word == "exp") {
                return exp(inner);
            }
            if (word == "log") {
                return log(inner);
            }
            if (word == "sqrt") {
                return sqrt(inner);
            }
            pos_ = start;
            fail("unknown function '" + word + "'");
        }
        fail("expected a series atom");
    }
};

}  // namespace detail

// Evaluates a series expression to the given truncation order. Internally
// works with extra headroom so divisions by powers of z keep full precision.
inline PowerSeries eval_series_expr(std::string_view text, std::size_t order) {
    constexpr std::size_t kSlack = 8;
    detail::SeriesExprParser p(text, order + kSlack);
    PowerSeries v = p.parse();
    if (v.order() < order) {
        throw DomainError("expression loses more than " + std::to_string(kSlack) +
                          " orders of precision");
    }
    return v.truncated(order);
}

}  // namespace prodmat
