#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "prodmat/errors.hpp"
#include "prodmat/rational.hpp"

namespace prodmat {

// Dense univariate polynomial over the rationals, coeffs[i] = coefficient of
// the degree-i term. The zero polynomial is the empty list; otherwise the
// leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;

    Polynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }

    explicit Polynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    static Polynomial constant(const Rational& c) {
        return Polynomial(std::vector<Rational>{c});
    }

    static Polynomial variable() {
        return Polynomial{Rational(0), Rational(1)};
    }

    bool is_zero() const { return coeffs_.empty(); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    Rational leading() const {
        if (is_zero()) {
            throw DomainError("zero polynomial has no leading coefficient");
        }
        return coeffs_.back();
    }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x + coeffs_[i];
        }
        return acc;
    }

    Polynomial operator-() const {
        std::vector<Rational> cs(coeffs_);
        for (auto& c : cs) {
            c = -c;
        }
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < cs.size(); ++i) {
            cs[i] = a.coeff(i) + b.coeff(i);
        }
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return Polynomial();
        }
        std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        std::vector<Rational> cs(p.coeffs_);
        for (auto& c : cs) {
            c *= s;
        }
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

    friend Polynomial operator/(const Polynomial& p, const Rational& s) {
        if (s == 0) {
            throw DomainError("polynomial division by zero scalar");
        }
        return (Rational(1) / s) * p;
    }

    bool operator==(const Polynomial&) const = default;

    // this * x^k
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) {
            return Polynomial();
        }
        std::vector<Rational> cs(k, Rational(0));
        cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(cs));
    }

    Polynomial monic() const {
        if (is_zero()) {
            throw DomainError("cannot normalize the zero polynomial");
        }
        return *this / leading();
    }

    // Quotient and remainder with deg(r) < deg(b); b must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) {
            throw DomainError("polynomial division by zero");
        }
        std::vector<Rational> rem(a.coeffs_);
        std::vector<Rational> quo;
        const int db = b.degree();
        if (a.degree() >= db) {
            quo.assign(a.degree() - db + 1, Rational(0));
        }
        for (int d = a.degree(); d >= db; --d) {
            Rational f = rem[d] / b.coeffs_.back();
            if (f == 0) {
                continue;
            }
            quo[d - db] = f;
            for (int i = 0; i <= db; ++i) {
                rem[d - db + i] -= f * b.coeffs_[i];
            }
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    // a / b when the division is exact; throws NonIntegerEntry otherwise.
    static Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) {
            throw NonIntegerEntry("inexact polynomial division");
        }
        return q;
    }

    // Monic gcd; gcd(0, 0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            a = divmod(a, b).second;
            std::swap(a, b);
        }
        return a.is_zero() ? a : a.monic();
    }

    bool divides(const Polynomial& other) const {
        if (is_zero()) {
            return other.is_zero();
        }
        return divmod(other, *this).second.is_zero();
    }

    // Human-readable form, e.g. "t^3 - 8*t^2 + 20*t - 15" (descending) or
    // "1 - 3*z + z^2 - z^3" (ascending). The zero polynomial prints as "0".
    std::string str(const std::string& var, bool descending = false) const {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        bool first = true;
        auto emit = [&](std::size_t i) {
            const Rational& c = coeffs_[i];
            if (c == 0) {
                return;
            }
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                out += c < 0 ? "-" : "";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (i == 0) {
                out += mag.str();
            } else {
                if (mag != 1) {
                    out += mag.str() + "*";
                }
                out += var;
                if (i >= 2) {
                    out += "^" + std::to_string(i);
                }
            }
        };
        if (descending) {
            for (std::size_t i = coeffs_.size(); i-- > 0;) {
                emit(i);
            }
        } else {
            for (std::size_t i = 0; i < coeffs_.size(); ++i) {
                emit(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<Rational> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }
};

}  // namespace prodmat
