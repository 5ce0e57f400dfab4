#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "prodmat/errors.hpp"
#include "prodmat/polynomial.hpp"
#include "prodmat/rational.hpp"

namespace prodmat {

// Truncated formal power series over the rationals. A series of order N
// stores the N+1 coefficients of 1, z, ..., z^N; it is the value of some
// series mod z^(N+1). Arithmetic results carry the minimum order of the
// operands, so the stated coefficients are always exact.
class PowerSeries {
public:
    // The zero series to the given order.
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

    // order = coeffs.size() - 1; the list must be nonempty.
    explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw DomainError("a power series needs at least the constant coefficient");
        }
    }

    static PowerSeries constant(const Rational& c, std::size_t order) {
        PowerSeries f(order);
        f.coeffs_[0] = c;
        return f;
    }

    // The series z.
    static PowerSeries identity(std::size_t order) {
        PowerSeries f(order);
        if (order >= 1) {
            f.coeffs_[1] = 1;
        }
        return f;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Rational& coeff(std::size_t n) const {
        if (n >= coeffs_.size()) {
            throw DomainError("coefficient index exceeds truncation order");
        }
        return coeffs_[n];
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    const Rational& constant_term() const { return coeffs_[0]; }

    PowerSeries truncated(std::size_t new_order) const {
        if (new_order > order()) {
            throw DomainError("cannot extend a truncated series");
        }
        return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    bool is_zero() const {
        for (const auto& c : coeffs_) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const PowerSeries&) const = default;

    // "c0 + c1*z + ... + O(z^{N+1})"; zero terms are skipped.
    std::string str(const std::string& var = "z") const {
        std::string out = Polynomial(coeffs_).str(var, false);
        return out + " + O(" + var + "^" + std::to_string(order() + 1) + ")";
    }

private:
    std::vector<Rational> coeffs_;
};

inline std::size_t min_order(const PowerSeries& f, const PowerSeries& g) {
    return std::min(f.order(), g.order());
}

inline PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    const std::size_t n = min_order(f, g);
    std::vector<Rational> cs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        cs[i] = f.coeff(i) + g.coeff(i);
    }
    return PowerSeries(std::move(cs));
}

inline PowerSeries operator-(const PowerSeries& f) {
    std::vector<Rational> cs(f.coeffs());
    for (auto& c : cs) {
        c = -c;
    }
    return PowerSeries(std::move(cs));
}

inline PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
    return f + (-g);
}

// Cauchy product to the minimum order.
inline PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    const std::size_t n = min_order(f, g);
    std::vector<Rational> cs(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (f.coeff(i) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            cs[i + j] += f.coeff(i) * g.coeff(j);
        }
    }
    return PowerSeries(std::move(cs));
}

inline PowerSeries operator*(const Rational& s, const PowerSeries& f) {
    std::vector<Rational> cs(f.coeffs());
    for (auto& c : cs) {
        c *= s;
    }
    return PowerSeries(std::move(cs));
}

inline PowerSeries operator*(const PowerSeries& f, const Rational& s) { return s * f; }

inline PowerSeries operator/(const PowerSeries& f, const Rational& s) {
    if (s == 0) {
        throw DomainError("series division by zero scalar");
    }
    return (Rational(1) / s) * f;
}

inline PowerSeries operator+(const PowerSeries& f, const Rational& c) {
    std::vector<Rational> cs(f.coeffs());
    cs[0] += c;
    return PowerSeries(std::move(cs));
}

inline PowerSeries operator+(const Rational& c, const PowerSeries& f) { return f + c; }

inline PowerSeries operator-(const PowerSeries& f, const Rational& c) { return f + Rational(-c); }

inline PowerSeries operator-(const Rational& c, const PowerSeries& f) { return (-f) + c; }

// z * f; the result order grows by one since the top coefficient is known.
inline PowerSeries shift_up(const PowerSeries& f) {
    std::vector<Rational> cs;
    cs.reserve(f.order() + 2);
    cs.push_back(Rational(0));
    cs.insert(cs.end(), f.coeffs().begin(), f.coeffs().end());
    return PowerSeries(std::move(cs));
}

// f / z^v; the first v coefficients must vanish.
inline PowerSeries shift_down(const PowerSeries& f, std::size_t v) {
    if (v == 0) {
        return f;
    }
    if (f.order() < v) {
        throw DomainError("series order too small for division by z^" + std::to_string(v));
    }
    for (std::size_t i = 0; i < v; ++i) {
        if (f.coeff(i) != 0) {
            throw DomainError("series is not divisible by z^" + std::to_string(v));
        }
    }
    return PowerSeries(std::vector<Rational>(f.coeffs().begin() + v, f.coeffs().end()));
}

// f / g with g(0) != 0.
inline PowerSeries div(const PowerSeries& f, const PowerSeries& g) {
    if (g.constant_term() == 0) {
        throw ZeroConstantTerm("series division by a series with zero constant term");
    }
    const std::size_t n = min_order(f, g);
    std::vector<Rational> cs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Rational acc = f.coeff(i);
        for (std::size_t k = 1; k <= i; ++k) {
            acc -= g.coeff(k) * cs[i - k];
        }
        cs[i] = acc / g.constant_term();
    }
    return PowerSeries(std::move(cs));
}

// f / g allowing g to have a zero of order v at 0, provided f does too. The
// result order drops by v. Division by the zero series is an error.
inline PowerSeries div_valuation(const PowerSeries& f, const PowerSeries& g) {
    std::size_t v = 0;
    while (v <= g.order() && g.coeff(v) == 0) {
        ++v;
    }
    if (v > g.order()) {
        throw ZeroConstantTerm("series division by the zero series");
    }
    if (v == 0) {
        return div(f, g);
    }
    const std::size_t n = min_order(f, g);
    if (n < v) {
        throw DomainError("series order too small for division by z^" + std::to_string(v));
    }
    return div(shift_down(f.truncated(n), v), shift_down(g.truncated(n), v));
}

// f(g(z)) with g(0) = 0, by Horner evaluation over truncated series.
inline PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
    if (g.constant_term() != 0) {
        throw NonzeroInnerConstant("composition requires a zero inner constant term");
    }
    const std::size_t n = min_order(f, g);
    const PowerSeries gt = g.truncated(n);
    PowerSeries acc = PowerSeries::constant(f.coeff(n), n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * gt + f.coeff(k);
    }
    return acc;
}

inline PowerSeries derivative(const PowerSeries& f) {
    if (f.order() == 0) {
        throw DomainError("derivative of an order-0 series is undetermined");
    }
    std::vector<Rational> cs(f.order());
    for (std::size_t i = 1; i <= f.order(); ++i) {
        cs[i - 1] = Rational(i) * f.coeff(i);
    }
    return PowerSeries(std::move(cs));
}

// Antiderivative with constant term 0; the order grows by one.
inline PowerSeries integral(const PowerSeries& f) {
    std::vector<Rational> cs(f.order() + 2, Rational(0));
    for (std::size_t i = 0; i <= f.order(); ++i) {
        cs[i + 1] = f.coeff(i) / Rational(i + 1);
    }
    return PowerSeries(std::move(cs));
}

// Compositional inverse: the g with f(g(z)) = g(f(z)) = z. Needs f(0) = 0
// and f'(0) != 0.
inline PowerSeries reversion(const PowerSeries& f) {
    if (f.order() < 1 || f.constant_term() != 0 || f.coeff(1) == 0) {
        throw NotReversible("reversion needs f(0) = 0 and f'(0) != 0");
    }
    const std::size_t n = f.order();
    std::vector<Rational> b(n + 1, Rational(0));
    b[1] = Rational(1) / f.coeff(1);
    for (std::size_t m = 2; m <= n; ++m) {
        // With b_m still zero, [z^m] f(g) is off by exactly f_1 * b_m.
        PowerSeries partial(std::vector<Rational>(b.begin(), b.begin() + m + 1));
        Rational defect = compose(f.truncated(m), partial).coeff(m);
        b[m] = -defect / f.coeff(1);
    }
    return PowerSeries(std::move(b));
}

inline PowerSeries exp(const PowerSeries& f) {
    if (f.constant_term() != 0) {
        throw DomainError("exp needs a zero constant term");
    }
    const std::size_t n = f.order();
    std::vector<Rational> e(n + 1, Rational(0));
    e[0] = 1;
    // E' = f' E gives (m+1) e_{m+1} = sum_k (k+1) f_{k+1} e_{m-k}.
    for (std::size_t m = 0; m < n; ++m) {
        Rational acc = 0;
        for (std::size_t k = 0; k <= m; ++k) {
            acc += Rational(k + 1) * f.coeff(k + 1) * e[m - k];
        }
        e[m + 1] = acc / Rational(m + 1);
    }
    return PowerSeries(std::move(e));
}

inline PowerSeries log(const PowerSeries& f) {
    if (f.constant_term() != 1) {
        throw DomainError("log needs constant term 1");
    }
    if (f.order() == 0) {
        return PowerSeries(0);
    }
    return integral(div(derivative(f), f)).truncated(f.order());
}

inline PowerSeries sqrt(const PowerSeries& f) {
    if (f.constant_term() != 1) {
        throw DomainError("sqrt needs constant term 1");
    }
    const std::size_t n = f.order();
    std::vector<Rational> s(n + 1, Rational(0));
    s[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = f.coeff(m);
        for (std::size_t k = 1; k < m; ++k) {
            acc -= s[k] * s[m - k];
        }
        s[m] = acc / 2;
    }
    return PowerSeries(std::move(s));
}

inline PowerSeries pow(const PowerSeries& f, std::size_t k) {
    PowerSeries acc = PowerSeries::constant(1, f.order());
    PowerSeries base = f;
    while (k > 0) {
        if (k & 1) {
            acc = acc * base;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
        }
    }
    return acc;
}

// The unique h with h = alpha(z h) mod z^(N+1); needs alpha(0) != 0 and
// alpha.order >= N. Each fixed-point iteration settles at least one more
// coefficient, so N+1 iterations suffice.
inline PowerSeries solve_h_fixed_point(const PowerSeries& alpha, std::size_t n) {
    if (alpha.order() < n) {
        throw DomainError("alpha must be given to the requested order");
    }
    if (alpha.constant_term() == 0) {
        throw DomainError("fixed point h = alpha(z h) needs alpha(0) != 0");
    }
    const PowerSeries a = alpha.truncated(n);
    PowerSeries h = PowerSeries::constant(a.constant_term(), n);
    for (std::size_t it = 0; it <= n; ++it) {
        h = compose(a, shift_up(h));
    }
    return h;
}

// The series of the polynomial, truncated or zero-padded to the given order.
inline PowerSeries to_series(const Polynomial& p, std::size_t order) {
    std::vector<Rational> cs(order + 1, Rational(0));
    for (std::size_t i = 0; i <= order; ++i) {
        cs[i] = p.coeff(i);
    }
    return PowerSeries(std::move(cs));
}

// Catalan, Motzkin, large/small Schroeder, ternary, Fine and central
// binomial series, truncated to the given order.
inline PowerSeries named_series(char name, std::size_t order) {
    const auto z = [](std::size_t n) { return PowerSeries::identity(n); };
    switch (name) {
        case 'C': {
            PowerSeries s = sqrt(1 - Rational(4) * z(order + 1));
            return shift_down(1 - s, 1) / Rational(2);
        }
        case 'M': {
            PowerSeries zz = z(order + 2);
            PowerSeries s = sqrt(1 - Rational(2) * zz - Rational(3) * (zz * zz));
            return shift_down(1 - zz - s, 2) / Rational(2);
        }
        case 'R': {
            PowerSeries zz = z(order + 1);
            PowerSeries s = sqrt(1 - Rational(6) * zz + zz * zz);
            return shift_down(1 - zz - s, 1) / Rational(2);
        }
        case 'S': {
            PowerSeries zz = z(order + 1);
            PowerSeries s = sqrt(1 - Rational(6) * zz + zz * zz);
            return shift_down(1 + zz - s, 1) / Rational(4);
        }
        case 'T': {
            // T = 1 + z T^3
            PowerSeries t = PowerSeries::constant(1, order);
            for (std::size_t it = 0; it <= order; ++it) {
                t = (shift_up(pow(t, 3)) + Rational(1)).truncated(order);
            }
            return t;
        }
        case 'F': {
            PowerSeries s = sqrt(1 - Rational(4) * z(order + 1));
            return div_valuation(1 - s, shift_up(Rational(3) - s));
        }
        case 'B':
            return div(PowerSeries::constant(1, order), sqrt(1 - Rational(4) * z(order)));
        default:
            throw UnknownName(std::string("unknown named series: ") + name);
    }
}

}  // namespace prodmat
