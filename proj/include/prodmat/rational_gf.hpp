#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodmat/errors.hpp"
#include "prodmat/linalg.hpp"
#include "prodmat/polynomial.hpp"
#include "prodmat/power_series.hpp"

namespace prodmat {

// A rational generating function num/den in normal form: den(0) = 1 and
// gcd(num, den) = 1.
struct RationalGF {
    Polynomial num;
    Polynomial den;

    static RationalGF make(Polynomial n, Polynomial d) {
        if (d.is_zero()) {
            throw DomainError("rational gf with zero denominator");
        }
        Polynomial g = Polynomial::gcd(n, d);
        if (!g.is_zero() && g.degree() > 0) {
            n = Polynomial::exact_div(n, g);
            d = Polynomial::exact_div(d, g);
        }
        Rational c = d.coeff(0);
        if (c == 0) {
            throw DomainError("rational gf has a pole at z = 0");
        }
        return RationalGF{n / c, d / c};
    }

    PowerSeries expand(std::size_t order) const {
        return div(to_series(num, order), to_series(den, order));
    }

    bool operator==(const RationalGF&) const = default;

    std::string str() const {
        return "(" + num.str("z") + ")/(" + den.str("z") + ")";
    }
};

// Least-denominator-degree rational fit: num/den with deg(den) <= max_den_degree,
// deg(num) <= deg(den), whose expansion reproduces every available coefficient
// of s. Requires s.order >= 2*max_den_degree + 2 so each candidate degree is
// cross-validated; returns nullopt when no candidate fits.
inline std::optional<RationalGF> fit_rational(const PowerSeries& s, std::size_t max_den_degree) {
    if (s.order() < 2 * max_den_degree + 2) {
        throw InsufficientTerms("need order >= 2*max_den_degree + 2 to fit and validate");
    }
    for (std::size_t d = 0; d <= max_den_degree; ++d) {
        // With deg(num) <= d, the coefficients of z^(d+1).. of s*den must vanish:
        // a_n + sum_{i=1..d} den_i a_{n-i} = 0 for every n > d.
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (std::size_t n = d + 1; n <= s.order(); ++n) {
            std::vector<Rational> row(d);
            for (std::size_t i = 1; i <= d; ++i) {
                row[i - 1] = s.coeff(n - i);
            }
            rows.push_back(std::move(row));
            rhs.push_back(-s.coeff(n));
        }
        auto sol = solve_linear(std::move(rows), std::move(rhs));
        if (!sol) {
            continue;
        }
        std::vector<Rational> den_coeffs(d + 1, Rational(0));
        den_coeffs[0] = 1;
        for (std::size_t i = 1; i <= d; ++i) {
            den_coeffs[i] = (*sol)[i - 1];
        }
        Polynomial den(den_coeffs);
        PowerSeries prod = s * to_series(den, s.order());
        std::vector<Rational> num_coeffs(d + 1, Rational(0));
        for (std::size_t i = 0; i <= d; ++i) {
            num_coeffs[i] = prod.coeff(i);
        }
        return RationalGF::make(Polynomial(num_coeffs), den);
    }
    return std::nullopt;
}

}  // namespace prodmat
