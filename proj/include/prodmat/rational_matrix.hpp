#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodmat/errors.hpp"
#include "prodmat/linalg.hpp"
#include "prodmat/polynomial.hpp"
#include "prodmat/production_matrix.hpp"
#include "prodmat/rational_gf.hpp"
#include "prodmat/row_expr.hpp"

namespace prodmat {

// A finite succession rule has a finite production matrix.
using FiniteMatrix = ExplicitFinite;

namespace detail {

// Fraction-free (Bareiss) determinant over univariate polynomials; every
// division in the elimination is exact.
inline Polynomial poly_det(std::vector<std::vector<Polynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return Polynomial::constant(1);
    }
    int sign = 1;
    Polynomial prev = Polynomial::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) {
                ++swap_row;
            }
            if (swap_row == n) {
                return Polynomial();
            }
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = Polynomial::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = Polynomial();
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

inline std::vector<Rational> to_rational_vec(const std::vector<BigInt>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        out.emplace_back(e);
    }
    return out;
}

}  // namespace detail

// The induced generating function f_P(z) = u^T (I - zP)^{-1} e, solved by
// Cramer's rule with fraction-free elimination: f = det(M0)/det(M) where
// M = I - zP and M0 has column 0 replaced by the all-ones vector.
inline RationalGF rational_gf(const FiniteMatrix& p) {
    const std::size_t q = p.dim();
    std::vector<std::vector<Polynomial>> m(q, std::vector<Polynomial>(q));
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            Rational pe(p.rows[i][j]);
            m[i][j] = Polynomial{i == j ? Rational(1) : Rational(0), -pe};
        }
    }
    std::vector<std::vector<Polynomial>> m0 = m;
    for (std::size_t i = 0; i < q; ++i) {
        m0[i][0] = Polynomial::constant(1);
    }
    return RationalGF::make(detail::poly_det(std::move(m0)), detail::poly_det(std::move(m)));
}

// det(tI - P); monic of degree q.
inline Polynomial char_polynomial(const FiniteMatrix& p) {
    const std::size_t q = p.dim();
    std::vector<std::vector<Polynomial>> m(q, std::vector<Polynomial>(q));
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            Rational pe(p.rows[i][j]);
            m[i][j] = Polynomial{-pe, i == j ? Rational(1) : Rational(0)};
        }
    }
    return detail::poly_det(std::move(m));
}

// Least-degree monic m with m(P) = 0: the first linear dependence among the
// flattened powers I, P, P^2, ...
inline Polynomial minimal_polynomial(const FiniteMatrix& p) {
    const std::size_t q = p.dim();
    std::vector<std::vector<Rational>> power(q, std::vector<Rational>(q, Rational(0)));
    for (std::size_t i = 0; i < q; ++i) {
        power[i][i] = 1;
    }
    DependenceFinder finder;
    for (std::size_t deg = 0; deg <= q; ++deg) {
        std::vector<Rational> flat;
        flat.reserve(q * q);
        for (const auto& row : power) {
            flat.insert(flat.end(), row.begin(), row.end());
        }
        if (auto coeffs = finder.add(std::move(flat))) {
            std::vector<Rational> cs(deg + 1, Rational(0));
            cs[deg] = 1;
            for (std::size_t t = 0; t < deg; ++t) {
                cs[t] = -(*coeffs)[t];
            }
            return Polynomial(std::move(cs));
        }
        // power <- power * P
        std::vector<std::vector<Rational>> next(q, std::vector<Rational>(q, Rational(0)));
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t k = 0; k < q; ++k) {
                if (power[i][k] == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < q; ++j) {
                    next[i][j] += power[i][k] * Rational(p.rows[k][j]);
                }
            }
        }
        power = std::move(next);
    }
    throw Inconsistent("no dependence among matrix powers up to the dimension");  // unreachable
}

// Least-degree monic g with g(P) e = 0: the first dependence among the
// Krylov vectors e, Pe, P^2 e, ...; a divisor of the minimal polynomial.
inline Polynomial annihilator_of_e(const FiniteMatrix& p) {
    const std::size_t q = p.dim();
    std::vector<Rational> v(q, Rational(1));
    DependenceFinder finder;
    for (std::size_t deg = 0; deg <= q; ++deg) {
        if (auto coeffs = finder.add(v)) {
            std::vector<Rational> cs(deg + 1, Rational(0));
            cs[deg] = 1;
            for (std::size_t t = 0; t < deg; ++t) {
                cs[t] = -(*coeffs)[t];
            }
            return Polynomial(std::move(cs));
        }
        std::vector<Rational> next(q, Rational(0));
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = 0; j < q; ++j) {
                next[i] += Rational(p.rows[i][j]) * v[j];
            }
        }
        v = std::move(next);
    }
    throw Inconsistent("no Krylov dependence up to the dimension");  // unreachable
}

// Least-order monic characteristic polynomial t^d + c_1 t^{d-1} + ... + c_d
// whose recurrence a_n + c_1 a_{n-1} + ... + c_d a_{n-d} = 0 holds for every
// n >= d in the window. Throws InsufficientTerms when no candidate order d
// with 2d+1 <= #terms fits.
inline Polynomial minimal_sequence_recurrence(const std::vector<BigInt>& terms) {
    const std::size_t len = terms.size();
    if (len == 0) {
        throw InsufficientTerms("empty sequence");
    }
    for (std::size_t d = 0; 2 * d + 1 <= len; ++d) {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (std::size_t n = d; n < len; ++n) {
            std::vector<Rational> row(d);
            for (std::size_t i = 1; i <= d; ++i) {
                row[i - 1] = Rational(terms[n - i]);
            }
            rows.push_back(std::move(row));
            rhs.emplace_back(-Rational(terms[n]));
        }
        auto sol = solve_linear(std::move(rows), std::move(rhs));
        if (!sol) {
            continue;
        }
        std::vector<Rational> cs(d + 1, Rational(0));
        cs[d] = 1;
        for (std::size_t i = 1; i <= d; ++i) {
            cs[d - i] = (*sol)[i - 1];
        }
        return Polynomial(std::move(cs));
    }
    throw InsufficientTerms("no recurrence fits within the validated window");
}

// A certified Krylov dependence: charpoly_divisor = t^k + c_1 t^{k-1} + ...
// + c_k annihilates the shifted sequences, the recurrence field holds the
// c_i, initial_terms are a_0..a_{k-1}, and gf expands to the sequence.
struct RecurrenceReport {
    Polynomial charpoly_divisor;
    std::vector<Rational> recurrence;
    std::vector<BigInt> initial_terms;
    RationalGF gf;
};

// Searches for the least k <= max_order with e, Pe, ..., P^k e linearly
// dependent on their first `window` entries, then certifies the resulting
// generating function against sequence(P) over 2*window terms. Returns
// nullopt when no dependence exists within max_order; throws Inconsistent
// when a fitted dependence fails certification (a truncation artifact).
inline std::optional<RecurrenceReport> krylov_detect(const ProductionMatrix& p,
                                                     std::size_t max_order,
                                                     std::size_t window) {
    if (window < 2 * max_order + 4) {
        throw InsufficientTerms("window must be at least 2*max_order + 4");
    }
    // Entry i of P^m e needs the previous vector out to the support of row i,
    // so required widths grow from the outermost vector inwards. For a finite
    // matrix the vectors simply live in dimension q.
    std::vector<std::size_t> need(max_order + 1, window);
    if (p.is_finite()) {
        need.assign(max_order + 1, p.finite_dim());
    } else {
        for (std::size_t m = max_order; m-- > 0;) {
            std::size_t widest = window;
            for (std::size_t i = 0; i < need[m + 1]; ++i) {
                widest = std::max(widest, p.support_upper(i) + 1);
            }
            need[m] = widest;
        }
    }
    std::vector<std::vector<BigInt>> vecs(max_order + 1);
    vecs[0].assign(need[0], BigInt(1));
    for (std::size_t m = 1; m <= max_order; ++m) {
        vecs[m].assign(need[m], BigInt(0));
        for (std::size_t i = 0; i < need[m]; ++i) {
            std::vector<BigInt> row = p.row(i, p.support_upper(i));
            BigInt acc = 0;
            for (std::size_t j = 0; j < row.size() && j < vecs[m - 1].size(); ++j) {
                acc += row[j] * vecs[m - 1][j];
            }
            vecs[m][i] = acc;
        }
    }

    DependenceFinder finder;
    for (std::size_t m = 0; m <= max_order; ++m) {
        const std::size_t trunc_len = std::min(window, vecs[m].size());
        std::vector<Rational> truncated(trunc_len);
        for (std::size_t i = 0; i < trunc_len; ++i) {
            truncated[i] = Rational(vecs[m][i]);
        }
        auto coeffs = finder.add(std::move(truncated));
        if (!coeffs) {
            continue;
        }
        const std::size_t k = m;
        std::vector<Rational> cs(k + 1, Rational(0));
        cs[k] = 1;
        std::vector<Rational> recurrence(k);  // c_1..c_k
        for (std::size_t t = 0; t < k; ++t) {
            cs[t] = -(*coeffs)[t];
            recurrence[k - 1 - t] = -(*coeffs)[t];
        }
        Polynomial charpoly(std::move(cs));

        std::vector<BigInt> initial(k);
        for (std::size_t t = 0; t < k; ++t) {
            initial[t] = vecs[t][0];
        }
        std::vector<Rational> den_coeffs(k + 1, Rational(0));
        den_coeffs[0] = 1;
        for (std::size_t i = 1; i <= k; ++i) {
            den_coeffs[i] = recurrence[i - 1];
        }
        Polynomial den(den_coeffs);
        // The k = 0 case would mean e vanishes on the window, impossible here.
        std::vector<Rational> num_coeffs(std::max<std::size_t>(k, 1), Rational(0));
        for (std::size_t j = 0; j < k; ++j) {
            Rational acc(initial[j]);
            for (std::size_t i = 1; i <= j; ++i) {
                acc += den_coeffs[i] * Rational(initial[j - i]);
            }
            num_coeffs[j] = acc;
        }
        RationalGF gf = RationalGF::make(Polynomial(num_coeffs), den);

        // Certification: the gf must reproduce the sequence well beyond the
        // fitting window; truncation can produce spurious dependencies.
        const std::size_t check_terms = 2 * window;
        SequenceWindow seq = sequence(p, check_terms);
        PowerSeries expansion = gf.expand(check_terms - 1);
        for (std::size_t n = 0; n < check_terms; ++n) {
            if (expansion.coeff(n) != Rational(seq.terms[n])) {
                throw Inconsistent("fitted dependence failed certification at term " +
                                   std::to_string(n));
            }
        }
        return RecurrenceReport{std::move(charpoly), std::move(recurrence), std::move(initial),
                                std::move(gf)};
    }
    return std::nullopt;
}

// The quadratic-column family: first column alpha (i+1)^2 + beta (i+1) +
// gamma at row i, plus a 1 on column i+1. Returns the characteristic
// polynomial of the detected dependence.
inline Polynomial parametric_family_check(const BigInt& alpha, const BigInt& beta,
                                          const BigInt& gamma) {
    if (alpha < 0 || beta < 0 || gamma < 0) {
        throw NegativeEntry("family parameters must be nonnegative");
    }
    std::string col0 = "(" + alpha.str() + "*(i+1)^2 + " + beta.str() + "*(i+1) + " + gamma.str() + ")";
    RowExprForm form{IntExpr::parse("[j=0]*" + col0 + " + [j=i+1]"), IntExpr::parse("i+1")};
    auto report = krylov_detect(ProductionMatrix(std::move(form)), 3, 16);
    if (!report) {
        throw Inconsistent("quadratic-column family has no dependence of order <= 3");
    }
    return report->charpoly_divisor;
}

// Two finite production matrices are equivalent iff they induce the same
// generating function.
inline bool equivalent(const FiniteMatrix& a, const FiniteMatrix& b) {
    return rational_gf(a) == rational_gf(b);
}

}  // namespace prodmat
