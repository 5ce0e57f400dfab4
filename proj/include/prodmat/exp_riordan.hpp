#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "prodmat/errors.hpp"
#include "prodmat/power_series.hpp"
#include "prodmat/production_matrix.hpp"

namespace prodmat {

// An exponential Riordan matrix [d, h]: column k has exponential generating
// function d(z) (z h(z))^k / k!. Needs d(0) != 0 and h(0) != 0;
// ECO-compatible when d(0) = 1.
struct ExpRiordanPair {
    PowerSeries d;
    PowerSeries h;
};

// The c- and r-sequences tied to [d, h] by r(z h) = (z h)' and
// c(z h) = d'/d; they generate the production matrix through
// p_{i,j} = (i!/j!) (c_{i-j} + j r_{i-j+1}).
struct CRPair {
    PowerSeries c;
    PowerSeries r;
};

// Entry (n, k) = n! [z^n] d (z h)^k / k! for n, k < size.
inline std::vector<std::vector<Rational>> build_exp_riordan(const ExpRiordanPair& p, std::size_t size) {
    if (size == 0) {
        return {};
    }
    if (p.d.order() + 1 < size || p.h.order() + 1 < size) {
        throw DomainError("d and h must be given to order >= size - 1");
    }
    std::vector<std::vector<Rational>> rows(size);
    for (std::size_t n = 0; n < size; ++n) {
        rows[n].assign(n + 1, Rational(0));
    }
    const PowerSeries zh = shift_up(p.h).truncated(size - 1);
    PowerSeries col = p.d.truncated(size - 1);
    for (std::size_t k = 0; k < size; ++k) {
        const Rational scale = Rational(1, factorial(k));
        for (std::size_t n = k; n < size; ++n) {
            rows[n][k] = Rational(factorial(n)) * col.coeff(n) * scale;
        }
        if (k + 1 < size) {
            col = col * zh;
        }
    }
    return rows;
}

// The almost-lower-triangular production matrix of (c, r): superdiagonal
// constant r_0, zeros above it. Realized entries must be nonnegative
// integers even when c and r themselves are not integral.
inline ProductionMatrix production_from_cr(const CRPair& cr) {
    return ProductionMatrix(ExpRiordanForm{cr.c, cr.r});
}

// Solves r(z h) = (z h)' and c(z h) = d'/d for (c, r) by reverting w = z h.
// Needs h(0) != 0, d given to order >= order + 1 and h to order >= order.
inline CRPair cr_from_dh(const ExpRiordanPair& p, std::size_t order) {
    if (p.d.order() < order + 1 || p.h.order() < order) {
        throw DomainError("cr_from_dh needs d to order N+1 and h to order N");
    }
    if (p.h.constant_term() == 0) {
        throw NotReversible("cr_from_dh needs h(0) != 0");
    }
    PowerSeries w = shift_up(p.h.truncated(order));  // order N+1, w'(0) = h(0) != 0
    PowerSeries g = reversion(w);
    PowerSeries r = compose(derivative(w), g);
    PowerSeries c = compose(div(derivative(p.d), p.d), g);
    return CRPair{c.truncated(order), r.truncated(order)};
}

// Integrates the triangular system w' = r(w), w(0) = 0 and d' = d c(w),
// d(0) = 1 coefficient by coefficient; h = w/z. Needs c, r to the
// requested order.
inline ExpRiordanPair dh_from_cr(const CRPair& cr, std::size_t order) {
    if (cr.c.order() < order || cr.r.order() < order) {
        throw DomainError("dh_from_cr needs c and r to the requested order");
    }
    const PowerSeries c = cr.c.truncated(order);
    const PowerSeries r = cr.r.truncated(order);
    PowerSeries w(order + 1);  // zero to order N+1
    for (std::size_t it = 0; it <= order + 1; ++it) {
        w = integral(compose(r, w.truncated(order)));
    }
    PowerSeries h = shift_down(w, 1);
    PowerSeries d = PowerSeries::constant(1, order + 1);
    for (std::size_t it = 0; it <= order + 1; ++it) {
        d = 1 + integral(d.truncated(order) * compose(c, w.truncated(order)));
    }
    return ExpRiordanPair{d.truncated(order), h};
}

// Coefficient table of phi_P(t, z) = e^{tz} (c(z) + t r(z)), extracted from
// the series themselves: entry [n][k] = n! [z^n][t^k] phi = p_{n,k}. Rows
// carry n+2 entries (columns 0..n+1).
inline std::vector<std::vector<Rational>> phi_table(const CRPair& cr, std::size_t size) {
    if (size == 0) {
        return {};
    }
    if (cr.c.order() + 1 < size || cr.r.order() + 1 < size) {
        throw DomainError("phi_table needs c and r to order size-1");
    }
    const std::size_t ord = size - 1;  // coefficients of z^0..z^{size-1} are read
    std::vector<std::vector<Rational>> rows(size);
    for (std::size_t n = 0; n < size; ++n) {
        rows[n].assign(n + 2, Rational(0));
    }
    // [t^k] phi = (z^k/k!) c + (z^{k-1}/(k-1)!) r
    PowerSeries mono = PowerSeries::constant(1, ord);  // z^k / k!
    PowerSeries prev = mono;
    for (std::size_t k = 0; k <= size; ++k) {
        PowerSeries phi_k = mono * cr.c.truncated(ord);
        if (k >= 1) {
            phi_k = phi_k + prev * cr.r.truncated(ord);
        }
        for (std::size_t n = (k == 0 ? 0 : k - 1); n < size; ++n) {
            if (k <= n + 1) {
                rows[n][k] = Rational(factorial(n)) * phi_k.coeff(n);
            }
        }
        prev = mono;
        mono = shift_up(mono).truncated(ord) / Rational(BigInt(k + 1));
    }
    return rows;
}

// Exponential generating function of the labels, phi_P(1, z) = e^z (c + r);
// returns the first `count` label values n! [z^n] phi(1, z).
inline std::vector<Rational> labels_from_phi(const CRPair& cr, std::size_t count) {
    if (count == 0) {
        return {};
    }
    const std::size_t ord = count - 1;
    if (cr.c.order() < ord || cr.r.order() < ord) {
        throw DomainError("labels_from_phi needs c and r to order count-1");
    }
    PowerSeries egf = exp(PowerSeries::identity(ord)) * (cr.c.truncated(ord) + cr.r.truncated(ord));
    std::vector<Rational> out(count);
    for (std::size_t n = 0; n < count; ++n) {
        out[n] = Rational(factorial(n)) * egf.coeff(n);
    }
    return out;
}

// Verifies the diagonal characterization of an exponential Riordan
// production matrix: diag(-1) is the constant r_0 and diag(m), divided by
// (k+1)...(k+m), is an arithmetic progression with first term c_m and
// ratio r_{m+1}, for every m <= depth.
inline bool diag_characterization_check(const ProductionMatrix& p, std::size_t depth) {
    const auto* er = std::get_if<ExpRiordanForm>(&p.form());
    if (er == nullptr) {
        throw DomainError("diagonal characterization applies to exponential Riordan forms");
    }
    const PowerSeries& c = er->c;
    const PowerSeries& r = er->r;
    if (depth + 1 > r.order() || depth > c.order()) {
        throw DomainError("depth exceeds the stored series orders");
    }
    const std::size_t max_row = std::min(c.order(), r.order() - 1);
    // Raw entries, without the production-matrix integrality checks.
    auto raw = [&](std::size_t i, std::size_t j) {
        Rational cpart = j > i ? Rational(0) : c.coeff(i - j);
        return Rational(factorial(i), factorial(j)) * (cpart + Rational(BigInt(j)) * r.coeff(i - j + 1));
    };
    // diag(-1) is the superdiagonal p_{k,k+1}.
    for (std::size_t k = 0; k <= max_row; ++k) {
        if (raw(k, k + 1) != r.constant_term()) {
            return false;
        }
    }
    for (std::size_t m = 0; m <= depth; ++m) {
        Rational expected_first = c.coeff(m);
        Rational expected_ratio = r.coeff(m + 1);
        Rational previous = 0;
        for (std::size_t k = 0; m + k <= max_row; ++k) {
            Rational divisor = Rational(factorial(m + k), factorial(k));  // (k+1)...(k+m)
            Rational v = raw(m + k, k) / divisor;
            if (k == 0 && v != expected_first) {
                return false;
            }
            if (k > 0 && v - previous != expected_ratio) {
                return false;
            }
            previous = v;
        }
    }
    return true;
}

// Rescales an ordinary lower-triangular array to its exponential analogue:
// entry (n, k) times n!/k!.
inline std::vector<std::vector<Rational>> ordinary_to_exponential(
    const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<Rational>> out(rows.size());
    for (std::size_t n = 0; n < rows.size(); ++n) {
        out[n].resize(rows[n].size());
        for (std::size_t k = 0; k < rows[n].size(); ++k) {
            if (k > n && rows[n][k] != 0) {
                throw DomainError("input array is not lower triangular");
            }
            out[n][k] = rows[n][k] * Rational(factorial(n), factorial(k));
        }
    }
    return out;
}

}  // namespace prodmat
