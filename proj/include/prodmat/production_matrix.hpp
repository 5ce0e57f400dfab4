#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "prodmat/errors.hpp"
#include "prodmat/power_series.hpp"
#include "prodmat/rational.hpp"
#include "prodmat/row_expr.hpp"

namespace prodmat {

// A finite q x q production matrix with nonnegative integer entries.
struct ExplicitFinite {
    std::vector<std::vector<BigInt>> rows;

    std::size_t dim() const { return rows.size(); }
};

// Entries given by an integer expression in (i, j); support gives the last
// column that can be nonzero in row i, so truncations stay exact.
struct RowExprForm {
    IntExpr entry;
    IntExpr support;
};

// Row k is (zeta_k, alpha_k, alpha_{k-1}, ..., alpha_0, 0, ...): columns 0
// and 1 carry the zeta- and alpha-sequences of the induced Riordan matrix.
struct RiordanForm {
    PowerSeries zeta;
    PowerSeries alpha;
};

// Entries p_{i,j} = (i!/j!) (c_{i-j} + j r_{i-j+1}) with c_{-1} = 0; the
// superdiagonal is the constant r_0 and everything above it vanishes.
struct ExpRiordanForm {
    PowerSeries c;
    PowerSeries r;
};

// A production matrix in one of four representations sharing a lazy row
// interface. All realized entries are checked to be nonnegative integers.
class ProductionMatrix {
public:
    using Form = std::variant<ExplicitFinite, RowExprForm, RiordanForm, ExpRiordanForm>;

    explicit ProductionMatrix(ExplicitFinite f) : form_(std::move(f)) {
        const auto& rows = std::get<ExplicitFinite>(form_).rows;
        if (rows.empty()) {
            throw DomainError("an explicit production matrix needs at least one row");
        }
        for (const auto& row : rows) {
            if (row.size() != rows.size()) {
                throw DomainError("explicit production matrix must be square");
            }
            for (const auto& e : row) {
                if (e < 0) {
                    throw NegativeEntry("negative entry in explicit matrix: " + e.str());
                }
            }
        }
    }

    explicit ProductionMatrix(RowExprForm f) : form_(std::move(f)) {}

    explicit ProductionMatrix(RiordanForm f) : form_(std::move(f)) {
        const auto& rf = std::get<RiordanForm>(form_);
        for (const auto& series : {rf.zeta, rf.alpha}) {
            for (const auto& c : series.coeffs()) {
                if (!is_integer(c)) {
                    throw NonIntegerEntry("Riordan production matrix needs integer coefficients, got " +
                                          c.str());
                }
                if (c < 0) {
                    throw NegativeEntry("Riordan production matrix needs nonnegative coefficients, got " +
                                        c.str());
                }
            }
        }
        if (rf.alpha.constant_term() == 0) {
            throw DomainError("Riordan production matrix needs alpha(0) != 0");
        }
    }

    explicit ProductionMatrix(ExpRiordanForm f) : form_(std::move(f)) {}

    const Form& form() const { return form_; }

    bool is_finite() const { return std::holds_alternative<ExplicitFinite>(form_); }

    std::size_t finite_dim() const { return std::get<ExplicitFinite>(form_).dim(); }

    // Largest column index that can hold a nonzero entry in row i.
    std::size_t support_upper(std::size_t i) const {
        if (const auto* ef = std::get_if<ExplicitFinite>(&form_)) {
            return ef->dim() - 1;
        }
        if (const auto* re = std::get_if<RowExprForm>(&form_)) {
            BigInt s = re->support.eval(BigInt(i), BigInt(0));
            if (s < 0) {
                return 0;  // empty row; row() yields zeros
            }
            return static_cast<std::size_t>(s);
        }
        return i + 1;
    }

    // Last row index realizable from the stored series; nullopt = unbounded.
    std::optional<std::size_t> max_realizable_row() const {
        if (const auto* rf = std::get_if<RiordanForm>(&form_)) {
            return std::min(rf->zeta.order(), rf->alpha.order());
        }
        if (const auto* er = std::get_if<ExpRiordanForm>(&form_)) {
            if (er->r.order() == 0) {
                throw DomainError("r must be given at least to order 1");
            }
            return std::min(er->c.order(), er->r.order() - 1);
        }
        return std::nullopt;
    }

    // Entries p_{i,0}, ..., p_{i,upto}.
    std::vector<BigInt> row(std::size_t i, std::size_t upto) const {
        std::vector<BigInt> out(upto + 1, BigInt(0));
        if (const auto* ef = std::get_if<ExplicitFinite>(&form_)) {
            if (i >= ef->dim()) {
                throw DomainError("row index exceeds matrix dimension");
            }
            for (std::size_t j = 0; j <= upto && j < ef->dim(); ++j) {
                out[j] = ef->rows[i][j];
            }
            return out;
        }
        if (const auto* re = std::get_if<RowExprForm>(&form_)) {
            BigInt s = re->support.eval(BigInt(i), BigInt(0));
            for (std::size_t j = 0; j <= upto; ++j) {
                if (s < 0 || BigInt(j) > s) {
                    break;
                }
                BigInt v = re->entry.eval(BigInt(i), BigInt(j));
                if (v < 0) {
                    throw NegativeEntry("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") is negative: " + v.str());
                }
                out[j] = v;
            }
            return out;
        }
        if (const auto* rf = std::get_if<RiordanForm>(&form_)) {
            if (i > rf->zeta.order() || i > rf->alpha.order()) {
                throw DomainError("Riordan form series too short for row " + std::to_string(i));
            }
            out[0] = numerator(rf->zeta.coeff(i));
            for (std::size_t j = 1; j <= upto && j <= i + 1; ++j) {
                out[j] = numerator(rf->alpha.coeff(i + 1 - j));
            }
            return out;
        }
        const auto& er = std::get<ExpRiordanForm>(form_);
        if (i > er.c.order() || i + 1 > er.r.order()) {
            throw DomainError("exponential Riordan form series too short for row " + std::to_string(i));
        }
        const BigInt fi = factorial(i);
        for (std::size_t j = 0; j <= upto && j <= i + 1; ++j) {
            Rational cpart = j > i ? Rational(0) : er.c.coeff(i - j);  // c_{-1} = 0
            Rational val = Rational(fi, factorial(j)) * (cpart + Rational(BigInt(j)) * er.r.coeff(i - j + 1));
            BigInt v = to_integer(val);
            if (v < 0) {
                throw NegativeEntry("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") is negative: " + v.str());
            }
            out[j] = v;
        }
        return out;
    }

private:
    Form form_;
};

// The level-by-level label distribution: row n is the label distribution at
// level n of the generating tree, row 0 = (1, 0, 0, ...), and each row is
// the previous row times P.
struct EcoMatrix {
    std::vector<std::vector<BigInt>> rows;

    std::size_t levels() const { return rows.size(); }
};

// The induced sequence a_0..a_{n-1}; a_0 = 1 by the root convention.
struct SequenceWindow {
    std::vector<BigInt> terms;
};

inline EcoMatrix eco_matrix(const ProductionMatrix& p, std::size_t levels) {
    EcoMatrix a;
    if (levels == 0) {
        return a;
    }
    std::size_t width = p.is_finite() ? p.finite_dim() : 1;
    std::vector<BigInt> current(width, BigInt(0));
    current[0] = 1;
    a.rows.push_back(current);
    for (std::size_t level = 1; level < levels; ++level) {
        std::size_t next_width = 1;
        for (std::size_t i = 0; i < current.size(); ++i) {
            if (current[i] != 0) {
                next_width = std::max(next_width, p.support_upper(i) + 1);
            }
        }
        std::vector<BigInt> next(next_width, BigInt(0));
        for (std::size_t i = 0; i < current.size(); ++i) {
            if (current[i] == 0) {
                continue;
            }
            std::vector<BigInt> prow = p.row(i, next_width - 1);
            for (std::size_t j = 0; j < next_width; ++j) {
                next[j] += current[i] * prow[j];
            }
        }
        a.rows.push_back(next);
        current = std::move(next);
    }
    return a;
}

inline SequenceWindow sequence(const ProductionMatrix& p, std::size_t terms) {
    EcoMatrix a = eco_matrix(p, terms);
    SequenceWindow w;
    w.terms.reserve(terms);
    for (const auto& row : a.rows) {
        BigInt s = 0;
        for (const auto& e : row) {
            s += e;
        }
        w.terms.push_back(s);
    }
    return w;
}

// Row sums of P itself, i.e. the label values of the generating tree.
inline std::vector<BigInt> labels(const ProductionMatrix& p, std::size_t count) {
    std::vector<BigInt> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<BigInt> r = p.row(i, p.support_upper(i));
        BigInt s = 0;
        for (const auto& e : r) {
            s += e;
        }
        out.push_back(s);
    }
    return out;
}

// Coefficient table of G(t, z): entry [n][k] = [t^k z^n] G = d_{n,k}. With
// exponential_weight, row n is divided by n! (the eR-weighted view).
inline std::vector<std::vector<Rational>> bivariate_table(const ProductionMatrix& p,
                                                          std::size_t levels,
                                                          bool exponential_weight = false) {
    EcoMatrix a = eco_matrix(p, levels);
    std::vector<std::vector<Rational>> table(a.rows.size());
    for (std::size_t n = 0; n < a.rows.size(); ++n) {
        const Rational scale = exponential_weight ? Rational(1, factorial(n)) : Rational(1);
        table[n].reserve(a.rows[n].size());
        for (const auto& e : a.rows[n]) {
            table[n].push_back(Rational(e) * scale);
        }
    }
    return table;
}

// The exponential generating function of the induced sequence: coefficient
// of z^n is a_n / n!.
inline PowerSeries egf_coefficients(const ProductionMatrix& p, std::size_t terms) {
    if (terms == 0) {
        throw DomainError("need at least one term");
    }
    SequenceWindow w = sequence(p, terms);
    std::vector<Rational> cs(terms);
    for (std::size_t n = 0; n < terms; ++n) {
        cs[n] = Rational(w.terms[n], factorial(n));
    }
    return PowerSeries(std::move(cs));
}

}  // namespace prodmat
