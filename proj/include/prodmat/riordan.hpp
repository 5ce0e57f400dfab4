#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "prodmat/errors.hpp"
#include "prodmat/power_series.hpp"
#include "prodmat/production_matrix.hpp"

namespace prodmat {

// A Riordan matrix (d, h): column k has ordinary generating function
// d(z) (z h(z))^k. Proper when h(0) != 0; ECO-compatible when d(0) = 1.
struct RiordanPair {
    PowerSeries d;
    PowerSeries h;
};

// The zeta- and alpha-sequences of a proper Riordan matrix: column 0 of the
// matrix is a zeta-combination of the previous row, every other entry an
// alpha-combination starting at the previous column.
struct ZetaAlpha {
    PowerSeries zeta;
    PowerSeries alpha;
};

// First position at which a triangular array fails the Riordan recurrences.
struct NotRiordan {
    std::size_t row;
    std::size_t col;
    std::string reason;
};

// Entry (n, k) = [z^n] d (z h)^k for n, k < size.
inline std::vector<std::vector<Rational>> build_riordan_matrix(const RiordanPair& p, std::size_t size) {
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
        for (std::size_t n = k; n < size; ++n) {
            rows[n][k] = col.coeff(n);
        }
        if (k + 1 < size) {
            col = col * zh;
        }
    }
    return rows;
}

// The Riordan-shaped production matrix whose columns 0 and 1 are the zeta-
// and alpha-sequences. Coefficients must be nonnegative integers.
inline ProductionMatrix production_from_zeta_alpha(const ZetaAlpha& za) {
    return ProductionMatrix(RiordanForm{za.zeta, za.alpha});
}

// Recovers the unique (zeta, alpha) prefixes satisfying the Riordan
// recurrences on a triangular array with rows 0..n-1 (n >= 3), or reports
// the first violated position. The output series carry order n-2; tails
// beyond the available rows are never padded.
inline std::variant<ZetaAlpha, NotRiordan> detect_zeta_alpha(
    const std::vector<std::vector<Rational>>& rows) {
    const std::size_t n = rows.size();
    if (n < 3) {
        throw DomainError("detection needs at least 3 rows");
    }
    auto entry = [&](std::size_t r, std::size_t c) {
        return c < rows[r].size() ? rows[r][c] : Rational(0);
    };
    if (entry(0, 0) != 1) {
        return NotRiordan{0, 0, "row 0 must start with 1"};
    }
    for (std::size_t c = 1; c < rows[0].size(); ++c) {
        if (entry(0, c) != 0) {
            return NotRiordan{0, c, "row 0 must be (1, 0, 0, ...)"};
        }
    }
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t c = r + 1; c < rows[r].size(); ++c) {
            if (entry(r, c) != 0) {
                return NotRiordan{r, c, "array is not lower triangular"};
            }
        }
        if (entry(r, r) == 0) {
            return NotRiordan{r, r, "zero diagonal entry; matrix is not proper"};
        }
    }

    // One new alpha coefficient per row from the column-1 equation
    // d_{m+1,1} = alpha_0 d_{m,0} + ... + alpha_m d_{m,m}.
    std::vector<Rational> alpha(n - 1, Rational(0));
    for (std::size_t m = 0; m + 1 < n; ++m) {
        Rational acc = entry(m + 1, 1);
        for (std::size_t i = 0; i < m; ++i) {
            acc -= alpha[i] * entry(m, i);
        }
        alpha[m] = acc / entry(m, m);
    }
    // Likewise zeta from the column-0 equation.
    std::vector<Rational> zeta(n - 1, Rational(0));
    for (std::size_t m = 0; m + 1 < n; ++m) {
        Rational acc = entry(m + 1, 0);
        for (std::size_t i = 0; i < m; ++i) {
            acc -= zeta[i] * entry(m, i);
        }
        zeta[m] = acc / entry(m, m);
    }
    // Every remaining alpha equation must agree.
    for (std::size_t r = 0; r + 1 < n; ++r) {
        for (std::size_t k = 0; k <= r; ++k) {
            Rational acc = 0;
            for (std::size_t i = k; i <= r; ++i) {
                acc += alpha[i - k] * entry(r, i);
            }
            if (acc != entry(r + 1, k + 1)) {
                return NotRiordan{r + 1, k + 1, "alpha recurrence violated"};
            }
        }
    }
    return ZetaAlpha{PowerSeries(std::move(zeta)), PowerSeries(std::move(alpha))};
}

inline std::variant<ZetaAlpha, NotRiordan> detect_zeta_alpha(const EcoMatrix& a) {
    std::vector<std::vector<Rational>> rows(a.rows.size());
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        rows[r].reserve(a.rows[r].size());
        for (const auto& e : a.rows[r]) {
            rows[r].push_back(Rational(e));
        }
    }
    return detect_zeta_alpha(rows);
}

// Outputs of the generating-function pipeline: h = alpha(z h),
// d = 1/(1 - z zeta(z h)), f = d/(1 - z h), and the coefficient table of
// G(t, z) = d/(1 - t z h), i.e. table[n][k] = [z^n] d (z h)^k.
struct GfPipeline {
    PowerSeries h;
    PowerSeries d;
    PowerSeries f;
    std::vector<std::vector<Rational>> table;
};

inline GfPipeline gf_pipeline(const ZetaAlpha& za, std::size_t order) {
    if (za.zeta.order() < order || za.alpha.order() < order) {
        throw DomainError("zeta and alpha must be given to the requested order");
    }
    PowerSeries h = solve_h_fixed_point(za.alpha, order);
    PowerSeries zh = shift_up(h).truncated(order);
    PowerSeries d = div(PowerSeries::constant(1, order),
                        1 - shift_up(compose(za.zeta.truncated(order), zh)).truncated(order));
    PowerSeries f = div(d, 1 - zh);
    return GfPipeline{h, d, f, build_riordan_matrix(RiordanPair{d, h}, order + 1)};
}

// Whether alpha(z) - z zeta(z) = 1 to the given order; by the d = h
// criterion this holds exactly when the pipeline produces d = h.
inline bool check_d_equals_h(const ZetaAlpha& za, std::size_t order) {
    const std::size_t n = std::min({za.alpha.order(), za.zeta.order() + 1, order});
    PowerSeries lhs = (za.alpha.truncated(n) - shift_up(za.zeta).truncated(n));
    return lhs == PowerSeries::constant(1, n);
}

}  // namespace prodmat
