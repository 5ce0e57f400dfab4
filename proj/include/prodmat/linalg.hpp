#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "prodmat/rational.hpp"

namespace prodmat {

// Solves A x = b exactly over the rationals by Gaussian elimination. Returns
// a solution with free variables set to zero, or nullopt when the system is
// inconsistent. A is given as rows; every row must have the same length.
inline std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a[p][c] == 0) {
            ++p;
        }
        if (p == m) {
            continue;
        }
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) {
                continue;
            }
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < n; ++j) {
                a[i][j] -= f * a[r][j];
            }
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i) {
        if (b[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
        x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    }
    return x;
}

// Feeds vectors one at a time and reports the first linear dependence: when
// the new vector lies in the span of the earlier ones, add() returns
// coefficients c with v = sum_i c[i] * v_i over the vectors added so far.
class DependenceFinder {
public:
    // All vectors must share one dimension.
    std::optional<std::vector<Rational>> add(std::vector<Rational> v) {
        std::vector<Rational> combo(count_ + 1, Rational(0));
        combo[count_] = 1;
        for (const Row& row : rows_) {
            if (v[row.pivot] == 0) {
                continue;
            }
            Rational f = v[row.pivot] / row.vec[row.pivot];
            for (std::size_t j = 0; j < v.size(); ++j) {
                v[j] -= f * row.vec[j];
            }
            for (std::size_t j = 0; j < row.combo.size(); ++j) {
                combo[j] -= f * row.combo[j];
            }
        }
        std::size_t pivot = v.size();
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot == v.size()) {
            std::vector<Rational> coeffs(count_, Rational(0));
            for (std::size_t j = 0; j < count_; ++j) {
                coeffs[j] = -combo[j];
            }
            return coeffs;
        }
        rows_.push_back(Row{std::move(v), std::move(combo), pivot});
        ++count_;
        return std::nullopt;
    }

    std::size_t independent_count() const { return rows_.size(); }

private:
    struct Row {
        std::vector<Rational> vec;
        std::vector<Rational> combo;  // vec as a combination of the added vectors
        std::size_t pivot;
    };

    std::vector<Row> rows_;
    std::size_t count_ = 0;
};

}  // namespace prodmat
