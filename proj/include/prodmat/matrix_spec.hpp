#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prodmat/errors.hpp"
#include "prodmat/production_matrix.hpp"
#include "prodmat/row_expr.hpp"
#include "prodmat/series_expr.hpp"

namespace prodmat {

// Line-oriented matrix spec files. Every line is `key: value`; '#' starts a
// comment and blank lines are skipped. The `kind` key selects the form:
//
//   kind: explicit      rows: [[0,1],[1,1]]
//   kind: rowexpr       entry: <expr(i,j)>   support: <expr(i)>
//   kind: riordan       zeta: <series-expr>  alpha: <series-expr>
//   kind: exp-riordan   c: <series-expr>     r: <series-expr>
//
// An exp-riordan file may instead carry `d:` and `h:` lines, which names an
// exponential Riordan pair rather than a production matrix (used by the
// roundtrip tooling).
class MatrixSpec {
public:
    enum class Kind { Explicit, RowExpr, Riordan, ExpRiordan };

    static MatrixSpec parse(std::string_view text) {
        MatrixSpec spec;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        bool saw_kind = false;
        while (pos <= text.size()) {
            std::size_t eol = text.find('\n', pos);
            std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                                   : eol - pos);
            pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            std::string_view trimmed = trim(line);
            if (trimmed.empty()) {
                continue;
            }
            std::size_t colon = trimmed.find(':');
            if (colon == std::string_view::npos) {
                throw SyntaxError(line_no, 1, "expected 'key: value'");
            }
            std::string key(trim(trimmed.substr(0, colon)));
            std::string value(trim(trimmed.substr(colon + 1)));
            if (spec.fields_.count(key) != 0) {
                throw SyntaxError(line_no, 1, "duplicate key '" + key + "'");
            }
            if (key == "kind") {
                if (saw_kind) {
                    throw SyntaxError(line_no, 1, "duplicate key 'kind'");
                }
                saw_kind = true;
                if (value == "explicit") {
                    spec.kind_ = Kind::Explicit;
                } else if (value == "rowexpr") {
                    spec.kind_ = Kind::RowExpr;
                } else if (value == "riordan") {
                    spec.kind_ = Kind::Riordan;
                } else if (value == "exp-riordan") {
                    spec.kind_ = Kind::ExpRiordan;
                } else {
                    throw SyntaxError(line_no, 1, "unknown kind '" + value + "'");
                }
                continue;
            }
            spec.fields_.emplace(std::move(key), std::move(value));
        }
        if (!saw_kind) {
            throw SyntaxError(1, 1, "missing 'kind' line");
        }
        spec.validate();
        return spec;
    }

    Kind kind() const { return kind_; }

    bool has(const std::string& key) const { return fields_.count(key) != 0; }

    const std::string& field(const std::string& key) const {
        auto it = fields_.find(key);
        if (it == fields_.end()) {
            throw SyntaxError(1, 1, "missing '" + key + "' line");
        }
        return it->second;
    }

    // Whether an exp-riordan file names a [d, h] pair instead of (c, r).
    bool is_dh_pair() const {
        return kind_ == Kind::ExpRiordan && has("d") && has("h");
    }

    // Builds the production matrix, evaluating any series expressions to the
    // given order.
    ProductionMatrix realize(std::size_t series_order) const {
        switch (kind_) {
            case Kind::Explicit:
                return ProductionMatrix(parse_rows(field("rows")));
            case Kind::RowExpr:
                return ProductionMatrix(
                    RowExprForm{IntExpr::parse(field("entry")), IntExpr::parse(field("support"))});
            case Kind::Riordan:
                return ProductionMatrix(RiordanForm{eval_series_expr(field("zeta"), series_order),
                                                    eval_series_expr(field("alpha"), series_order)});
            case Kind::ExpRiordan:
                if (is_dh_pair()) {
                    throw DomainError("this exp-riordan file names a [d,h] pair, not a production matrix");
                }
                return ProductionMatrix(ExpRiordanForm{eval_series_expr(field("c"), series_order),
                                                       eval_series_expr(field("r"), series_order + 1)});
        }
        throw DomainError("corrupt matrix spec");
    }

    PowerSeries series(const std::string& key, std::size_t order) const {
        return eval_series_expr(field(key), order);
    }

private:
    Kind kind_ = Kind::Explicit;
    std::map<std::string, std::string> fields_;

    static std::string_view trim(std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
            s.remove_prefix(1);
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
            s.remove_suffix(1);
        }
        return s;
    }

    static ExplicitFinite parse_rows(const std::string& value) {
        nlohmann::json j = nlohmann::json::parse(value, nullptr, false);
        if (j.is_discarded() || !j.is_array() || j.empty()) {
            throw SyntaxError(1, 1, "'rows' must be a nonempty array of integer arrays");
        }
        ExplicitFinite f;
        for (const auto& row : j) {
            if (!row.is_array()) {
                throw SyntaxError(1, 1, "'rows' must be a nonempty array of integer arrays");
            }
            std::vector<BigInt> r;
            for (const auto& e : row) {
                if (!e.is_number_integer()) {
                    throw SyntaxError(1, 1, "matrix entries must be integers");
                }
                BigInt v(e.get<long long>());
                if (v < 0) {
                    throw NegativeEntry("negative entry in explicit matrix: " + v.str());
                }
                r.push_back(std::move(v));
            }
            if (r.size() != j.size()) {
                throw SyntaxError(1, 1, "explicit matrix must be square");
            }
            f.rows.push_back(std::move(r));
        }
        return f;
    }

    void validate() const {
        switch (kind_) {
            case Kind::Explicit:
                (void)parse_rows(field("rows"));
                break;
            case Kind::RowExpr:
                (void)field("entry");
                if (!has("support")) {
                    throw UnboundedSupport("rowexpr spec needs a 'support' line");
                }
                break;
            case Kind::Riordan:
                (void)field("zeta");
                (void)field("alpha");
                break;
            case Kind::ExpRiordan:
                if (!is_dh_pair() && !(has("c") && has("r"))) {
                    throw SyntaxError(1, 1, "exp-riordan spec needs 'c' and 'r' (or 'd' and 'h') lines");
                }
                break;
        }
    }
};

// Rule files start with the 'axiom' keyword; matrix spec files with 'kind'.
inline bool looks_like_rule(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '#') {
            while (pos < text.size() && text[pos] != '\n') {
                ++pos;
            }
        } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        } else {
            break;
        }
    }
    return text.substr(pos, 5) == "axiom";
}

}  // namespace prodmat
