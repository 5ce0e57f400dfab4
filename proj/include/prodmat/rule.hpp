#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prodmat/errors.hpp"
#include "prodmat/production_matrix.hpp"
#include "prodmat/rational.hpp"

namespace prodmat {

// A label of a succession rule: its value is the number of sons it spawns;
// the optional color letter distinguishes labels sharing a value.
struct Label {
    std::size_t id;
    unsigned value;
    char color = '\0';

    std::string display() const {
        std::string s = "(" + std::to_string(value);
        if (color != '\0') {
            s += color;
        }
        return s + ")";
    }
};

// The label distribution at one level of the generating tree.
struct LevelProfile {
    std::size_t level;
    std::vector<BigInt> counts;  // indexed by label id
};

namespace detail {

struct RuleToken {
    unsigned value;
    char color;
    std::size_t line;
    std::size_t column;
};

// Scanner/parser for the rule DSL:
//
//   rule_file  := axiom_decl ';' production (';' production)*
//   axiom_decl := 'axiom' label
//   production := label '->' label+
//   label      := '(' positive_integer [color_letter] ')'
//
// Whitespace is insignificant and '#' comments run to end of line.
class RuleParser {
public:
    explicit RuleParser(std::string_view text) : text_(text) {}

    struct Production {
        RuleToken head;
        std::vector<RuleToken> successors;
    };

    struct ParsedRule {
        RuleToken axiom;
        std::vector<Production> productions;
    };

    ParsedRule parse() {
        expect_word("axiom");
        ParsedRule out;
        out.axiom = label();
        expect(';');
        out.productions.push_back(production());
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) {
                break;
            }
            expect(';');
            skip_ws();
            if (pos_ >= text_.size()) {
                break;  // trailing semicolon
            }
            out.productions.push_back(production());
        }
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(line_, col_, msg);
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        advance();
    }

    void expect_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) != w) {
            fail("expected '" + std::string(w) + "'");
        }
        for (std::size_t k = 0; k < w.size(); ++k) {
            advance();
        }
    }

    RuleToken label() {
        skip_ws();
        RuleToken t{0, '\0', line_, col_};
        expect('(');
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected a label value");
        }
        unsigned v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
            advance();
        }
        if (v == 0) {
            fail("label values are positive");
        }
        t.value = v;
        skip_ws();
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            t.color = text_[pos_];
            advance();
        }
        expect(')');
        return t;
    }

    Production production() {
        Production p;
        p.head = label();
        expect('-');
        if (pos_ >= text_.size() || text_[pos_] != '>') {
            fail("expected '->'");
        }
        advance();
        p.successors.push_back(label());
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '(') {
                p.successors.push_back(label());
            } else {
                break;
            }
        }
        return p;
    }
};

}  // namespace detail

// A finite succession rule: an axiom label plus one production per label.
// Label ids are assigned axiom first, then in production order.
class SuccessionRule {
public:
    static SuccessionRule parse(std::string_view text) {
        detail::RuleParser::ParsedRule raw = detail::RuleParser(text).parse();

        SuccessionRule rule;
        std::map<std::pair<unsigned, char>, std::size_t> ids;
        auto intern = [&](const detail::RuleToken& t) {
            auto key = std::make_pair(t.value, t.color);
            auto it = ids.find(key);
            if (it != ids.end()) {
                return it->second;
            }
            std::size_t id = rule.labels_.size();
            ids.emplace(key, id);
            rule.labels_.push_back(Label{id, t.value, t.color});
            return id;
        };

        intern(raw.axiom);
        std::vector<bool> defined;
        rule.productions_.resize(1);
        defined.resize(1, false);
        for (const auto& p : raw.productions) {
            std::size_t head = intern(p.head);
            if (head >= rule.productions_.size()) {
                rule.productions_.resize(head + 1);
                defined.resize(head + 1, false);
            }
            if (defined[head]) {
                throw SyntaxError(p.head.line, p.head.column,
                                  "label " + rule.labels_[head].display() + " has more than one production");
            }
            defined[head] = true;
            if (p.successors.size() != rule.labels_[head].value) {
                throw ArityMismatch("label " + rule.labels_[head].display() + " has value " +
                                    std::to_string(rule.labels_[head].value) + " but lists " +
                                    std::to_string(p.successors.size()) + " successors");
            }
            for (const auto& s : p.successors) {
                rule.productions_[head].push_back(intern(s));
            }
        }
        rule.productions_.resize(rule.labels_.size());
        defined.resize(rule.labels_.size(), false);
        for (const auto& l : rule.labels_) {
            if (!defined[l.id]) {
                throw UndefinedLabel("label " + l.display() + " has no production");
            }
        }
        return rule;
    }

    const std::vector<Label>& labels() const { return labels_; }

    // The axiom always gets id 0.
    std::size_t axiom() const { return 0; }

    const std::vector<std::vector<std::size_t>>& productions() const { return productions_; }

    // Canonical form; parse(str()) reproduces the rule.
    std::string str() const {
        std::string out = "axiom " + labels_[0].display();
        for (std::size_t k = 0; k < labels_.size(); ++k) {
            out += "; " + labels_[k].display() + " -> ";
            for (std::size_t s : productions_[k]) {
                out += labels_[s].display();
            }
        }
        return out;
    }

    // p_{k,i} = multiplicity of label i among the successors of label k;
    // row 0 is the axiom's production.
    ProductionMatrix to_production_matrix() const {
        const std::size_t q = labels_.size();
        std::vector<std::vector<BigInt>> rows(q, std::vector<BigInt>(q, BigInt(0)));
        for (std::size_t k = 0; k < q; ++k) {
            for (std::size_t s : productions_[k]) {
                rows[k][s] += 1;
            }
        }
        return ProductionMatrix(ExplicitFinite{std::move(rows)});
    }

    // Label distributions of levels 0..levels-1, computed directly on the
    // rule (independently of the production-matrix code path).
    std::vector<LevelProfile> level_profiles(std::size_t levels) const {
        std::vector<LevelProfile> out;
        const std::size_t q = labels_.size();
        std::vector<BigInt> counts(q, BigInt(0));
        counts[0] = 1;
        for (std::size_t n = 0; n < levels; ++n) {
            out.push_back(LevelProfile{n, counts});
            std::vector<BigInt> next(q, BigInt(0));
            for (std::size_t k = 0; k < q; ++k) {
                if (counts[k] == 0) {
                    continue;
                }
                for (std::size_t s : productions_[k]) {
                    next[s] += counts[k];
                }
            }
            counts = std::move(next);
        }
        return out;
    }

    bool operator==(const SuccessionRule& other) const {
        if (labels_.size() != other.labels_.size() || productions_ != other.productions_) {
            return false;
        }
        for (std::size_t k = 0; k < labels_.size(); ++k) {
            if (labels_[k].value != other.labels_[k].value || labels_[k].color != other.labels_[k].color) {
                return false;
            }
        }
        return true;
    }

private:
    std::vector<Label> labels_;
    std::vector<std::vector<std::size_t>> productions_;
};

inline SuccessionRule parse_rule(std::string_view text) {
    return SuccessionRule::parse(text);
}

}  // namespace prodmat
