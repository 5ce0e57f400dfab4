// Command-line front end: parses rule/matrix spec files, dispatches the
// computations and prints exact results. Exit codes: 0 on success, 1 when a
// computation reports a negative outcome (no rational gf found, not Riordan,
// matrices differ, a table row fails), 2 on input or parse errors.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "prodmat/prodmat.hpp"

namespace {

using namespace prodmat;

struct CommandFailure {
    int exit_code;
    std::string kind;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CommandFailure{2, "io", "cannot open '" + path + "'"};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Loads either a rule file (starts with 'axiom') or a matrix spec file;
// series expressions are evaluated at the given order.
ProductionMatrix load_matrix(const std::string& path, std::size_t series_order) {
    std::string text = read_file(path);
    if (looks_like_rule(text)) {
        return parse_rule(text).to_production_matrix();
    }
    return MatrixSpec::parse(text).realize(series_order);
}

MatrixSpec load_spec(const std::string& path) {
    return MatrixSpec::parse(read_file(path));
}

std::string join_bigints(const std::vector<BigInt>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += " ";
        }
        out += v[i].str();
    }
    return out;
}

std::string join_rationals(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += " ";
        }
        out += v[i].str();
    }
    return out;
}

PowerSeries ordinary_gf_series(const ProductionMatrix& p, std::size_t order) {
    SequenceWindow w = sequence(p, order + 1);
    std::vector<Rational> cs(w.terms.size());
    for (std::size_t i = 0; i < w.terms.size(); ++i) {
        cs[i] = Rational(w.terms[i]);
    }
    return PowerSeries(std::move(cs));
}

int cmd_seq(const std::string& spec, std::size_t terms) {
    ProductionMatrix p = load_matrix(spec, terms + 2);
    std::cout << join_bigints(sequence(p, terms).terms) << "\n";
    return 0;
}

int cmd_eco(const std::string& spec, std::size_t levels) {
    ProductionMatrix p = load_matrix(spec, levels + 2);
    for (const auto& row : eco_matrix(p, levels).rows) {
        std::cout << join_bigints(row) << "\n";
    }
    return 0;
}

int cmd_labels(const std::string& spec, std::size_t terms) {
    ProductionMatrix p = load_matrix(spec, terms + 2);
    std::cout << join_bigints(labels(p, terms)) << "\n";
    return 0;
}

int cmd_gf(const std::string& spec, std::size_t order, bool rational, std::size_t max_order,
           std::size_t window) {
    if (!rational) {
        ProductionMatrix p = load_matrix(spec, order + 2);
        std::cout << ordinary_gf_series(p, order).str() << "\n";
        return 0;
    }
    ProductionMatrix p = load_matrix(spec, 2 * window + max_order + 2);
    if (p.is_finite()) {
        std::cout << rational_gf(std::get<ExplicitFinite>(p.form())).str() << "\n";
        return 0;
    }
    auto report = krylov_detect(p, max_order, window);
    if (!report) {
        throw CommandFailure{1, "not-found", "no Krylov dependence of order <= " +
                                                 std::to_string(max_order)};
    }
    std::cout << report->gf.str() << "\n";
    return 0;
}

int cmd_egf(const std::string& spec, std::size_t terms) {
    ProductionMatrix p = load_matrix(spec, terms + 2);
    std::cout << egf_coefficients(p, terms).str() << "\n";
    return 0;
}

int cmd_riordan_detect(const std::string& spec, std::size_t levels) {
    ProductionMatrix p = load_matrix(spec, levels + 2);
    auto result = detect_zeta_alpha(eco_matrix(p, levels));
    if (const auto* bad = std::get_if<NotRiordan>(&result)) {
        throw CommandFailure{1, "not-riordan",
                             "row " + std::to_string(bad->row) + " col " + std::to_string(bad->col) +
                                 ": " + bad->reason};
    }
    const auto& za = std::get<ZetaAlpha>(result);
    std::cout << "zeta: " << join_rationals(za.zeta.coeffs()) << "\n";
    std::cout << "alpha: " << join_rationals(za.alpha.coeffs()) << "\n";
    return 0;
}

int cmd_riordan_build(const std::string& spec, std::size_t order, std::size_t levels) {
    MatrixSpec ms = load_spec(spec);
    if (ms.kind() != MatrixSpec::Kind::Riordan) {
        throw CommandFailure{2, "input", "riordan-build needs a 'kind: riordan' spec"};
    }
    ZetaAlpha za{ms.series("zeta", order), ms.series("alpha", order)};
    ProductionMatrix p = production_from_zeta_alpha(za);
    std::cout << "P:\n";
    for (std::size_t i = 0; i < levels; ++i) {
        std::cout << join_bigints(p.row(i, std::min(i + 1, order))) << "\n";
    }
    GfPipeline pipe = gf_pipeline(za, order);
    std::cout << "h: " << pipe.h.str() << "\n";
    std::cout << "d: " << pipe.d.str() << "\n";
    std::cout << "f: " << pipe.f.str() << "\n";
    return 0;
}

int cmd_er_roundtrip(const std::string& spec, std::size_t order) {
    MatrixSpec ms = load_spec(spec);
    if (ms.kind() != MatrixSpec::Kind::ExpRiordan) {
        throw CommandFailure{2, "input", "er-roundtrip needs a 'kind: exp-riordan' spec"};
    }
    if (ms.is_dh_pair()) {
        PowerSeries d = ms.series("d", order + 1);
        PowerSeries h = ms.series("h", order + 1);
        CRPair cr = cr_from_dh(ExpRiordanPair{d, h}, order);
        ExpRiordanPair back = dh_from_cr(cr, order);
        std::cout << "c: " << cr.c.str() << "\n";
        std::cout << "r: " << cr.r.str() << "\n";
        std::cout << "d: " << back.d.str() << "\n";
        std::cout << "h: " << back.h.str() << "\n";
        bool ok = back.d == d.truncated(order) && back.h == h.truncated(order);
        std::cout << "roundtrip: " << (ok ? "OK" : "FAIL") << "\n";
        return ok ? 0 : 1;
    }
    PowerSeries c = ms.series("c", order + 1);
    PowerSeries r = ms.series("r", order + 1);
    ExpRiordanPair dh = dh_from_cr(CRPair{c, r}, order + 1);
    CRPair back = cr_from_dh(dh, order);
    std::cout << "d: " << dh.d.truncated(order).str() << "\n";
    std::cout << "h: " << dh.h.truncated(order).str() << "\n";
    std::cout << "c: " << back.c.str() << "\n";
    std::cout << "r: " << back.r.str() << "\n";
    bool ok = back.c == c.truncated(order) && back.r == r.truncated(order);
    std::cout << "roundtrip: " << (ok ? "OK" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_recurrence(const std::string& spec) {
    ProductionMatrix p = load_matrix(spec, 8);
    if (!p.is_finite()) {
        throw CommandFailure{2, "input", "recurrence needs a finite (explicit or rule) spec"};
    }
    const auto& fm = std::get<ExplicitFinite>(p.form());
    Polynomial minpoly = minimal_polynomial(fm);
    Polynomial annihilator = annihilator_of_e(fm);
    SequenceWindow seq = sequence(p, 3 * fm.dim() + 4);
    Polynomial seqrec = minimal_sequence_recurrence(seq.terms);
    Polynomial charpoly = char_polynomial(fm);
    std::cout << "minimal_polynomial: " << minpoly.str("t", true) << "\n";
    std::cout << "annihilator_of_e: " << annihilator.str("t", true) << "\n";
    std::cout << "sequence_recurrence: " << seqrec.str("t", true) << "\n";
    bool chain = seqrec.divides(annihilator) && annihilator.divides(minpoly) &&
                 minpoly.divides(charpoly);
    std::cout << "divisor_chain: " << (chain ? "OK" : "FAIL") << "\n";
    return chain ? 0 : 1;
}

int cmd_krylov(const std::string& spec, std::size_t max_order, std::size_t window) {
    ProductionMatrix p = load_matrix(spec, 2 * window + max_order + 2);
    auto report = krylov_detect(p, max_order, window);
    if (!report) {
        throw CommandFailure{1, "not-found", "no Krylov dependence of order <= " +
                                                 std::to_string(max_order)};
    }
    std::cout << "order: " << report->charpoly_divisor.degree() << "\n";
    std::cout << "charpoly: " << report->charpoly_divisor.str("t", true) << "\n";
    std::cout << "initial: " << join_bigints(report->initial_terms) << "\n";
    std::cout << "gf: " << report->gf.str() << "\n";
    return 0;
}

int cmd_equiv(const std::vector<std::string>& specs) {
    if (specs.size() != 2) {
        throw CommandFailure{2, "input", "equiv needs exactly two --spec files"};
    }
    ProductionMatrix a = load_matrix(specs[0], 8);
    ProductionMatrix b = load_matrix(specs[1], 8);
    if (!a.is_finite() || !b.is_finite()) {
        throw CommandFailure{2, "input", "equiv needs finite (explicit or rule) specs"};
    }
    bool same = equivalent(std::get<ExplicitFinite>(a.form()), std::get<ExplicitFinite>(b.form()));
    std::cout << (same ? "EQUIVALENT" : "DIFFERENT") << "\n";
    return same ? 0 : 1;
}

struct TableRow {
    std::string zeta;
    std::string alpha;
    std::vector<BigInt> terms;
    std::string a_number;
};

std::vector<TableRow> parse_table(const std::string& text) {
    std::vector<TableRow> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        }
        if (blank) {
            continue;
        }
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            std::size_t bar = line.find('|', start);
            parts.push_back(line.substr(start, bar == std::string::npos ? std::string::npos
                                                                        : bar - start));
            if (bar == std::string::npos) {
                break;
            }
            start = bar + 1;
        }
        if (parts.size() != 4) {
            throw SyntaxError(line_no, 1, "table rows need 'zeta | alpha | terms | A-number'");
        }
        auto trim = [](std::string s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
                s.erase(s.begin());
            }
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
                s.pop_back();
            }
            return s;
        };
        TableRow row;
        row.zeta = trim(parts[0]);
        row.alpha = trim(parts[1]);
        row.a_number = trim(parts[3]);
        std::istringstream ts(trim(parts[2]));
        std::string tok;
        while (std::getline(ts, tok, ',')) {
            row.terms.emplace_back(trim(tok));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// Every row must pass both the ECO-iteration path and the gf-pipeline path.
int cmd_table_verify(const std::string& table_path) {
    std::vector<TableRow> rows = parse_table(read_file(table_path));
    const std::size_t cross_terms = 10;
    bool all_ok = true;
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        const TableRow& row = rows[idx];
        std::string status = "PASS";
        try {
            const std::size_t order = std::max(cross_terms, row.terms.size()) + 1;
            ZetaAlpha za{eval_series_expr(row.zeta, order), eval_series_expr(row.alpha, order)};
            SequenceWindow eco_seq = sequence(production_from_zeta_alpha(za), cross_terms);
            PowerSeries f = gf_pipeline(za, order).f;
            for (std::size_t n = 0; n < row.terms.size(); ++n) {
                if (eco_seq.terms[n] != row.terms[n] || f.coeff(n) != Rational(row.terms[n])) {
                    status = "FAIL (term " + std::to_string(n) + ")";
                    break;
                }
            }
            if (status == "PASS") {
                for (std::size_t n = 0; n < cross_terms; ++n) {
                    if (f.coeff(n) != Rational(eco_seq.terms[n])) {
                        status = "FAIL (cross-path term " + std::to_string(n) + ")";
                        break;
                    }
                }
            }
        } catch (const Error& e) {
            status = std::string("FAIL (") + e.what() + ")";
        }
        if (status != "PASS") {
            all_ok = false;
        }
        std::cout << "row " << idx + 1 << " (" << row.a_number << "): " << status << "\n";
    }
    std::cout << (all_ok ? "all rows passed" : "some rows failed") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on production matrices of succession rules"};
    app.require_subcommand(1);

    std::string spec;
    std::vector<std::string> specs;
    std::string table_path = "data/table_s3.txt";
    std::size_t terms = 12;
    std::size_t levels = 12;
    std::size_t order = 12;
    std::size_t max_order = 8;
    std::size_t window = 24;
    bool rational = false;

    auto* seq_cmd = app.add_subcommand("seq", "Induced sequence of a rule or matrix");
    seq_cmd->add_option("--spec", spec, "rule or matrix spec file")->required();
    seq_cmd->add_option("--terms", terms, "number of terms");

    auto* eco_cmd = app.add_subcommand("eco", "ECO matrix rows (level label distributions)");
    eco_cmd->add_option("--spec", spec)->required();
    eco_cmd->add_option("--levels", levels, "number of rows");

    auto* labels_cmd = app.add_subcommand("labels", "Row sums of the production matrix");
    labels_cmd->add_option("--spec", spec)->required();
    labels_cmd->add_option("--terms", terms, "number of labels");

    auto* gf_cmd = app.add_subcommand("gf", "Ordinary generating function of the sequence");
    gf_cmd->add_option("--spec", spec)->required();
    gf_cmd->add_option("--order", order, "truncation order");
    gf_cmd->add_flag("--rational", rational, "extract a rational closed form");
    gf_cmd->add_option("--max-order", max_order, "Krylov dependence bound");
    gf_cmd->add_option("--window", window, "Krylov truncation window");

    auto* egf_cmd = app.add_subcommand("egf", "Exponential generating function coefficients");
    egf_cmd->add_option("--spec", spec)->required();
    egf_cmd->add_option("--terms", terms, "number of terms");

    auto* rd_cmd = app.add_subcommand("riordan-detect", "Recover zeta/alpha from the ECO matrix");
    rd_cmd->add_option("--spec", spec)->required();
    rd_cmd->add_option("--levels", levels, "rows to inspect");

    auto* rb_cmd = app.add_subcommand("riordan-build", "Production matrix and gf pipeline from zeta/alpha");
    rb_cmd->add_option("--spec", spec)->required();
    rb_cmd->add_option("--order", order, "truncation order");
    std::size_t build_levels = 6;
    rb_cmd->add_option("--levels", build_levels, "production matrix rows to print");

    auto* er_cmd = app.add_subcommand("er-roundtrip", "c/r <-> d/h conversions with residuals");
    er_cmd->add_option("--spec", spec)->required();
    er_cmd->add_option("--order", order, "truncation order");

    auto* rec_cmd = app.add_subcommand("recurrence", "Minimal polynomial, annihilator and sequence recurrence");
    rec_cmd->add_option("--spec", spec)->required();

    auto* kry_cmd = app.add_subcommand("krylov", "Krylov dependence and rational gf");
    kry_cmd->add_option("--spec", spec)->required();
    kry_cmd->add_option("--max-order", max_order, "dependence order bound");
    kry_cmd->add_option("--window", window, "truncation window");

    auto* eq_cmd = app.add_subcommand("equiv", "Decide equivalence of two finite specs");
    eq_cmd->add_option("--spec", specs, "two spec files")->required()->expected(2);

    auto* tv_cmd = app.add_subcommand("table-verify", "Verify the bundled zeta/alpha golden table");
    tv_cmd->add_option("--table", table_path, "table file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (seq_cmd->parsed()) return cmd_seq(spec, terms);
        if (eco_cmd->parsed()) return cmd_eco(spec, levels);
        if (labels_cmd->parsed()) return cmd_labels(spec, terms);
        if (gf_cmd->parsed()) return cmd_gf(spec, order, rational, max_order, window);
        if (egf_cmd->parsed()) return cmd_egf(spec, terms);
        if (rd_cmd->parsed()) return cmd_riordan_detect(spec, levels);
        if (rb_cmd->parsed()) return cmd_riordan_build(spec, order, build_levels);
        if (er_cmd->parsed()) return cmd_er_roundtrip(spec, order);
        if (rec_cmd->parsed()) return cmd_recurrence(spec);
        if (kry_cmd->parsed()) return cmd_krylov(spec, max_order, window);
        if (eq_cmd->parsed()) return cmd_equiv(specs);
        if (tv_cmd->parsed()) return cmd_table_verify(table_path);
    } catch (const CommandFailure& f) {
        std::cerr << "error: " << f.kind << ": " << f.message << "\n";
        return f.exit_code;
    } catch (const SyntaxError& e) {
        std::cerr << "error: syntax: " << e.what() << "\n";
        return 2;
    } catch (const Inconsistent& e) {
        std::cerr << "error: inconsistent: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
