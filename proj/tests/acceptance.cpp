// Acceptance suite: runs every criterion with exact arithmetic and prints
// one pass/fail line per criterion.

#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "prodmat/prodmat.hpp"

using namespace prodmat;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw CheckFailure(what);
    }
}

std::vector<BigInt> bigints(std::vector<long long> v) {
    std::vector<BigInt> out;
    for (long long x : v) {
        out.emplace_back(x);
    }
    return out;
}

void require_terms(const SequenceWindow& seq, std::vector<long long> expect, const std::string& what) {
    require(seq.terms.size() >= expect.size(), what + ": too few terms");
    for (std::size_t i = 0; i < expect.size(); ++i) {
        require(seq.terms[i] == BigInt(expect[i]), what + ": term " + std::to_string(i));
    }
}

PowerSeries expr(const char* text, std::size_t order) {
    return eval_series_expr(text, order);
}

// ---- criteria ----------------------------------------------------------

void criterion_central_binomial() {
    ProductionMatrix p(RiordanForm{expr("1/(1-z)^2", 12), expr("1/(1-z)", 12)});
    require_terms(sequence(p, 8), {1, 2, 6, 20, 70, 252, 924, 3432}, "sequence");
    EcoMatrix a = eco_matrix(p, 6);
    std::vector<std::vector<long long>> display = {{1},
                                                   {1, 1},
                                                   {3, 2, 1},
                                                   {10, 6, 3, 1},
                                                   {35, 20, 10, 4, 1},
                                                   {126, 70, 35, 15, 5, 1}};
    for (std::size_t n = 0; n < display.size(); ++n) {
        require(a.rows[n] == bigints(display[n]), "ECO row " + std::to_string(n));
    }
}

void criterion_bell() {
    ProductionMatrix p(RowExprForm{IntExpr::parse("i*[j=i] + [j=i+1]"), IntExpr::parse("i+1")});
    // The eighth Bell number is 877 (A000110); both routes below agree on it.
    require_terms(sequence(p, 8), {1, 1, 2, 5, 15, 52, 203, 877}, "sequence");
    PowerSeries matrix_route = egf_coefficients(p, 11);
    PowerSeries expm1 = exp(PowerSeries::identity(10)) - Rational(1);
    PowerSeries series_route = compose(exp(PowerSeries::identity(10)), expm1);
    require(matrix_route == series_route, "egf routes disagree");
}

void criterion_golden_table() {
    std::ifstream in(std::string(PRODMAT_DATA_DIR) + "/table_s3.txt");
    require(in.good(), "table_s3.txt not readable");
    std::string line;
    std::size_t rows = 0;
    auto trim = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
            s.erase(s.begin());
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
            s.pop_back();
        }
        return s;
    };
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        if (line.find('|') == std::string::npos) {
            continue;
        }
        std::vector<std::string> parts;
        std::stringstream ss(line);
        std::string part;
        while (std::getline(ss, part, '|')) {
            parts.push_back(trim(part));
        }
        require(parts.size() == 4, "malformed table row");
        ZetaAlpha za{eval_series_expr(parts[0], 12), eval_series_expr(parts[1], 12)};
        SequenceWindow eco_path = sequence(production_from_zeta_alpha(za), 10);
        PowerSeries pipeline_path = gf_pipeline(za, 12).f;
        std::stringstream ts(parts[2]);
        std::string tok;
        std::size_t n = 0;
        while (std::getline(ts, tok, ',')) {
            BigInt expect(trim(tok));
            require(eco_path.terms[n] == expect,
                    parts[3] + ": ECO term " + std::to_string(n));
            require(pipeline_path.coeff(n) == Rational(expect),
                    parts[3] + ": pipeline term " + std::to_string(n));
            ++n;
        }
        for (std::size_t k = 0; k < 10; ++k) {
            require(pipeline_path.coeff(k) == Rational(eco_path.terms[k]),
                    parts[3] + ": cross-path term " + std::to_string(k));
        }
        ++rows;
    }
    require(rows == 41, "expected 41 table rows, saw " + std::to_string(rows));
}

void criterion_noncrossing() {
    ZetaAlpha za{expr("(3-2*z)/((1-z)*(1-2*z))", 12), expr("1/((1-z)*(1-2*z))", 12)};
    GfPipeline pipe = gf_pipeline(za, 10);
    PowerSeries zf = shift_up(pipe.f).truncated(10);
    PowerSeries residual = pow(1 + zf, 3) - pipe.f * (1 - zf);
    require(residual.is_zero(), "(1+zf)^3 - f(1-zf) != 0 mod z^11");
    require_terms(sequence(production_from_zeta_alpha(za), 5), {1, 4, 23, 156, 1162}, "terms");
}

void criterion_ternary_family() {
    const std::size_t n = 10;
    // Worked example: alpha = T, zeta = (T-1)/z - 1/(1-z).
    ZetaAlpha ternary{expr("(T-1)/z - 1/(1-z)", 12), expr("T", 12)};
    GfPipeline pipe = gf_pipeline(ternary, n);
    PowerSeries residual = pipe.h - (1 + shift_up(pow(pipe.h, 4)).truncated(n));
    require(residual.is_zero(), "h - 1 - z h^4 != 0 mod z^11");
    require(pipe.f == pipe.h, "f != h");
    require_terms(sequence(production_from_zeta_alpha(ternary), 6), {1, 1, 4, 22, 140, 969},
                  "terms");

    // Generalized family: alpha_p = 1 + y alpha_p^p forces h = 1 + z h^{p+1}.
    for (std::size_t p = 3; p <= 5; ++p) {
        PowerSeries alpha = PowerSeries::constant(1, 12);
        for (std::size_t it = 0; it <= 12; ++it) {
            alpha = (1 + shift_up(pow(alpha, p)).truncated(12));
        }
        PowerSeries zeta = shift_down(alpha - Rational(1), 1) - expr("1/(1-z)", 11);
        ZetaAlpha za{zeta, alpha.truncated(11)};
        GfPipeline family = gf_pipeline(za, n);
        PowerSeries fam_residual =
            family.h - (1 + shift_up(pow(family.h, p + 1)).truncated(n));
        require(fam_residual.is_zero(), "h residual for p = " + std::to_string(p));
        require(family.f == family.h, "f != h for p = " + std::to_string(p));
        SequenceWindow seq = sequence(production_from_zeta_alpha(za), n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            require(Rational(seq.terms[k]) == family.f.coeff(k),
                    "ECO/pipeline mismatch for p = " + std::to_string(p));
        }
    }
}

void criterion_stirling_pascal() {
    CRPair cr = cr_from_dh(ExpRiordanPair{expr("1/(1-z)", 11), expr("-log(1-z)/z", 11)}, 10);
    PowerSeries e = exp(PowerSeries::identity(10));
    require(cr.c == e, "c != exp");
    require(cr.r == e, "r != exp");
    ProductionMatrix p = production_from_cr(cr);
    for (std::size_t i = 0; i < 6; ++i) {
        std::vector<BigInt> row = p.row(i, i + 1);
        for (std::size_t j = 0; j <= i + 1; ++j) {
            require(row[j] == binomial(i + 1, j), "binomial row " + std::to_string(i));
        }
    }
    require(labels(p, 5) == bigints({2, 4, 8, 16, 32}), "labels");
}

void criterion_falling_factorial() {
    ExpRiordanPair dh = dh_from_cr(CRPair{expr("1/(1-z)^2", 10), expr("1/(1-z)", 10)}, 10);
    require(dh.d == expr("1/sqrt(1-2*z)", 10), "d != 1/sqrt(1-2z)");
    require(dh.h == expr("(1-sqrt(1-2*z))/z", 10), "h != (1-sqrt(1-2z))/z");
    ProductionMatrix p(ExpRiordanForm{expr("1/(1-z)^2", 12), expr("1/(1-z)", 13)});
    EcoMatrix a = eco_matrix(p, 6);
    std::vector<std::vector<long long>> display = {{1},
                                                   {1, 1},
                                                   {3, 3, 1},
                                                   {15, 15, 6, 1},
                                                   {105, 105, 45, 10, 1},
                                                   {945, 945, 420, 105, 15, 1}};
    for (std::size_t n = 0; n < display.size(); ++n) {
        require(a.rows[n] == bigints(display[n]), "ECO row " + std::to_string(n));
    }
    require_terms(sequence(p, 6), {1, 2, 7, 37, 266, 2431}, "row sums");
}

void criterion_divisor_chain() {
    FiniteMatrix p{{bigints({2, 1, 1, 0}), bigints({0, 3, 0, 0}), bigints({0, 1, 2, 1}),
                    bigints({0, 1, 1, 3})}};
    Polynomial minpoly = minimal_polynomial(p);
    Polynomial annih = annihilator_of_e(p);
    Polynomial seqrec = minimal_sequence_recurrence(sequence(ProductionMatrix(p), 12).terms);
    require(minpoly == Polynomial({30, -55, 36, -10, 1}), "minimal polynomial");
    require(annih == Polynomial({-15, 20, -8, 1}), "annihilator of e");
    require(seqrec == Polynomial({5, -5, 1}), "sequence recurrence");
    require(seqrec.divides(annih), "seqrec | annihilator");
    require(annih.divides(minpoly), "annihilator | minpoly");
    require(minpoly.divides(char_polynomial(p)), "minpoly | charpoly");
}

void criterion_krylov() {
    ProductionMatrix parity(RowExprForm{
        IntExpr::parse("[j=0]*(i+1-(i mod 2)) + [j=1]*((i mod 2)+[i=0]) + [j=i+1]*[i>=1]"),
        IntExpr::parse("i+1")});
    auto first = krylov_detect(parity, 8, 24);
    require(first.has_value(), "first example: no dependence");
    require(first->gf == RationalGF::make(Polynomial{1, -1}, Polynomial{1, -3, 1, -1}),
            "first example gf");
    require(first->initial_terms == bigints({1, 2, 5}), "first example initial values");
    FiniteMatrix finite{{bigints({1, 1, 0}), bigints({1, 1, 1}), bigints({2, 1, 1})}};
    require(first->gf == rational_gf(finite), "finite equivalent");

    ProductionMatrix tri(
        RowExprForm{IntExpr::parse("[j=0]*((i+1)*(i+2)/2) + [j=i+1]"), IntExpr::parse("i+1")});
    auto second = krylov_detect(tri, 8, 24);
    require(second.has_value(), "second example: no dependence");
    require(second->gf == RationalGF::make(Polynomial{1, -2, 1}, Polynomial{1, -4, 3, -1}),
            "second example gf");
    require_terms(sequence(tri, 10), {1, 2, 6, 19, 60, 189, 595, 1873, 5896, 18560},
                  "second example terms");

    for (long long alpha = 0; alpha <= 4; ++alpha) {
        std::string a = std::to_string(alpha);
        ProductionMatrix fam(RowExprForm{
            IntExpr::parse("[j=0]*(" + a +
                           " + (i - (i mod 2))/2) + [j=1]*([i=0] + [i mod 2 = 1]) + [j=i+1]*[i>=1]"),
            IntExpr::parse("i+1")});
        auto rep = krylov_detect(fam, 4, 16);
        require(rep.has_value(), "alpha family " + a);
        RationalGF expect = RationalGF::make(
            Polynomial{1, -1}, Polynomial{Rational(1), Rational(-(alpha + 2)), Rational(alpha)});
        require(rep->gf == expect, "alpha family gf " + a);
        SequenceWindow seq = sequence(fam, 12);
        PowerSeries f = expect.expand(11);
        for (std::size_t n = 0; n < 12; ++n) {
            require(Rational(seq.terms[n]) == f.coeff(n), "alpha family cross-path " + a);
        }
        if (alpha == 0) {
            require_terms(seq, {1, 1, 2, 4, 8, 16}, "alpha 0 opening");
        }
        if (alpha == 1) {
            require_terms(seq, {1, 2, 5, 13, 34, 89, 233}, "alpha 1 opening");
        }
    }
}

void criterion_quadratic_family() {
    struct Triple {
        long long a, b, g;
    };
    for (Triple t : {Triple{1, 1, 1}, Triple{2, 0, 1}, Triple{1, 2, 0}}) {
        Polynomial detected = parametric_family_check(t.a, t.b, t.g);
        Polynomial expect{-(Rational(t.g) + 1), -(Rational(t.a) - t.b - 2 * t.g - 3),
                          -(Rational(t.a) + t.b + t.g + 3), Rational(1)};
        require(detected == expect, "triple (" + std::to_string(t.a) + "," + std::to_string(t.b) +
                                        "," + std::to_string(t.g) + ")");
    }
}

void criterion_property_suites() {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> small(0, 3);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    auto random_rational = [&] { return Rational(num(rng), den(rng)); };
    auto random_series = [&](std::size_t order) {
        std::vector<Rational> cs(order + 1);
        for (auto& c : cs) {
            c = random_rational();
        }
        return PowerSeries(cs);
    };

    // Shift identity DA_P = A_P P on truncations, for all four forms.
    auto check_shift = [&](const ProductionMatrix& p) {
        EcoMatrix a = eco_matrix(p, 7);
        for (std::size_t n = 0; n + 1 < 7; ++n) {
            std::size_t width = a.rows[n + 1].size() + 2;
            std::vector<BigInt> expect(width, BigInt(0));
            for (std::size_t i = 0; i < a.rows[n].size(); ++i) {
                if (a.rows[n][i] == 0) {
                    continue;
                }
                std::vector<BigInt> row = p.row(i, width - 1);
                for (std::size_t j = 0; j < width; ++j) {
                    expect[j] += a.rows[n][i] * row[j];
                }
            }
            for (std::size_t j = 0; j < width; ++j) {
                BigInt got = j < a.rows[n + 1].size() ? a.rows[n + 1][j] : BigInt(0);
                require(got == expect[j], "shift identity");
            }
        }
    };
    for (int it = 0; it < 26; ++it) {  // explicit
        std::size_t q = 1 + it % 5;
        std::vector<std::vector<BigInt>> rows(q, std::vector<BigInt>(q));
        for (auto& row : rows) {
            for (auto& e : row) {
                e = small(rng);
            }
        }
        check_shift(ProductionMatrix(ExplicitFinite{rows}));
    }
    for (int it = 0; it < 26; ++it) {  // rowexpr (quadratic-column family)
        std::string a = std::to_string(small(rng));
        std::string b = std::to_string(small(rng));
        std::string g = std::to_string(small(rng));
        check_shift(ProductionMatrix(RowExprForm{
            IntExpr::parse("[j=0]*(" + a + "*(i+1)^2+" + b + "*(i+1)+" + g + ") + [j=i+1]"),
            IntExpr::parse("i+1")}));
    }
    for (int it = 0; it < 26; ++it) {  // riordan
        std::vector<Rational> zc(12), ac(12);
        for (auto& c : zc) {
            c = small(rng);
        }
        for (auto& c : ac) {
            c = small(rng);
        }
        ac[0] = 1 + small(rng);
        check_shift(ProductionMatrix(RiordanForm{PowerSeries(zc), PowerSeries(ac)}));
    }
    for (int it = 0; it < 26; ++it) {  // exp-riordan
        std::vector<Rational> cc(12), rc(13);
        for (auto& c : cc) {
            c = small(rng);
        }
        for (auto& c : rc) {
            c = small(rng);
        }
        check_shift(ProductionMatrix(ExpRiordanForm{PowerSeries(cc), PowerSeries(rc)}));
    }

    // Series round trips.
    for (int it = 0; it < 110; ++it) {
        std::size_t order = 4 + it % 9;
        PowerSeries f = random_series(order);
        PowerSeries g = random_series(order);
        if (g.constant_term() == 0) {
            g = g + Rational(1);
        }
        require(div(f, g) * g == f, "mul(div(f,g),g) != f");

        std::vector<Rational> rc = f.coeffs();
        rc[0] = 0;
        if (order >= 1 && rc[1] == 0) {
            rc[1] = 1;
        }
        PowerSeries r((std::vector<Rational>(rc)));
        require(compose(reversion(r), r) == PowerSeries::identity(order),
                "compose(reversion(f),f) != z");

        std::vector<Rational> pc = f.coeffs();
        pc[0] = 1;
        PowerSeries p((std::vector<Rational>(pc)));
        require(exp(log(p)) == p, "exp(log(f)) != f");
    }

    // Riordan detect(construct) identity.
    for (int it = 0; it < 110; ++it) {
        std::vector<Rational> zc(12), ac(12);
        for (auto& c : zc) {
            c = small(rng);
        }
        for (auto& c : ac) {
            c = small(rng);
        }
        ac[0] = 1 + small(rng);
        ZetaAlpha za{PowerSeries(zc), PowerSeries(ac)};
        auto detected = detect_zeta_alpha(eco_matrix(production_from_zeta_alpha(za), 9));
        auto* rec = std::get_if<ZetaAlpha>(&detected);
        require(rec != nullptr, "detect failed on a Riordan production matrix");
        for (std::size_t k = 0; k <= rec->zeta.order(); ++k) {
            require(rec->zeta.coeff(k) == za.zeta.coeff(k), "zeta round trip");
            require(rec->alpha.coeff(k) == za.alpha.coeff(k), "alpha round trip");
        }
    }

    // Exponential Riordan cr <-> dh round trips.
    for (int it = 0; it < 110; ++it) {
        std::vector<Rational> cc(10), rc(10);
        for (auto& c : cc) {
            c = random_rational();
        }
        for (auto& c : rc) {
            c = random_rational();
        }
        if (rc[0] == 0) {
            rc[0] = 1;
        }
        CRPair cr{PowerSeries(cc), PowerSeries(rc)};
        ExpRiordanPair dh = dh_from_cr(cr, 9);
        CRPair back = cr_from_dh(dh, 8);
        require(back.c == cr.c.truncated(8) && back.r == cr.r.truncated(8), "cr round trip");
        ExpRiordanPair dh2 = dh_from_cr(back, 8);
        require(dh2.d == dh.d.truncated(8) && dh2.h == dh.h.truncated(8), "dh round trip");
    }

    // rational_gf vs recurrence cross paths on random finite matrices.
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::uniform_int_distribution<int> entry(0, 4);
    for (int it = 0; it < 110; ++it) {
        std::size_t q = dim(rng);
        std::vector<std::vector<BigInt>> rows(q, std::vector<BigInt>(q));
        for (auto& row : rows) {
            for (auto& e : row) {
                e = entry(rng);
            }
        }
        FiniteMatrix p{rows};
        SequenceWindow seq = sequence(ProductionMatrix(p), 3 * q + 4);
        RationalGF gf = rational_gf(p);
        PowerSeries f = gf.expand(3 * q + 3);
        for (std::size_t n = 0; n < seq.terms.size(); ++n) {
            require(f.coeff(n) == Rational(seq.terms[n]), "resolvent vs sequence");
        }
        Polynomial seqrec = minimal_sequence_recurrence(seq.terms);
        // The recurrence's characteristic polynomial reversed gives a
        // denominator that the reduced gf denominator must divide.
        std::vector<Rational> rc(seqrec.degree() + 1);
        for (int i = 0; i <= seqrec.degree(); ++i) {
            rc[i] = seqrec.coeff(seqrec.degree() - i);
        }
        require(gf.den.divides(Polynomial(rc)), "gf denominator vs recurrence");
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> run;
    };
    std::vector<Criterion> criteria = {
        {"central binomial sequence and ECO matrix", criterion_central_binomial},
        {"Bell matrix terms and egf routes", criterion_bell},
        {"golden zeta/alpha table, both paths", criterion_golden_table},
        {"noncrossing-graph gf equation", criterion_noncrossing},
        {"ternary family and its generalizations", criterion_ternary_family},
        {"Stirling pair maps to the Pascal matrix", criterion_stirling_pascal},
        {"falling factorials map to the Bessel triangle", criterion_falling_factorial},
        {"divisor chain of the 4x4 example", criterion_divisor_chain},
        {"Krylov dependences and the alpha family", criterion_krylov},
        {"quadratic-column recurrence formula", criterion_quadratic_family},
        {"randomized property suites", criterion_property_suites},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string status = "PASS";
        try {
            criteria[i].run();
        } catch (const std::exception& e) {
            status = std::string("FAIL: ") + e.what();
            ++failures;
        }
        std::cout << "criterion " << i + 1 << " (" << criteria[i].name << "): " << status << "\n";
    }
    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criterion(s) failed\n";
    return 1;
}
