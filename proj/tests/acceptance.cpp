// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "blowup/json_io.hpp"
#include "blowup/parse.hpp"
#include "blowup/resolve.hpp"

using namespace blowup;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = Clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok && budget_seconds > 0 && elapsed > budget_seconds) {
        ok = false;
        detail = "over time budget";
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " - criterion " << number << ": " << label << " ("
         << elapsed << " s";
    if (budget_seconds > 0) line << ", budget " << budget_seconds << " s";
    line << ")";
    if (!ok && !detail.empty()) line << " -- " << detail;
    std::cout << line.str() << "\n";
    if (!ok) ++failures;
}

RingPtr plane_ring() { return make_ring({"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

Ideal I(const RingPtr& r, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> v;
    for (const auto& s : gens) v.push_back(P(r, s));
    return Ideal(r, std::move(v));
}

unsigned phase1_steps(const ResolutionTrace& t) {
    unsigned n = 0;
    for (const auto& s : t.steps)
        if (s.phase == 1) ++n;
    return n;
}

Polynomial random_dense(const RingPtr& r, std::mt19937& rng, unsigned deg) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    Polynomial acc = Polynomial::zero(r);
    for (unsigned a = 0; a <= deg; ++a)
        for (unsigned b = 0; a + b <= deg; ++b)
            acc = acc + Polynomial::from_term(r, Monomial{{a, b}}, Rational(coeff(rng)));
    return acc;
}

Polynomial random_sparse(const RingPtr& r, std::mt19937& rng, unsigned max_deg,
                         unsigned max_terms) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> expo(0, max_deg);
    Polynomial acc = Polynomial::zero(r);
    unsigned k = nterms(rng);
    for (unsigned t = 0; t < k; ++t) {
        Monomial m(r->arity());
        for (std::size_t v = 0; v < r->arity(); ++v) m.exp[v] = expo(rng);
        acc = acc + Polynomial::from_term(r, m, Rational(coeff(rng)));
    }
    return acc;
}

// ----------------------------------------------------------------- criteria

bool cusp_end_to_end(std::string& detail) {
    auto r = plane_ring();
    ResolutionTrace trace = resolve_plane_curve(P(r, "y^2 - x^3"), 32);
    if (phase1_steps(trace) != 1) {
        detail = "expected exactly one phase-1 blow up";
        return false;
    }
    if (trace.steps.size() > 3) {
        detail = "more than three blow ups";
        return false;
    }
    // hand-computed charts of the first blow up, pinned:
    //   chart g=y: relations y*T - x, strict transform x*T^2 - 1 (misses 0)
    //   chart g=x: relations x*T - y, strict transform T^2 - x (smooth)
    const BlowupStep& first = trace.tree.nodes()[0].step;
    const Chart& cy = first.charts[0];
    const Chart& cx = first.charts[1];
    if (!equal_ideals(cy.relations,
                      Ideal::principal(parse_polynomial(cy.ring, "y*T1_1 - x"))) ||
        !equal_ideals(cx.relations,
                      Ideal::principal(parse_polynomial(cx.ring, "x*T1_0 - y")))) {
        detail = "first blow-up charts differ from the pinned hand computation";
        return false;
    }
    const auto& recs = trace.tree.records_at(TreeSlot{0, 1});
    if (!recs.count("Y") ||
        recs.at("Y").ideal.gens().front() != parse_polynomial(cx.ring, "T1_0^2 - x")) {
        detail = "strict transform in the x-chart is not T^2 - x";
        return false;
    }
    if (!is_smooth({cx.ring, ideal_sum(cx.relations,
                                       Ideal::principal(parse_polynomial(cx.ring,
                                                                         "T1_0^2 - x")))})
             .smooth) {
        detail = "pinned strict transform not smooth";
        return false;
    }
    for (const auto& v : trace.verdicts)
        if (!v.strict_smooth || !v.total_snc) {
            detail = "a leaf verdict is negative";
            return false;
        }
    if (!verify_resolution(trace)) {
        detail = "independent verification failed";
        return false;
    }
    return true;
}

bool node_and_tacnode(std::string& detail) {
    auto r = plane_ring();
    auto t_node0 = Clock::now();
    ResolutionTrace node = resolve_plane_curve(P(r, "y^2 - x^2 - x^3"), 32);
    double node_s = std::chrono::duration<double>(Clock::now() - t_node0).count();
    if (node.steps.size() != 1) {
        detail = "node should resolve in one step";
        return false;
    }
    if (!verify_resolution(node)) {
        detail = "node verification failed";
        return false;
    }
    if (node_s > 2.0) {
        detail = "node over budget";
        return false;
    }
    auto t_tac0 = Clock::now();
    ResolutionTrace tac = resolve_plane_curve(P(r, "y^2 - x^4"), 32);
    double tac_s = std::chrono::duration<double>(Clock::now() - t_tac0).count();
    if (phase1_steps(tac) != 2) {
        detail = "tacnode should need two phase-1 steps";
        return false;
    }
    if (!verify_resolution(tac)) {
        detail = "tacnode verification failed";
        return false;
    }
    if (tac_s > 2.0) {
        detail = "tacnode over budget";
        return false;
    }
    return true;
}

bool weighted_chart_identity(std::string& detail) {
    auto r = plane_ring();
    QuotientPresentation plane{r};
    for (unsigned m = 1; m <= 3; ++m) {
        std::string ym = "y^" + std::to_string(m);
        Center center{plane, ideal_sum(I(r, {"x"}), I(r, {"x", ym}))};
        BlowupStep step = blowup_charts(center);
        if (step.charts.size() != 2) {
            detail = "center (x, y^m) should give two charts";
            return false;
        }
        const Chart& cw = step.charts[1]; // g = y^m
        Ideal expected = Ideal::principal(parse_polynomial(cw.ring, ym + "*T1_0 - x"));
        if (!equal_ideals(cw.relations, expected)) {
            detail = "relations differ from (y^m S - x) at m=" + std::to_string(m);
            return false;
        }
        Ideal strict = strict_transform(cw, I(r, {"x"}));
        if (!equal_ideals(strict, ideal_sum(Ideal::principal(P(cw.ring, "T1_0")),
                                            cw.relations))) {
            detail = "strict transform is not (S) at m=" + std::to_string(m);
            return false;
        }
        // the total transform factors as strict + m copies of the exceptional
        Ideal factored = ideal_product(Ideal::principal(P(cw.ring, "T1_0")),
                                       ideal_power(Ideal::principal(P(cw.ring, "y")), m));
        if (!equal_ideals(ideal_sum(factored, cw.relations),
                          ideal_sum(total_transform(cw, I(r, {"x"})), cw.relations))) {
            detail = "(x) != (S)(y)^m at m=" + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool pushforward_principality(std::string& detail) {
    auto r = plane_ring();
    Ideal Iy = I(r, {"y"}), Jx = I(r, {"x"});
    BlowupStep step = blowup_charts(Center{QuotientPresentation{r}, ideal_sum(Iy, Jx)});
    // generator list is [y, x]; only the chart with g in J qualifies
    if (!verify_principal_on_chart(step.charts[1], Jx)) {
        detail = "image of J is not the exceptional ideal in its own chart";
        return false;
    }
    if (verify_principal_on_chart(step.charts[0], Jx)) {
        detail = "chart with g outside J unexpectedly passes";
        return false;
    }
    return true;
}

bool separation_corpus(std::string& detail) {
    auto r = plane_ring();
    QuotientPresentation plane{r};
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"x", "y"},
        {"x", "x + y^2"},
        {"y - x^2", "y + x^2"},
        {"y", "y - x^3"},
        {"x + y", "x - y"},
        {"y - x^2", "y - 2*x^2"},
        {"x", "y - x"},
        {"y", "y - x^2"},
        {"x - y^2", "x + y^3"},
        {"y - x^3", "y + x^3"},
    };
    for (const auto& [a, b] : pairs) {
        auto [step, separated] = separate_components(plane, I(r, {a}), I(r, {b}));
        if (!separated) {
            detail = "pair (" + a + ", " + b + ") did not separate";
            return false;
        }
    }
    return true;
}

bool jacobian_suite(std::string& detail) {
    auto r = plane_ring();
    std::mt19937 rng(20250808);
    int tested = 0;
    while (tested < 50) {
        Polynomial f = random_dense(r, rng, tested % 2 ? 2 : 3);
        if (f.is_zero() || f.is_constant()) continue;
        ++tested;
        Ideal H = jacobian_ideal({r, Ideal::principal(f)});
        Ideal FP(r, {f, partial_derivative(f, 0), partial_derivative(f, 1)});
        if (contains_one(H) != contains_one(FP)) {
            detail = "jacobian ideal disagrees with first partials on " + f.str();
            return false;
        }
        if (!contains_one(H)) {
            for (const auto& g : H.nonzero_gens())
                if (!radical_membership(g, FP)) {
                    detail = "jacobian generator escapes the partials radical";
                    return false;
                }
            for (const auto& g : FP.nonzero_gens())
                if (!radical_membership(g, H)) {
                    detail = "partials generator escapes the jacobian radical";
                    return false;
                }
        }
    }
    // zero-relation presentations are always smooth with unit jacobian ideal
    for (auto vars : {std::vector<std::string>{"x"}, {"x", "y"}, {"x", "y", "z"}}) {
        auto ring = make_ring(vars);
        if (!contains_one(jacobian_ideal(QuotientPresentation{ring}))) {
            detail = "polynomial ring jacobian ideal is not the unit ideal";
            return false;
        }
    }
    return true;
}

bool ideal_engine_suite(std::string& detail) {
    auto r3 = make_ring({"x", "y", "z"});
    std::mt19937 rng(424242);
    auto random_ideal = [&](const RingPtr& ring) {
        std::uniform_int_distribution<int> ngens(1, 2);
        std::vector<Polynomial> gens;
        int k = ngens(rng);
        for (int i = 0; i < k; ++i) {
            Polynomial f = random_sparse(ring, rng, 2, 3);
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) gens.push_back(Polynomial::variable(ring, 0));
        return Ideal(ring, std::move(gens));
    };

    auto spoly_oracle = [](const Polynomial& f, const Polynomial& g) {
        Monomial u = Monomial::lcm(f.leading().mono, g.leading().mono);
        Polynomial tf = Polynomial::from_term(f.ring(), u / f.leading().mono,
                                              Rational(1) / f.leading().coeff);
        Polynomial tg = Polynomial::from_term(g.ring(), u / g.leading().mono,
                                              Rational(1) / g.leading().coeff);
        return tf * f - tg * g;
    };

    // Buchberger criterion on a mixed corpus
    for (int i = 0; i < 12; ++i) {
        Ideal a = random_ideal(r3);
        auto gb = groebner_basis(a);
        for (std::size_t p = 0; p < gb.basis.size(); ++p)
            for (std::size_t q = p + 1; q < gb.basis.size(); ++q)
                if (!normal_form(spoly_oracle(gb.basis[p], gb.basis[q]), gb).is_zero()) {
                    detail = "an S-polynomial fails to reduce to zero";
                    return false;
                }
    }

    // saturation / colon laws on 100 random pairs
    auto r2 = plane_ring();
    for (int i = 0; i < 100; ++i) {
        const RingPtr& ring = i % 2 ? r3 : r2;
        Ideal a = random_ideal(ring), b = random_ideal(ring);
        if (b.is_zero()) continue;
        Ideal q = quotient(a, b);
        auto gb_a = groebner_basis(a);
        for (const auto& f : ideal_product(q, b).nonzero_gens())
            if (!normal_form(f, gb_a).is_zero()) {
                detail = "colon law (I:J)J in I fails";
                return false;
            }
        auto [sat, k] = saturation(a, b);
        auto gb_sat = groebner_basis(sat);
        for (const auto& f : a.nonzero_gens())
            if (!normal_form(f, gb_sat).is_zero()) {
                detail = "I not contained in its saturation";
                return false;
            }
        auto [sat2, k2] = saturation(sat, b);
        if (!equal_ideals(sat, sat2) || k2 != 0) {
            detail = "saturation is not idempotent";
            return false;
        }
    }

    // elimination: members only, no dropped variables
    for (int i = 0; i < 20; ++i) {
        Ideal a = random_ideal(r3);
        Ideal e = eliminate(a, {0});
        auto gb = groebner_basis(a);
        for (const auto& g : e.nonzero_gens()) {
            if (!normal_form(g, gb).is_zero()) {
                detail = "eliminated generator is not a member";
                return false;
            }
            for (const auto& t : g.terms())
                if (t.mono.exp[0]) {
                    detail = "eliminated generator uses a dropped variable";
                    return false;
                }
        }
    }
    return true;
}

bool snc_suite(std::string& detail) {
    auto r = plane_ring();
    QuotientPresentation plane{r};
    auto mk = [&](std::initializer_list<std::pair<const char*, unsigned>> fs) {
        std::vector<DivisorFactor> factors;
        for (const auto& [s, m] : fs) factors.push_back({P(r, s), m, ""});
        return make_divisor(plane, std::move(factors));
    };

    struct Case {
        FactoredDivisor divisor;
        bool expected;
    };
    std::vector<Case> cases;
    // the three module examples
    cases.push_back({mk({{"x", 1}, {"y", 1}}), true});
    cases.push_back({mk({{"x", 1}, {"y", 1}, {"x + y", 1}}), false});
    cases.push_back({mk({{"y^2 - x^3", 1}}), false});
    // ten constructed arrangements
    cases.push_back({mk({{"x", 1}}), true});
    cases.push_back({mk({{"x", 1}, {"y - 1", 1}}), true});
    cases.push_back({mk({{"x", 1}, {"x - 1", 1}}), true});
    cases.push_back({mk({{"y - x^2", 1}, {"y + x^2", 1}}), false});  // tangent pair
    cases.push_back({mk({{"y - x^2", 1}, {"y - 1", 1}}), true});     // transversal conic
    cases.push_back({mk({{"x", 1}, {"y", 1}, {"x - 1", 1}}), true}); // disjoint crossings
    cases.push_back({mk({{"x - y", 1}, {"x + y", 1}}), true});
    cases.push_back({mk({{"y", 1}, {"y - x^3", 1}}), false});        // inflectional tangency
    cases.push_back({mk({{"x*y - 1", 1}}), true});                   // smooth hyperbola
    cases.push_back({mk({{"x", 1}, {"y - x", 1}, {"y + x", 1}}), false}); // triple point
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (snc_check_global(cases[i].divisor).snc != cases[i].expected) {
            detail = "arrangement " + std::to_string(i) + " disagrees with the hand verdict";
            return false;
        }
        // monomial check never depends on multiplicities
        bool base = monomial_check(cases[i].divisor);
        FactoredDivisor bumped = cases[i].divisor;
        for (auto& f : bumped.factors) f.multiplicity += 3;
        if (monomial_check(bumped) != base) {
            detail = "monomial verdict changed with multiplicities";
            return false;
        }
    }
    return true;
}

bool determinism(std::string& detail) {
    auto make_artifacts = [&]() {
        std::ostringstream all;
        auto r = plane_ring();
        for (const char* curve : {"y^2 - x^3", "y^2 - x^2 - x^3", "y^2 - x^4"}) {
            ResolutionTrace t = resolve_plane_curve(P(r, curve), 32);
            all << trace_to_json(t).dump(2) << "\n";
        }
        QuotientPresentation plane{r};
        std::vector<DivisorFactor> fs{{P(r, "y^2 - x^3"), 1, ""}};
        all << strnorm_to_json(strnorm_surface(make_divisor(plane, fs), 16)).dump(2) << "\n";
        auto pr = principalize_strict_transform(plane, I(r, {"x"}), I(r, {"x", "y^2"}), 4);
        all << principalization_to_json(pr).dump(2) << "\n";
        all << snc_verdict_to_json(
                   snc_check_global(make_divisor(
                       plane, {{P(r, "x"), 1, ""}, {P(r, "y"), 1, ""}})))
                   .dump(2)
            << "\n";
        return all.str();
    };
    std::string first = make_artifacts();
    std::string second = make_artifacts();
    if (first != second) {
        detail = "consecutive runs differ";
        return false;
    }
    if (first.empty()) {
        detail = "no artifacts produced";
        return false;
    }
    return true;
}

} // namespace

int main() {
    std::cout << "blowup acceptance suite\n";
    criterion(1, "cusp end-to-end resolution", 2.0, cusp_end_to_end);
    criterion(2, "node and tacnode resolutions", 4.0, node_and_tacnode);
    criterion(3, "weighted chart identity (x, y^m)", 1.0, weighted_chart_identity);
    criterion(4, "pushforward principality in J-charts", 1.0, pushforward_principality);
    criterion(5, "component separation corpus", 5.0, separation_corpus);
    criterion(6, "jacobian ideal suite", 10.0, jacobian_suite);
    criterion(7, "ideal engine oracle suite", 30.0, ideal_engine_suite);
    criterion(8, "snc and monomial suite", 5.0, snc_suite);
    criterion(9, "byte-identical JSON artifacts", 0.0, determinism);
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
