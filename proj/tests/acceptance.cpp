// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ctf/cli.hpp"
#include "ctf/graph_io.hpp"
#include "ctf/verifier.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace ctf;

namespace {

const auto X = BivariatePolynomial::x();
const auto Y = BivariatePolynomial::y();

struct Outcome {
    bool passed = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok && passed) detail = what;
        passed = passed && ok;
    }
};

template <class A, class B>
std::string describe(const std::string& what, const A& got, const B& want) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    return s.str();
}

Outcome example_polynomials() {
    Outcome o;
    const auto g = fixtures::p8();
    const auto t = tutte(g);
    o.expect(t.to_text() == "y^3+x^2+2*x*y+2*y^2+x+y", "T = " + t.to_text());
    const auto kappa = counting_polynomial(g, Family::kappa_mod);
    const auto want = (X - 1) * (X - 2) + Rational(2) * (X - 1) * (Y - 1) + (Y - 1) * (Y - 2).pow(2);
    o.expect(kappa == want, "kappa = " + kappa.to_text());
    const auto bar = counting_polynomial(g, Family::kappa_bar_mod);
    o.expect(bar.to_text() == "y^3+x^2+2*x*y+5*y^2+5*x+10*y+8", "kappa_bar = " + bar.to_text());
    return o;
}

Outcome integral_golden() {
    Outcome o;
    const auto g = fixtures::p8();
    const auto k = counting_polynomial(g, Family::kappa_int);
    std::vector<std::pair<std::int64_t, std::int64_t>> points;
    for (std::int64_t p = 1; p <= 4; ++p)
        for (std::int64_t q = 1; q <= 5; ++q) points.emplace_back(p, q);
    points.emplace_back(5, 6);
    for (auto [p, q] : points) {
        const Rational brute(oracle::kappa_int(g, p, q));
        o.expect(k.evaluate(p, q) == brute, describe("kappa_Z(" + std::to_string(p) + "," + std::to_string(q) + ")",
                                                     to_string(k.evaluate(p, q)), to_string(brute)));
    }
    const auto formula = Rational(3) * (X - 1) * (X - 2) + Rational(8) * (X - 1) * (Y - 1) +
                         Rational(2) * (Y - 1) * (Y - 3) * (Rational(2) * Y - 3) +
                         Rational(1, 3) * (Y - 1) * Y * (Rational(2) * Y - 1);
    o.expect(formula == k, "corrected formula differs from brute force; brute force kept: " + k.to_text());
    return o;
}

Outcome census() {
    Outcome o;
    const auto g = fixtures::p8();
    const auto classes = [&](Relation r, OrientationFilter f) { return enumerate_classes(g, r, f).class_count(); };
    const auto check = [&](const std::string& what, std::size_t got, std::size_t want) {
        o.expect(got == want, describe(what, got, want));
    };
    check("|O|", all_orientations(g).size(), 32);
    check("cut-Eulerian classes", classes(Relation::cut_eulerian, OrientationFilter::all), 8);
    check("acyclic cut classes", classes(Relation::cut, OrientationFilter::acyclic), 2);
    check("totally cyclic Eulerian classes", classes(Relation::eulerian, OrientationFilter::totally_cyclic), 4);
    check("cut classes", classes(Relation::cut, OrientationFilter::all), 24);
    check("Eulerian classes", classes(Relation::eulerian, OrientationFilter::all), 14);
    const auto acyclic = all_orientations(g, OrientationFilter::acyclic).size();
    const auto cyclic = all_orientations(g, OrientationFilter::totally_cyclic).size();
    check("acyclic orientations", acyclic, 6);
    check("totally cyclic orientations", cyclic, 18);
    const auto k = counting_polynomial(g, Family::kappa_int);
    const auto t = tutte(g);
    const auto abs = [](const Rational& r) { return r < 0 ? Rational(-r) : r; };
    o.expect(abs(k.evaluate(1, 0)) == Rational(cyclic), "|kappa_Z(1,0)| = " + to_string(k.evaluate(1, 0)));
    o.expect(abs(k.evaluate(0, 1)) == Rational(acyclic), "|kappa_Z(0,1)| = " + to_string(k.evaluate(0, 1)));
    o.expect(t.evaluate(0, 2) == Rational(cyclic), "T(0,2) = " + to_string(t.evaluate(0, 2)));
    o.expect(t.evaluate(2, 0) == Rational(acyclic), "T(2,0) = " + to_string(t.evaluate(2, 0)));
    return o;
}

Outcome triples(const std::vector<MultiGraph>& corpus) {
    Outcome o;
    for (const auto& g : corpus) {
        const auto t = tutte(g);
        for (std::int64_t p = 1; p <= 3; ++p)
            for (std::int64_t q = 1; q <= 3; ++q) {
                const auto triples = count({Family::kappa_bar_mod, p - 1, q - 1}, g);
                const auto direct = oracle::tutte_at(g, p, q);
                o.expect(t.evaluate(p, q) == Rational(triples) && direct == static_cast<std::int64_t>(triples),
                         describe(format_graph(g) + "T(" + std::to_string(p) + "," + std::to_string(q) + ")",
                                  triples, direct));
            }
    }
    return o;
}

Outcome ledger(const std::vector<CorpusEntry>& results) {
    Outcome o;
    for (const auto& r : results)
        for (const auto& e : r.report.entries)
            o.expect(e.passed, format_graph(r.graph) + e.id + ": " + e.witness);
    return o;
}

Outcome group_shape() {
    Outcome o;
    for (const auto& g : {fixtures::p8(), fixtures::digon_loop()}) {
        for (std::int64_t other = 1; other <= 4; ++other) {
            for (bool on_p : {true, false}) {
                CountQuery cyclic{Family::kappa_mod, on_p ? 4 : other, on_p ? other : 4};
                CountQuery klein = cyclic;
                (on_p ? klein.group_p : klein.group_q) = AbelianGroup::parse("2,2");
                const auto a = count(cyclic, g), b = count(klein, g);
                o.expect(a == b, describe(format_graph(g) + "Z4 vs Z2xZ2", a, b));
            }
        }
    }
    return o;
}

Outcome anomalies() {
    Outcome o;
    std::ostringstream out, err;
    const int code = cli::run({"example"}, out, err);
    const auto text = out.str();
    o.expect(code == 0, "example exited with " + std::to_string(code));
    for (const char* needle : {"kappa(2,2) = 2, |O_ce| = 8, #[O_ce] = 2", "worked example text states kappa(2,2) = #[O_ce] = 0"})
        o.expect(text.find(needle) != std::string::npos, std::string("missing: ") + needle);
    return o;
}

BivariatePolynomial negate_both(const BivariatePolynomial& p) { return p.substitute(-1, 0, -1, 0); }

Outcome reciprocity(const std::vector<CorpusEntry>& results, std::size_t direct_edges) {
    Outcome o;
    for (const auto& r : results)
        for (const char* id : {"T1c", "T2c"}) {
            const auto* e = r.report.find(id);
            o.expect(e && e->passed, format_graph(r.graph) + id + (e ? ": " + e->witness : ": missing"));
        }
    // Direct recomputation through the public polynomial API.
    for (const auto& r : results) {
        const auto& g = r.graph;
        if (g.edge_count() > direct_edges) continue;
        const auto rank = stats(g).rank;
        const auto reps = enumerate_classes(g, Relation::cut_eulerian).representatives;
        BivariatePolynomial int_closed, int_open, mod_closed, mod_open;
        for (const auto& rho : all_orientations(g)) {
            const auto sign = Rational((rank + minty_partition(g, rho).circuit_part.size()) % 2 ? -1 : 1);
            const auto bar = sign * local_polynomial(g, Family::kappa_bar_local, rho);
            const auto open = sign * local_polynomial(g, Family::kappa_local, rho);
            int_closed += bar;
            int_open += open;
            if (std::find(reps.begin(), reps.end(), rho) != reps.end()) {
                mod_closed += bar;
                mod_open += open;
            }
        }
        const auto zero = [&](const BivariatePolynomial& d, const char* what) {
            o.expect(d.is_zero(), format_graph(g) + what + " leaves " + d.to_text());
        };
        zero(negate_both(counting_polynomial(g, Family::kappa_int)) - int_closed, "kappa_Z reciprocity");
        zero(negate_both(counting_polynomial(g, Family::kappa_bar_int)) - int_open, "kappa_bar_Z reciprocity");
        zero(negate_both(counting_polynomial(g, Family::kappa_mod)) - mod_closed, "kappa reciprocity");
        zero(negate_both(counting_polynomial(g, Family::kappa_bar_mod)) - mod_open, "kappa_bar reciprocity");
    }
    return o;
}

} // namespace

int main() {
    constexpr std::size_t kCorpusEdges = 5;
    constexpr std::size_t kDirectReciprocityEdges = 4;
    const auto corpus = corpus_graphs(kCorpusEdges, true);
    const auto results = verify_corpus(kCorpusEdges, true);

    const std::vector<std::pair<std::string, Outcome>> criteria{
        {"worked example: T, kappa, kappa_bar exact", example_polynomials()},
        {"kappa_Z golden value vs brute force on {1..4}x{1..5} and (5,6)", integral_golden()},
        {"worked example censuses", census()},
        {"T_G(p,q) counts triples on " + std::to_string(corpus.size()) + " corpus graphs, (p,q) in {1,2,3}^2",
         triples(corpus)},
        {"identity ledger on verify_corpus(5, loops)", ledger(results)},
        {"kappa_mod independent of group shape at order 4", group_shape()},
        {"example command reports the kappa(2,2) anomaly", anomalies()},
        {"reciprocity is the zero polynomial on every corpus graph", reciprocity(results, kDirectReciprocityEdges)},
    };

    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto& [name, outcome] = criteria[k];
        std::cout << "criterion " << k + 1 << ": " << (outcome.passed ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!outcome.passed) std::cout << "    " << outcome.detail << "\n";
        all = all && outcome.passed;
    }
    std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
    return all ? 0 : 1;
}
