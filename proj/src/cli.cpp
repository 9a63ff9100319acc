#include "ctf/cli.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "ctf/graph_io.hpp"
#include "ctf/verifier.hpp"

namespace ctf::cli {

namespace {

struct Config {
    std::string format = "text";
    std::optional<std::uint64_t> budget;
    std::string file;
    std::string family;
    std::int64_t p = 1;
    std::int64_t q = 1;
    std::string group, group_p, group_q;
    std::string orientation;
    std::string relation;
    std::string filter = "all";
    std::size_t max_edges = 3;
    bool loops = false;
    std::vector<std::string> fail_identities;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool json_format(const Config& c) { return c.format == "json"; }

void guard_size(const MultiGraph& g, const Config& c, std::size_t limit, const char* what) {
    if (!c.budget && g.edge_count() > limit)
        throw UsageError(std::string(what) + ": graph has " + std::to_string(g.edge_count()) +
                         " edges, default limit is " + std::to_string(limit) + " (pass --budget to override)");
}

PolynomialOptions polynomial_options(const Config& c) {
    PolynomialOptions o;
    if (c.budget) o.budget = *c.budget;
    return o;
}

VerifyOptions verify_options(const Config& c) {
    VerifyOptions o;
    o.polynomials = polynomial_options(c);
    if (c.budget) o.edge_limit = kMaxEdges;
    for (const auto& id : c.fail_identities) {
        if (std::find(identity_ids().begin(), identity_ids().end(), id) == identity_ids().end())
            throw UsageError("unknown identity id '" + id + "'");
        o.forced_failures.insert(id);
    }
    return o;
}

int cmd_polys(const Config& c, std::ostream& out) {
    const auto g = load_graph(c.file);
    guard_size(g, c, kPolynomialEdgeLimit, "polys");
    const auto report = polynomial_report(g, polynomial_options(c));
    out << (json_format(c) ? to_json(report).dump(2) + "\n" : to_text(report));
    return kExitOk;
}

int cmd_count(const Config& c, std::ostream& out) {
    const auto g = load_graph(c.file);
    guard_size(g, c, kCountEdgeLimit, "count");
    const auto family = parse_family(c.family);
    if (!family) throw UsageError("unknown family '" + c.family + "'");
    CountQuery query;
    query.family = *family;
    query.p = c.p;
    query.q = c.q;
    if (c.budget) query.budget = *c.budget;
    if (!c.orientation.empty()) query.orientation = Orientation::from_string(g, c.orientation);
    const auto& t = traits(*family);
    if (!c.group.empty()) {
        if (t.uses_x) query.group_p = AbelianGroup::parse(c.group);
        if (t.uses_y) query.group_q = AbelianGroup::parse(c.group);
    }
    if (!c.group_p.empty()) query.group_p = AbelianGroup::parse(c.group_p);
    if (!c.group_q.empty()) query.group_q = AbelianGroup::parse(c.group_q);
    if ((query.group_p || query.group_q) && !t.modular)
        throw UsageError("--group only applies to modular families");
    const auto value = count(query, g);
    if (json_format(c))
        out << nlohmann::json{{"family", c.family}, {"p", c.p}, {"q", c.q}, {"count", value}}.dump(2) << "\n";
    else
        out << value << "\n";
    return kExitOk;
}

int cmd_classes(const Config& c, std::ostream& out) {
    const auto g = load_graph(c.file);
    guard_size(g, c, kCountEdgeLimit, "classes");
    const auto relation = parse_relation(c.relation);
    if (!relation) throw UsageError("unknown relation '" + c.relation + "'");
    const auto filter = parse_filter(c.filter);
    if (!filter) throw UsageError("unknown filter '" + c.filter + "'");
    const auto partition = enumerate_classes(g, *relation, *filter);
    if (json_format(c)) {
        nlohmann::json classes = nlohmann::json::array();
        for (std::size_t k = 0; k < partition.class_count(); ++k)
            classes.push_back(
                {{"representative", partition.representatives[k].to_string()}, {"size", partition.classes[k].size()}});
        out << nlohmann::json{{"relation", to_string(*relation)},
                              {"filter", to_string(*filter)},
                              {"count", partition.class_count()},
                              {"classes", classes}}
                   .dump(2)
            << "\n";
    } else {
        std::ostringstream s;
        s << partition.class_count() << " classes\n";
        s << "relation " << to_string(*relation) << ", filter " << to_string(*filter) << "\n";
        for (std::size_t k = 0; k < partition.class_count(); ++k)
            s << partition.representatives[k].to_string() << " " << partition.classes[k].size() << "\n";
        out << s.str();
    }
    return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
    const auto g = load_graph(c.file);
    guard_size(g, c, kPolynomialEdgeLimit, "verify");
    const auto report = verify_graph(g, verify_options(c));
    out << (json_format(c) ? to_json(report).dump(2) + "\n" : to_text(report));
    return report.all_passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_corpus(const Config& c, std::ostream& out) {
    if (!c.budget && c.max_edges > 6) throw UsageError("corpus: --max-edges above 6 requires --budget");
    const auto results = verify_corpus(c.max_edges, c.loops, verify_options(c));
    std::size_t failing = 0;
    for (const auto& r : results) failing += r.report.all_passed() ? 0 : 1;
    if (json_format(c)) {
        nlohmann::json graphs = nlohmann::json::array();
        for (const auto& r : results)
            graphs.push_back({{"graph", format_graph(r.graph)}, {"report", to_json(r.report)}});
        out << nlohmann::json{{"max_edges", c.max_edges},
                              {"loops", c.loops},
                              {"graphs", graphs},
                              {"failing", failing},
                              {"all_passed", failing == 0}}
                   .dump(2)
            << "\n";
    } else {
        std::ostringstream s;
        for (const auto& r : results) {
            if (r.report.all_passed()) continue;
            s << format_graph(r.graph) << to_text(r.report) << "\n";
        }
        s << results.size() << " graphs, " << failing << " failing (max edges " << c.max_edges << ", loops "
          << (c.loops ? "on" : "off") << ")\n";
        out << s.str();
    }
    return failing == 0 ? kExitOk : kExitVerificationFailed;
}

BivariatePolynomial integral_formula() {
    const auto x = BivariatePolynomial::x();
    const auto y = BivariatePolynomial::y();
    const BivariatePolynomial one(1);
    return Rational(3) * (x - one) * (x - 2) + Rational(8) * (x - one) * (y - one) +
           Rational(2) * (y - one) * (y - 3) * (Rational(2) * y - 3) +
           Rational(1, 3) * (y - one) * y * (Rational(2) * y - one);
}

int cmd_example(const Config& c, std::ostream& out) {
    const auto g = example_graph();
    const auto report = polynomial_report(g, polynomial_options(c));
    const auto& kappa = report.families.at(Family::kappa_mod);
    const auto& kappa_int = report.families.at(Family::kappa_int);

    const auto all = all_orientations(g);
    std::size_t acyclic = 0, totally_cyclic = 0, ce_orientations = 0;
    const auto ce = enumerate_classes(g, Relation::cut_eulerian);
    std::set<std::size_t> ce_classes;
    for (const auto& rho : all) {
        const auto k = classify(g, rho);
        acyclic += k.is_acyclic;
        totally_cyclic += k.is_totally_cyclic;
        if (equivalent(g, rho, rho.reversed(), Relation::cut_eulerian)) {
            ++ce_orientations;
            ce_classes.insert(*ce.class_of(rho));
        }
    }
    const std::vector<std::pair<std::string, std::size_t>> census{
        {"orientations", all.size()},
        {"acyclic orientations", acyclic},
        {"totally cyclic orientations", totally_cyclic},
        {"cut-Eulerian classes", ce.class_count()},
        {"cut classes of acyclic orientations",
         enumerate_classes(g, Relation::cut, OrientationFilter::acyclic).class_count()},
        {"Eulerian classes of totally cyclic orientations",
         enumerate_classes(g, Relation::eulerian, OrientationFilter::totally_cyclic).class_count()},
        {"cut classes", enumerate_classes(g, Relation::cut).class_count()},
        {"Eulerian classes", enumerate_classes(g, Relation::eulerian).class_count()},
    };
    const auto kappa22 = kappa.evaluate(2, 2);
    const auto formula = integral_formula();
    const bool formula_matches = formula == kappa_int;
    const std::string anomaly = "kappa(2,2) = " + to_string(kappa22) + ", |O_ce| = " + std::to_string(ce_orientations) +
                                ", #[O_ce] = " + std::to_string(ce_classes.size()) +
                                "; note: the worked example text states kappa(2,2) = #[O_ce] = 0, "
                                "while its displayed kappa formula and exhaustive counting both give " +
                                to_string(kappa22);
    const std::string token = std::string("kappa_Z: the displayed formula with 2y-1 read as 2q-1 ") +
                              (formula_matches ? "matches" : "does NOT match") + " the brute-force polynomial";

    if (json_format(c)) {
        nlohmann::json j;
        j["graph"] = format_graph(g);
        j["polynomials"] = to_json(report);
        nlohmann::json cj;
        for (const auto& [name, v] : census) cj[name] = v;
        j["census"] = cj;
        j["anomalies"] = {{{"kappa_2_2", to_string(kappa22)},
                           {"O_ce", ce_orientations},
                           {"classes_O_ce", ce_classes.size()},
                           {"note", anomaly}},
                          {{"kappa_int_formula_matches", formula_matches}, {"note", token}}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    std::ostringstream s;
    s << "example graph (vertices u=0, v=1, w=2)\n" << format_graph(g) << "\n";
    s << "T = " << report.tutte.to_text() << "\n";
    s << "R = " << report.rank_generating.to_text() << "\n";
    s << "kappa = " << kappa.to_text() << "\n";
    s << "kappa_bar = " << report.families.at(Family::kappa_bar_mod).to_text() << "\n";
    s << "kappa_Z = " << kappa_int.to_text() << "\n";
    s << "kappa_bar_Z = " << report.families.at(Family::kappa_bar_int).to_text() << "\n";
    s << "tau = " << report.families.at(Family::tau_mod).to_text() << "\n";
    s << "phi = " << report.families.at(Family::phi_mod).to_text() << "\n\n";
    for (const auto& [name, v] : census) s << name << ": " << v << "\n";
    s << "T(1,1) = " << to_string(report.tutte.evaluate(1, 1)) << ", T(2,2) = " << to_string(report.tutte.evaluate(2, 2))
      << ", T(1,0) = " << to_string(report.tutte.evaluate(1, 0)) << ", T(0,1) = "
      << to_string(report.tutte.evaluate(0, 1)) << ", T(1,2) = " << to_string(report.tutte.evaluate(1, 2))
      << ", T(2,1) = " << to_string(report.tutte.evaluate(2, 1)) << "\n\n";
    s << "anomaly: " << anomaly << "\n";
    s << "anomaly: " << token << "\n";
    out << s.str();
    return kExitOk;
}

} // namespace

MultiGraph example_graph() { return MultiGraph(3, {{0, 2}, {0, 1}, {1, 2}, {0, 1}, {1, 2}}); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Complementary tension-flow polynomials of multigraphs", "ctfpoly"};
    app.require_subcommand(1);
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", c.budget, "Enumeration budget; also lifts the default size limits");

    auto* polys = app.add_subcommand("polys", "All polynomials of a graph");
    polys->add_option("file", c.file, "Graph file")->required();

    auto* cnt = app.add_subcommand("count", "One counting function at (p, q)");
    cnt->add_option("file", c.file, "Graph file")->required();
    cnt->add_option("--family", c.family, "Counting family")->required();
    cnt->add_option("--p", c.p, "First argument");
    cnt->add_option("--q", c.q, "Second argument");
    cnt->add_option("--group", c.group, "Group moduli m1,m2,... for the modular arguments");
    cnt->add_option("--group-p", c.group_p, "Group moduli for p");
    cnt->add_option("--group-q", c.group_q, "Group moduli for q");
    cnt->add_option("--orientation", c.orientation, "Orientation as 0/1 flips per edge");

    auto* cls = app.add_subcommand("classes", "Equivalence classes of orientations");
    cls->add_option("file", c.file, "Graph file")->required();
    cls->add_option("--relation", c.relation, "cut, eulerian or cut-eulerian")->required();
    cls->add_option("--filter", c.filter, "all, acyclic or totally-cyclic");

    auto* ver = app.add_subcommand("verify", "Check every identity on a graph");
    ver->add_option("file", c.file, "Graph file")->required();
    ver->add_option("--fail-identity", c.fail_identities, "Force an identity to fail (testing)");

    auto* cor = app.add_subcommand("corpus", "Check every identity on all small multigraphs");
    cor->add_option("--max-edges", c.max_edges, "Largest edge count")->required();
    cor->add_flag("--loops", c.loops, "Include loops");
    cor->add_option("--fail-identity", c.fail_identities, "Force an identity to fail (testing)");

    auto* ex = app.add_subcommand("example", "Reproduce the worked example");

    for (auto* sub : {polys, cnt, cls, ver, cor, ex}) {
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--budget", c.budget, "Enumeration budget; also lifts the default size limits");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (polys->parsed()) return cmd_polys(c, out);
        if (cnt->parsed()) return cmd_count(c, out);
        if (cls->parsed()) return cmd_classes(c, out);
        if (ver->parsed()) return cmd_verify(c, out);
        if (cor->parsed()) return cmd_corpus(c, out);
        if (ex->parsed()) return cmd_example(c, out);
    } catch (const InternalCheckFailure& e) {
        err << "internal check failed: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

} // namespace ctf::cli
