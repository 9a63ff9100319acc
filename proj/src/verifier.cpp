#include "ctf/verifier.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ctf {

namespace {

struct IdentityInfo {
    const char* id;
    const char* tag;
};

const std::vector<IdentityInfo>& identity_table() {
    static const std::vector<IdentityInfo> table{
        {"T1b", "integral decomposition over all orientations"},
        {"T1c", "integral reciprocity"},
        {"T1d", "integral specializations"},
        {"T1e", "integral convolution over edge subsets"},
        {"T2b", "modular decomposition over cut-Eulerian classes"},
        {"T2c", "modular reciprocity"},
        {"T2d", "modular specializations"},
        {"T2e", "modular convolution over edge subsets"},
        {"PL", "local product, reciprocity and specializations"},
        {"T3", "dual modular polynomial equals R_G; T_G(p,q) counts triples"},
        {"PE", "class sizes: ce = cu * eu = local dual value at (1,1)"},
        {"RPQ", "R_G at (p,q) and (-p,-q) as sums over tension-flow pairs"},
        {"IM", "integral-modular relations"},
        {"CS", "special values and orientation censuses"},
        {"TC", "Tutte convolution over edge subsets"},
        {"IND", "independence of reference orientation and representatives"},
        {"TP", "tension and flow polynomials from T_G"},
        {"TR", "T_G(x,y) = R_G(x-1,y-1)"},
    };
    return table;
}

Rational sign(std::size_t exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }
Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

MultiGraph strip_isolated(const MultiGraph& g) {
    std::vector<std::size_t> relabel(g.vertex_count(), SIZE_MAX);
    std::size_t next = 0;
    for (const auto& e : g.edges()) {
        if (relabel[e.tail] == SIZE_MAX) relabel[e.tail] = next++;
        if (relabel[e.head] == SIZE_MAX) relabel[e.head] = next++;
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back({relabel[e.tail], relabel[e.head], e.id});
    return MultiGraph::from_edges(next, std::move(edges));
}

// Graph-level polynomials of minors, shared across graphs. Every cached
// quantity is an isomorphism invariant that ignores isolated vertices.
class MinorCache {
public:
    BivariatePolynomial get(const MultiGraph& g, const std::string& what,
                            const std::function<BivariatePolynomial(const MultiGraph&)>& compute) {
        auto stripped = strip_isolated(g);
        auto key = canonical_key(stripped);
        if (!key) return compute(stripped);
        const auto full = what + "|" + *key;
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(full); it != cache_.end()) return it->second;
        }
        auto value = compute(stripped);
        std::lock_guard lock(mutex_);
        cache_.emplace(full, value);
        return value;
    }

private:
    std::mutex mutex_;
    std::unordered_map<std::string, BivariatePolynomial> cache_;
};

MinorCache& minor_cache() {
    static MinorCache cache;
    return cache;
}

class Recorder {
public:
    explicit Recorder(IdentityEntry& entry) : entry_(entry) {}

    void equal(const std::string& what, const BivariatePolynomial& lhs, const BivariatePolynomial& rhs) {
        if (entry_.witness.empty() && lhs != rhs) entry_.witness = what + ": " + lhs.to_text() + " != " + rhs.to_text();
    }
    void equal(const std::string& what, const Rational& lhs, const Rational& rhs) {
        if (entry_.witness.empty() && lhs != rhs)
            entry_.witness = what + ": " + to_string(lhs) + " != " + to_string(rhs);
    }

private:
    IdentityEntry& entry_;
};

class Context {
public:
    Context(const MultiGraph& g, const VerifyOptions& options)
        : g(g), s(stats(g)), options_(options), poly_options_(options.polynomials) {
        orientations = all_orientations(g, OrientationFilter::all, poly_options_.orientation_limit);
        for (std::size_t i = 0; i < orientations.size(); ++i) {
            index_.emplace(orientations[i].flips.bits(), i);
            minty.push_back(minty_partition(g, orientations[i]));
        }
    }

    const MultiGraph& g;
    GraphStats s;
    std::vector<Orientation> orientations;
    std::vector<MintyPartition> minty;

    const PolynomialOptions& poly_options() const { return poly_options_; }

    std::size_t index_of(const Orientation& o) const { return index_.at(o.flips.bits()); }

    const BivariatePolynomial& poly(Family f) {
        auto it = graph_.find(f);
        if (it == graph_.end()) it = graph_.emplace(f, counting_polynomial(g, f, poly_options_)).first;
        return it->second;
    }

    const BivariatePolynomial& local(std::size_t rho, Family f) {
        auto key = std::make_pair(rho, f);
        auto it = local_.find(key);
        if (it == local_.end())
            it = local_.emplace(key, local_polynomial(g, f, orientations[rho], poly_options_)).first;
        return it->second;
    }

    const BivariatePolynomial& tutte_poly() {
        if (!tutte_) tutte_ = tutte(g);
        return *tutte_;
    }
    const BivariatePolynomial& rank_poly() {
        if (!rank_) rank_ = rank_generating(g);
        return *rank_;
    }

    const ClassPartition& classes(Relation r, OrientationFilter f = OrientationFilter::all) {
        auto key = std::make_pair(r, f);
        auto it = classes_.find(key);
        if (it == classes_.end())
            it = classes_.emplace(key, enumerate_classes(g, r, f, poly_options_.orientation_limit)).first;
        return it->second;
    }

    BivariatePolynomial minor_poly(const MultiGraph& m, Family f) {
        return minor_cache().get(m, std::string(traits(f).name),
                                 [&](const MultiGraph& h) { return counting_polynomial(h, f, minor_options()); });
    }
    BivariatePolynomial minor_tutte(const MultiGraph& m) {
        return minor_cache().get(m, "tutte", [](const MultiGraph& h) { return tutte(h); });
    }

    std::uint64_t count_at(Family f, std::int64_t p, std::int64_t q, std::optional<Orientation> o = std::nullopt) {
        CountQuery query;
        query.family = f;
        query.p = p;
        query.q = q;
        query.orientation = o ? o : poly_options_.reference;
        query.budget = poly_options_.budget;
        query.orientation_limit = poly_options_.orientation_limit;
        return count(query, g);
    }

private:
    PolynomialOptions minor_options() const {
        PolynomialOptions o;
        o.budget = poly_options_.budget;
        o.orientation_limit = poly_options_.orientation_limit;
        return o;
    }

    const VerifyOptions& options_;
    PolynomialOptions poly_options_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::map<Family, BivariatePolynomial> graph_;
    std::map<std::pair<std::size_t, Family>, BivariatePolynomial> local_;
    std::map<std::pair<Relation, OrientationFilter>, ClassPartition> classes_;
    std::optional<BivariatePolynomial> tutte_;
    std::optional<BivariatePolynomial> rank_;
};

BivariatePolynomial negate_both(const BivariatePolynomial& p) { return p.substitute(-1, 0, -1, 0); }

// --- integral ------------------------------------------------------------

void check_t1b(Context& c, Recorder& r) {
    BivariatePolynomial open, closed;
    for (std::size_t i = 0; i < c.orientations.size(); ++i) {
        open += c.local(i, Family::kappa_local);
        closed += c.local(i, Family::kappa_bar_local);
    }
    r.equal("kappa_Z vs sum of kappa_rho", c.poly(Family::kappa_int), open);
    r.equal("kappa_bar_Z vs sum of kappa_bar_rho", c.poly(Family::kappa_bar_int), closed);
}

void reciprocity(Context& c, Recorder& r, const std::vector<std::size_t>& rhos, Family open_family,
                 Family closed_family, const std::string& label) {
    BivariatePolynomial from_closed, from_open;
    for (auto i : rhos) {
        const auto w = sign(c.s.rank + c.minty[i].circuit_part.size());
        from_closed += w * c.local(i, Family::kappa_bar_local);
        from_open += w * c.local(i, Family::kappa_local);
    }
    r.equal(label + "(-x,-y) vs signed sum of local duals", negate_both(c.poly(open_family)), from_closed);
    r.equal(label + "_bar(-x,-y) vs signed sum of local polynomials", negate_both(c.poly(closed_family)), from_open);
}

std::vector<std::size_t> all_indices(const Context& c) {
    std::vector<std::size_t> v(c.orientations.size());
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

std::vector<std::size_t> representative_indices(Context& c) {
    std::vector<std::size_t> v;
    for (const auto& rho : c.classes(Relation::cut_eulerian).representatives) v.push_back(c.index_of(rho));
    return v;
}

void specializations(Context& c, Recorder& r, Family open, Family closed, Family tau, Family phi, Family tau_bar,
                     Family phi_bar, const std::string& label) {
    const auto& k = c.poly(open);
    const auto& kb = c.poly(closed);
    r.equal(label + "(x,1) vs tau", k.at_y(1), c.poly(tau));
    r.equal(label + "(1,y) vs phi", k.at_x(1), c.poly(phi));
    r.equal(label + "_bar(x,-1) vs tau_bar", kb.at_y(-1), c.poly(tau_bar));
    r.equal(label + "_bar(-1,y) vs phi_bar", kb.at_x(-1), c.poly(phi_bar));
}

void convolution(Context& c, Recorder& r, Family open, Family closed, Family tau, Family phi, Family tau_bar,
                 Family phi_bar, const std::string& label) {
    BivariatePolynomial open_sum, closed_sum;
    const auto ids = c.g.edge_ids().ids();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ids.size()); ++mask) {
        EdgeSet x;
        for (std::size_t k = 0; k < ids.size(); ++k)
            if ((mask >> k) & 1U) x.insert(ids[k]);
        const auto quotient = contract(c.g, x);
        const auto part = restrict(c.g, x);
        open_sum += c.minor_poly(quotient, tau) * c.minor_poly(part, phi);
        closed_sum += c.minor_poly(quotient, tau_bar) * c.minor_poly(part, phi_bar);
    }
    r.equal(label + " vs sum over X of tau(G/X) phi(G|X)", c.poly(open), open_sum);
    r.equal(label + "_bar vs sum over X of tau_bar(G/X) phi_bar(G|X)", c.poly(closed), closed_sum);
}

// --- modular -------------------------------------------------------------

void check_t2b(Context& c, Recorder& r) {
    BivariatePolynomial open, closed;
    for (auto i : representative_indices(c)) {
        open += c.local(i, Family::kappa_local);
        closed += c.local(i, Family::kappa_bar_local);
    }
    r.equal("kappa vs sum over classes of kappa_rho", c.poly(Family::kappa_mod), open);
    r.equal("kappa_bar vs sum over classes of kappa_bar_rho", c.poly(Family::kappa_bar_mod), closed);
}

// --- local ---------------------------------------------------------------

void check_pl(Context& c, Recorder& r) {
    for (std::size_t i = 0; i < c.orientations.size(); ++i) {
        const auto& rho = c.orientations[i];
        const auto tag = "rho=" + rho.to_string() + " ";
        const auto circuit = c.minty[i].circuit_part;
        const auto quotient = contract(c.g, circuit);
        const auto part = restrict(c.g, circuit);
        const auto rho_q = rho.induced_on(quotient);
        const auto rho_p = rho.induced_on(part);
        const auto& po = c.poly_options();
        const auto& k = c.local(i, Family::kappa_local);
        const auto& kb = c.local(i, Family::kappa_bar_local);

        r.equal(tag + "kappa_rho vs tau(G/C) phi(G|C)", k,
                local_polynomial(quotient, Family::tau_local, rho_q, po) *
                    local_polynomial(part, Family::phi_local, rho_p, po));
        r.equal(tag + "kappa_bar_rho vs tau_bar(G/C) phi_bar(G|C)", kb,
                local_polynomial(quotient, Family::tau_bar_local, rho_q, po) *
                    local_polynomial(part, Family::phi_bar_local, rho_p, po));
        r.equal(tag + "kappa_rho(-x,-y) vs signed kappa_bar_rho", negate_both(k),
                sign(c.s.rank + circuit.size()) * kb);
        r.equal(tag + "kappa_rho(x,1) vs tau_rho", k.at_y(1), c.local(i, Family::tau_local));
        r.equal(tag + "kappa_rho(1,y) vs phi_rho", k.at_x(1), c.local(i, Family::phi_local));
        // The dual specializations rest on tau_rho(-x) = (-1)^r tau_bar_rho(x),
        // which holds only for acyclic rho (totally cyclic for the flow side);
        // elsewhere tau_rho vanishes and so does the specialization.
        const bool acyclic = circuit.empty();
        const bool totally_cyclic = c.minty[i].bond_part.empty();
        const auto& tb = c.local(i, Family::tau_bar_local);
        const auto& pb = c.local(i, Family::phi_bar_local);
        r.equal(tag + "kappa_bar_rho(x,-1) vs signed tau_bar_rho", kb.at_y(-1),
                acyclic ? sign(circuit.size()) * tb : BivariatePolynomial());
        r.equal(tag + "kappa_bar_rho(-1,y) vs signed phi_bar_rho", kb.at_x(-1),
                totally_cyclic ? sign(c.minty[i].bond_part.size()) * pb : BivariatePolynomial());
        if (acyclic)
            r.equal(tag + "tau_rho(-x) vs (-1)^r tau_bar_rho", c.local(i, Family::tau_local).substitute(-1, 0, 1, 0),
                    sign(c.s.rank) * tb);
        if (totally_cyclic)
            r.equal(tag + "phi_rho(-y) vs (-1)^n phi_bar_rho", c.local(i, Family::phi_local).substitute(1, 0, -1, 0),
                    sign(c.s.nullity) * pb);
    }
}

// --- rank generating -----------------------------------------------------

void check_t3(Context& c, Recorder& r) {
    r.equal("kappa_bar vs R_G", c.poly(Family::kappa_bar_mod), c.rank_poly());
    for (std::int64_t p = 1; p <= 3; ++p)
        for (std::int64_t q = 1; q <= 3; ++q)
            r.equal("T(" + std::to_string(p) + "," + std::to_string(q) + ") vs triple count",
                    c.tutte_poly().evaluate(p, q), Rational(c.count_at(Family::kappa_bar_mod, p - 1, q - 1)));
}

void check_rpq(Context& c, Recorder& r) {
    const auto eps = c.poly_options().reference.value_or(Orientation::reference(c.g));
    const std::size_t m = c.g.edge_count();
    const std::uint64_t full = m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    for (std::int64_t p = 1; p <= 3; ++p) {
        for (std::int64_t q = 1; q <= 3; ++q) {
            std::unordered_map<std::uint64_t, std::uint64_t> kernels, supports;
            for_each_modular_tension(c.g, eps, AbelianGroup::cyclic(p),
                                     [&](const EdgeVector& f) { ++kernels[zero_mask(f)]; }, c.poly_options().budget);
            for_each_modular_flow(c.g, eps, AbelianGroup::cyclic(q),
                                  [&](const EdgeVector& g) { ++supports[full & ~zero_mask(g)]; },
                                  c.poly_options().budget);
            Integer positive = 0, negative = 0;
            for (auto [ker, nf] : kernels) {
                for (auto [supp, ng] : supports) {
                    if ((supp & ~ker) != 0) continue;
                    positive += Integer(nf) * ng * (Integer(1) << std::popcount(ker & ~supp));
                    if (supp == ker) {
                        Integer term = Integer(nf) * ng;
                        negative += std::popcount(supp) % 2 == 0 ? term : Integer(-term);
                    }
                }
            }
            if (c.s.rank % 2 == 1) negative = -negative;
            const auto at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            r.equal("R" + at + " vs weighted pair sum", c.rank_poly().evaluate(p, q), Rational(positive));
            r.equal("R(-p,-q) at " + at + " vs signed pair sum", c.rank_poly().evaluate(-p, -q), Rational(negative));
        }
    }
}

void check_pe(Context& c, Recorder& r) {
    const auto& ce = c.classes(Relation::cut_eulerian);
    const auto& cu = c.classes(Relation::cut);
    const auto& eu = c.classes(Relation::eulerian);
    for (const auto& rho : c.orientations) {
        const auto tag = "rho=" + rho.to_string() + " ";
        const Rational size(ce.class_size_of(rho));
        r.equal(tag + "#[rho]_ce vs #[rho]_cu * #[rho]_eu", size,
                Rational(cu.class_size_of(rho) * eu.class_size_of(rho)));
        r.equal(tag + "#[rho]_ce vs kappa_bar_rho(1,1)", size,
                Rational(c.count_at(Family::kappa_bar_local, 1, 1, rho)));
    }
}

void check_im(Context& c, Recorder& r) {
    auto weighted = [&](const ClassPartition& part, Family local) {
        BivariatePolynomial sum;
        for (std::size_t k = 0; k < part.class_count(); ++k)
            sum += Rational(part.classes[k].size()) * c.local(c.index_of(part.representatives[k]), local);
        return sum;
    };
    const auto& ce = c.classes(Relation::cut_eulerian);
    r.equal("kappa_Z vs class-weighted kappa_rho", c.poly(Family::kappa_int), weighted(ce, Family::kappa_local));
    r.equal("kappa_bar_Z vs class-weighted kappa_bar_rho", c.poly(Family::kappa_bar_int),
            weighted(ce, Family::kappa_bar_local));
    r.equal("tau_Z vs cut-class-weighted tau_rho", c.poly(Family::tau_int),
            weighted(c.classes(Relation::cut, OrientationFilter::acyclic), Family::tau_local));
    r.equal("phi_Z vs Eulerian-class-weighted phi_rho", c.poly(Family::phi_int),
            weighted(c.classes(Relation::eulerian, OrientationFilter::totally_cyclic), Family::phi_local));
}

struct Census {
    std::size_t orientations = 0, acyclic = 0, totally_cyclic = 0;
    std::size_t cu = 0, eu = 0, ce = 0;                               // |O_cu|, |O_eu|, |O_ce|
    std::size_t classes = 0, classes_cu = 0, classes_eu = 0, classes_ce = 0, classes_ac = 0, classes_tc = 0;
    std::size_t sum_cu = 0, sum_eu = 0, sum_ce = 0;                   // sums of class sizes over all rho
    std::size_t cut_classes = 0, eulerian_classes = 0;
};

Census census(Context& c) {
    Census out;
    const auto& ce = c.classes(Relation::cut_eulerian);
    const auto& cu = c.classes(Relation::cut);
    const auto& eu = c.classes(Relation::eulerian);
    std::unordered_set<std::size_t> in_cu, in_eu, in_ce, in_ac, in_tc;
    for (std::size_t i = 0; i < c.orientations.size(); ++i) {
        const auto& rho = c.orientations[i];
        const auto rev = rho.reversed();
        const auto cls = *ce.class_of(rho);
        ++out.orientations;
        if (c.minty[i].circuit_part.empty()) {
            ++out.acyclic;
            in_ac.insert(cls);
        }
        if (c.minty[i].bond_part.empty()) {
            ++out.totally_cyclic;
            in_tc.insert(cls);
        }
        if (equivalent(c.g, rho, rev, Relation::cut)) {
            ++out.cu;
            in_cu.insert(cls);
        }
        if (equivalent(c.g, rho, rev, Relation::eulerian)) {
            ++out.eu;
            in_eu.insert(cls);
        }
        if (equivalent(c.g, rho, rev, Relation::cut_eulerian)) {
            ++out.ce;
            in_ce.insert(cls);
        }
        out.sum_cu += cu.class_size_of(rho);
        out.sum_eu += eu.class_size_of(rho);
        out.sum_ce += ce.class_size_of(rho);
    }
    out.classes = ce.class_count();
    out.classes_cu = in_cu.size();
    out.classes_eu = in_eu.size();
    out.classes_ce = in_ce.size();
    out.classes_ac = in_ac.size();
    out.classes_tc = in_tc.size();
    out.cut_classes = cu.class_count();
    out.eulerian_classes = eu.class_count();
    return out;
}

void check_cs(Context& c, Recorder& r) {
    const auto n = census(c);
    const auto& ki = c.poly(Family::kappa_int);
    const auto& kbi = c.poly(Family::kappa_bar_int);
    const auto& k = c.poly(Family::kappa_mod);
    const auto& kb = c.poly(Family::kappa_bar_mod);
    const auto& t = c.tutte_poly();
    const bool has_edges = c.g.edge_count() > 0;
    auto R = [](std::size_t v) { return Rational(v); };

    r.equal("kappa_bar_Z(0,0) vs |O|", kbi.evaluate(0, 0), R(n.orientations));
    r.equal("|kappa_Z(1,0)| vs |O_tc|", abs(ki.evaluate(1, 0)), R(n.totally_cyclic));
    r.equal("kappa_bar_Z(-1,0) vs |O_tc|", kbi.evaluate(-1, 0), R(n.totally_cyclic));
    r.equal("|kappa_Z(0,1)| vs |O_ac|", abs(ki.evaluate(0, 1)), R(n.acyclic));
    r.equal("kappa_bar_Z(0,-1) vs |O_ac|", kbi.evaluate(0, -1), R(n.acyclic));
    if (has_edges) {
        r.equal("kappa_Z(1,1)", ki.evaluate(1, 1), Rational(0));
        r.equal("kappa_bar_Z(-1,-1)", kbi.evaluate(-1, -1), Rational(0));
    }
    r.equal("kappa_Z(2,1) vs |O_cu|", ki.evaluate(2, 1), R(n.cu));
    r.equal("|kappa_bar_Z(-2,-1)| vs |O_cu|", abs(kbi.evaluate(-2, -1)), R(n.cu));
    r.equal("kappa_Z(1,2) vs |O_eu|", ki.evaluate(1, 2), R(n.eu));
    r.equal("|kappa_bar_Z(-1,-2)| vs |O_eu|", abs(kbi.evaluate(-1, -2)), R(n.eu));
    r.equal("kappa_Z(2,2) vs |O_ce|", ki.evaluate(2, 2), R(n.ce));
    r.equal("kappa_bar_Z(1,0) vs sum of #[rho]_cu", kbi.evaluate(1, 0), R(n.sum_cu));
    r.equal("kappa_bar_Z(0,1) vs sum of #[rho]_eu", kbi.evaluate(0, 1), R(n.sum_eu));
    r.equal("kappa_bar_Z(1,1) vs sum of #[rho]_ce", kbi.evaluate(1, 1), R(n.sum_ce));

    if (has_edges) {
        r.equal("T(0,0)", t.evaluate(0, 0), Rational(0));
        r.equal("kappa_bar(-1,-1)", kb.evaluate(-1, -1), Rational(0));
        r.equal("kappa(1,1)", k.evaluate(1, 1), Rational(0));
    }
    r.equal("T(1,1) vs #[O]", t.evaluate(1, 1), R(n.classes));
    r.equal("kappa_bar(0,0) vs #[O]", kb.evaluate(0, 0), R(n.classes));
    r.equal("T(2,2) vs |O|", t.evaluate(2, 2), R(n.orientations));
    r.equal("kappa_bar(1,1) vs |O|", kb.evaluate(1, 1), R(n.orientations));
    r.equal("kappa(2,2) vs #[O_ce]", k.evaluate(2, 2), R(n.classes_ce));
    r.equal("|T(0,-1)| vs #[O_eu]", abs(t.evaluate(0, -1)), R(n.classes_eu));
    r.equal("|kappa_bar(-1,-2)| vs #[O_eu]", abs(kb.evaluate(-1, -2)), R(n.classes_eu));
    r.equal("kappa(1,2) vs #[O_eu]", k.evaluate(1, 2), R(n.classes_eu));
    r.equal("|T(-1,0)| vs #[O_cu]", abs(t.evaluate(-1, 0)), R(n.classes_cu));
    r.equal("|kappa_bar(-2,-1)| vs #[O_cu]", abs(kb.evaluate(-2, -1)), R(n.classes_cu));
    r.equal("kappa(2,1) vs #[O_cu]", k.evaluate(2, 1), R(n.classes_cu));
    r.equal("T(1,0) vs #[O_ac]", t.evaluate(1, 0), R(n.classes_ac));
    r.equal("kappa_bar(0,-1) vs #[O_ac]", kb.evaluate(0, -1), R(n.classes_ac));
    r.equal("|kappa(0,1)| vs #[O_ac]", abs(k.evaluate(0, 1)), R(n.classes_ac));
    r.equal("T(0,1) vs #[O_tc]", t.evaluate(0, 1), R(n.classes_tc));
    r.equal("kappa_bar(-1,0) vs #[O_tc]", kb.evaluate(-1, 0), R(n.classes_tc));
    r.equal("|kappa(1,0)| vs #[O_tc]", abs(k.evaluate(1, 0)), R(n.classes_tc));
    r.equal("T(1,2) vs cut classes", t.evaluate(1, 2), R(n.cut_classes));
    r.equal("kappa_bar(0,1) vs cut classes", kb.evaluate(0, 1), R(n.cut_classes));
    r.equal("T(2,1) vs Eulerian classes", t.evaluate(2, 1), R(n.eulerian_classes));
    r.equal("kappa_bar(1,0) vs Eulerian classes", kb.evaluate(1, 0), R(n.eulerian_classes));
}

void check_tc(Context& c, Recorder& r) {
    BivariatePolynomial sum;
    const auto ids = c.g.edge_ids().ids();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ids.size()); ++mask) {
        EdgeSet x;
        for (std::size_t k = 0; k < ids.size(); ++k)
            if ((mask >> k) & 1U) x.insert(ids[k]);
        sum += c.minor_tutte(contract(c.g, x)).at_y(0) * c.minor_tutte(restrict(c.g, x)).at_x(0);
    }
    r.equal("T vs sum over X of T(G/X;x,0) T(G|X;0,y)", c.tutte_poly(), sum);
}

void check_ind(Context& c, Recorder& r) {
    // A second reference digraph: every other edge reversed.
    EdgeSet alternate;
    const auto ids = c.g.edge_ids().ids();
    for (std::size_t k = 0; k < ids.size(); k += 2) alternate.insert(ids[k]);
    PolynomialOptions other = c.poly_options();
    other.reference = Orientation::reference(c.g).flipped_on(alternate);
    r.equal("kappa_Z under a second reference", counting_polynomial(c.g, Family::kappa_int, other),
            c.poly(Family::kappa_int));
    r.equal("kappa under a second reference", counting_polynomial(c.g, Family::kappa_mod, other),
            c.poly(Family::kappa_mod));

    PolynomialOptions largest = c.poly_options();
    largest.representatives = RepresentativeChoice::largest;
    for (auto f : {Family::kappa_bar_mod, Family::tau_bar_mod, Family::phi_bar_mod})
        r.equal(std::string(traits(f).name) + " with largest representatives", counting_polynomial(c.g, f, largest),
                c.poly(f));
}

void check_tp(Context& c, Recorder& r) {
    const auto& t = c.tutte_poly();
    r.equal("tau vs (-1)^r T(1-x,0)", c.poly(Family::tau_mod), sign(c.s.rank) * t.substitute(-1, 1, 1, 0).at_y(0));
    r.equal("phi vs (-1)^n T(0,1-y)", c.poly(Family::phi_mod), sign(c.s.nullity) * t.substitute(1, 0, -1, 1).at_x(0));
}

void check_tr(Context& c, Recorder& r) {
    r.equal("T vs R(x-1,y-1)", c.tutte_poly(), c.rank_poly().substitute(1, -1, 1, -1));
}

using Checker = std::function<void(Context&, Recorder&)>;

const std::unordered_map<std::string, Checker>& checkers() {
    static const std::unordered_map<std::string, Checker> table{
        {"T1b", check_t1b},
        {"T1c", [](Context& c, Recorder& r) {
             reciprocity(c, r, all_indices(c), Family::kappa_int, Family::kappa_bar_int, "kappa_Z");
         }},
        {"T1d", [](Context& c, Recorder& r) {
             specializations(c, r, Family::kappa_int, Family::kappa_bar_int, Family::tau_int, Family::phi_int,
                             Family::tau_bar_int, Family::phi_bar_int, "kappa_Z");
         }},
        {"T1e", [](Context& c, Recorder& r) {
             convolution(c, r, Family::kappa_int, Family::kappa_bar_int, Family::tau_int, Family::phi_int,
                         Family::tau_bar_int, Family::phi_bar_int, "kappa_Z");
         }},
        {"T2b", check_t2b},
        {"T2c", [](Context& c, Recorder& r) {
             reciprocity(c, r, representative_indices(c), Family::kappa_mod, Family::kappa_bar_mod, "kappa");
         }},
        {"T2d", [](Context& c, Recorder& r) {
             specializations(c, r, Family::kappa_mod, Family::kappa_bar_mod, Family::tau_mod, Family::phi_mod,
                             Family::tau_bar_mod, Family::phi_bar_mod, "kappa");
         }},
        {"T2e", [](Context& c, Recorder& r) {
             convolution(c, r, Family::kappa_mod, Family::kappa_bar_mod, Family::tau_mod, Family::phi_mod,
                         Family::tau_bar_mod, Family::phi_bar_mod, "kappa");
         }},
        {"PL", check_pl},
        {"T3", check_t3},
        {"PE", check_pe},
        {"RPQ", check_rpq},
        {"IM", check_im},
        {"CS", check_cs},
        {"TC", check_tc},
        {"IND", check_ind},
        {"TP", check_tp},
        {"TR", check_tr},
    };
    return table;
}

} // namespace

bool IdentityReport::all_passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const IdentityEntry& e) { return e.passed; });
}

const IdentityEntry* IdentityReport::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& info : identity_table()) v.emplace_back(info.id);
        return v;
    }();
    return ids;
}

IdentityReport verify_graph(const MultiGraph& g, const VerifyOptions& options) {
    if (g.edge_count() > options.edge_limit)
        throw EnumerationLimitExceeded("verify: " + std::to_string(g.edge_count()) + " edges exceeds limit " +
                                       std::to_string(options.edge_limit));
    Context context(g, options);
    IdentityReport report;
    for (const auto& info : identity_table()) {
        IdentityEntry entry{info.id, info.tag, false, {}};
        Recorder recorder(entry);
        try {
            checkers().at(info.id)(context, recorder);
        } catch (const std::exception& e) {
            entry.witness = std::string("skipped: ") + e.what();
        }
        if (options.forced_failures.count(info.id) && entry.witness.empty())
            entry.witness = "forced failure";
        entry.passed = entry.witness.empty();
        report.entries.push_back(std::move(entry));
    }

    try {
        if (g.edge_count() > 0) {
            const auto n = census(context);
            report.notices.push_back("kappa(2,2) = " + to_string(context.poly(Family::kappa_mod).evaluate(2, 2)) +
                                     ", |O_ce| = " + std::to_string(n.ce) + ", #[O_ce] = " +
                                     std::to_string(n.classes_ce));
        }
    } catch (const std::exception& e) {
        report.notices.push_back(std::string("census unavailable: ") + e.what());
    }
    return report;
}

std::vector<MultiGraph> corpus_graphs(std::size_t max_edges, bool include_loops) {
    std::vector<MultiGraph> out;
    for (std::size_t n = 1; n <= max_edges + 1; ++n) {
        std::vector<std::pair<Vertex, Vertex>> slots;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = include_loops ? u : u + 1; v < n; ++v) slots.emplace_back(u, v);

        std::vector<std::vector<std::pair<Vertex, Vertex>>> level{{}};
        for (std::size_t m = 0;; ++m) {
            for (const auto& edges : level) out.emplace_back(n, std::span<const std::pair<Vertex, Vertex>>(edges));
            if (m == max_edges) break;
            std::set<std::string> seen;
            std::vector<std::vector<std::pair<Vertex, Vertex>>> next;
            for (const auto& edges : level) {
                for (const auto& slot : slots) {
                    auto grown = edges;
                    grown.push_back(slot);
                    auto key = canonical_key(MultiGraph(n, std::span<const std::pair<Vertex, Vertex>>(grown)));
                    if (!key) throw EnumerationLimitExceeded("corpus: too many vertices for canonical forms");
                    if (seen.insert(*key).second) next.push_back(std::move(grown));
                }
            }
            level = std::move(next);
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const MultiGraph& a, const MultiGraph& b) { return a.edge_count() < b.edge_count(); });
    return out;
}

std::vector<CorpusEntry> verify_corpus(std::size_t max_edges, bool include_loops, const VerifyOptions& options) {
    std::vector<CorpusEntry> out;
    for (auto& g : corpus_graphs(max_edges, include_loops)) {
        auto report = verify_graph(g, options);
        out.push_back({std::move(g), std::move(report)});
    }
    return out;
}

nlohmann::json to_json(const IdentityReport& report) {
    nlohmann::json identities = nlohmann::json::array();
    for (const auto& e : report.entries)
        identities.push_back(
            {{"id", e.id}, {"tag", e.tag}, {"status", e.passed ? "pass" : "fail"}, {"witness", e.witness}});
    return {{"identities", identities}, {"notices", report.notices}, {"all_passed", report.all_passed()}};
}

std::string to_text(const IdentityReport& report) {
    std::ostringstream out;
    for (const auto& e : report.entries) {
        out << (e.passed ? "pass  " : "FAIL  ") << e.id;
        out << std::string(e.id.size() < 5 ? 5 - e.id.size() : 1, ' ') << e.tag;
        if (!e.passed) out << "\n      " << e.witness;
        out << "\n";
    }
    for (const auto& n : report.notices) out << "note  " << n << "\n";
    return out.str();
}

} // namespace ctf
