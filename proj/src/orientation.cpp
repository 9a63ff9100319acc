#include "ctf/orientation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ctf {

namespace {

int popcount(EdgeSet s) { return static_cast<int>(s.size()); }

// Bitmask view of the incidence structure, used for 0-1 membership tests.
struct BitStructure {
    std::vector<EdgeSet> out_edges; // non-loop edges whose reference tail is v
    std::vector<EdgeSet> in_edges;  // non-loop edges whose reference head is v
    std::vector<std::pair<EdgeSet, EdgeSet>> circuits; // (+1 edges, -1 edges) by reference

    explicit BitStructure(const MultiGraph& g) : out_edges(g.vertex_count()), in_edges(g.vertex_count()) {
        for (const auto& e : g.edges()) {
            if (e.is_loop()) continue;
            out_edges[e.tail].insert(e.id);
            in_edges[e.head].insert(e.id);
        }
        for (const auto& c : spanning_structure(g).fundamental_circuits) {
            EdgeSet pos, neg;
            for (const auto& se : c.edges) (se.sign > 0 ? pos : neg).insert(g.edge(se.index).id);
            circuits.emplace_back(pos, neg);
        }
    }

    // Whether the 0-1 vector supported on `d` is a flow of (G, rho).
    bool is_01_flow(EdgeSet d, EdgeSet flips) const {
        for (std::size_t v = 0; v < out_edges.size(); ++v) {
            EdgeSet leaving = (out_edges[v] - flips) | (in_edges[v] & flips);
            EdgeSet entering = (in_edges[v] - flips) | (out_edges[v] & flips);
            if (popcount(d & leaving) != popcount(d & entering)) return false;
        }
        return true;
    }

    // Whether the 0-1 vector supported on `d` is a tension of (G, rho).
    bool is_01_tension(EdgeSet d, EdgeSet flips) const {
        for (const auto& [pos, neg] : circuits) {
            EdgeSet plus = (pos - flips) | (neg & flips);
            EdgeSet minus = (neg - flips) | (pos & flips);
            if (popcount(d & plus) != popcount(d & minus)) return false;
        }
        return true;
    }

    bool related(const MultiGraph& g, const Orientation& r, const Orientation& s, Relation rel,
                 const MintyPartition& minty_r) const {
        EdgeSet d = r.flips ^ s.flips;
        switch (rel) {
        case Relation::cut: return is_01_tension(d, r.flips);
        case Relation::eulerian: return is_01_flow(d, r.flips);
        case Relation::cut_eulerian:
            return is_01_tension(d & minty_r.bond_part, r.flips) && is_01_flow(d & minty_r.circuit_part, r.flips);
        }
        (void)g;
        return false;
    }
};

void check_domain(const MultiGraph& g, const Orientation& o) {
    if (o.domain != g.edge_ids() || !o.flips.is_subset_of(o.domain))
        throw std::invalid_argument("orientation does not belong to this graph");
}

std::vector<std::size_t> positions_by_id(const MultiGraph& g) {
    std::vector<std::size_t> order(g.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g.edge(a).id < g.edge(b).id; });
    return order;
}

} // namespace

Orientation Orientation::from_string(const MultiGraph& g, std::string_view bits) {
    if (bits.size() != g.edge_count())
        throw std::invalid_argument("orientation string must have one character per edge");
    Orientation o = reference(g);
    auto order = positions_by_id(g);
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1') o.flips.insert(g.edge(order[k]).id);
        else if (bits[k] != '0') throw std::invalid_argument("orientation string must contain only 0 and 1");
    }
    return o;
}

std::string Orientation::to_string() const {
    std::string s;
    for (auto id : domain.ids()) s.push_back(flips.contains(id) ? '1' : '0');
    return s;
}

Orientation Orientation::induced_on(const MultiGraph& g) const {
    if (!g.edge_ids().is_subset_of(domain)) throw std::invalid_argument("graph is not a minor of the orientation's graph");
    return {g.edge_ids(), flips & g.edge_ids()};
}

bool lex_less(const Orientation& a, const Orientation& b) {
    std::uint64_t diff = a.flips.bits() ^ b.flips.bits();
    if (diff == 0) return false;
    auto first = static_cast<EdgeId>(std::countr_zero(diff));
    return !a.flips.contains(first);
}

int direction(const MultiGraph& g, const Orientation& o, std::size_t position) {
    return o.flipped(g.edge(position).id) ? -1 : 1;
}

IncidenceSign incidence_sign(const MultiGraph& g, const Orientation& o, Vertex v, std::size_t position) {
    const Edge& e = g.edge(position);
    const int dir = direction(g, o, position);
    IncidenceSign s;
    if (e.is_loop()) {
        if (e.tail == v) {
            s.first = dir;
            s.second = -dir;
            s.is_double = true;
        }
        return s;
    }
    if (e.tail == v) s.first = dir;
    else if (e.head == v) s.first = -dir;
    return s;
}

std::vector<std::int64_t> boundary(const MultiGraph& g, const Orientation& o, const EdgeVector& values) {
    check_domain(g, o);
    if (values.size() != g.edge_count()) throw std::invalid_argument("boundary: dimension mismatch");
    std::vector<std::int64_t> out(g.vertex_count(), 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (e.is_loop()) continue;
        const std::int64_t signed_value = direction(g, o, i) * values[i];
        out[e.tail] += signed_value;
        out[e.head] -= signed_value;
    }
    return out;
}

namespace {
bool is_zero_mod(std::int64_t value, std::int64_t modulus) {
    if (modulus == 0) return value == 0;
    return value % modulus == 0;
}
} // namespace

bool is_flow(const MultiGraph& g, const Orientation& o, const EdgeVector& values, std::int64_t modulus) {
    for (auto b : boundary(g, o, values))
        if (!is_zero_mod(b, modulus)) return false;
    return true;
}

bool is_tension(const MultiGraph& g, const Orientation& o, const EdgeVector& values, std::int64_t modulus) {
    check_domain(g, o);
    if (values.size() != g.edge_count()) throw std::invalid_argument("is_tension: dimension mismatch");
    for (const auto& circuit : spanning_structure(g).fundamental_circuits) {
        std::int64_t sum = 0;
        for (const auto& se : circuit.edges) sum += se.sign * direction(g, o, se.index) * values[se.index];
        if (!is_zero_mod(sum, modulus)) return false;
    }
    return true;
}

MintyPartition minty_partition(const MultiGraph& g, const Orientation& o) {
    check_domain(g, o);
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Vertex>> succ(n);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (e.is_loop()) continue;
        if (direction(g, o, i) > 0) succ[e.tail].push_back(e.head);
        else succ[e.head].push_back(e.tail);
    }
    // reach[u][v]: v reachable from u along arcs.
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<Vertex> stack{s};
        reach[s][s] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : succ[v])
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    stack.push_back(w);
                }
        }
    }
    MintyPartition part;
    for (const auto& e : g.edges()) {
        bool on_circuit = e.is_loop() || (reach[e.tail][e.head] && reach[e.head][e.tail]);
        (on_circuit ? part.circuit_part : part.bond_part).insert(e.id);
    }
    return part;
}

OrientationClassification classify(const MultiGraph& g, const Orientation& o) {
    OrientationClassification c;
    c.partition = minty_partition(g, o);
    c.is_acyclic = c.partition.circuit_part.empty();
    c.is_totally_cyclic = c.partition.bond_part.empty();
    return c;
}

EdgeVector coupling(const MultiGraph& g, const Orientation& r, const Orientation& s) {
    check_domain(g, r);
    check_domain(g, s);
    EdgeVector out(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const EdgeId id = g.edge(i).id;
        out[i] = r.flipped(id) == s.flipped(id) ? 1 : -1;
    }
    return out;
}

EdgeVector indicator(const MultiGraph& g, const Orientation& r, const Orientation& s) {
    EdgeVector c = coupling(g, r, s);
    for (auto& v : c) v = (1 - v) / 2;
    return c;
}

std::string to_string(Relation r) {
    switch (r) {
    case Relation::cut: return "cut";
    case Relation::eulerian: return "eulerian";
    case Relation::cut_eulerian: return "cut-eulerian";
    }
    return "?";
}

std::string to_string(OrientationFilter f) {
    switch (f) {
    case OrientationFilter::all: return "all";
    case OrientationFilter::acyclic: return "acyclic";
    case OrientationFilter::totally_cyclic: return "totally-cyclic";
    }
    return "?";
}

std::optional<Relation> parse_relation(std::string_view s) {
    if (s == "cut") return Relation::cut;
    if (s == "eulerian") return Relation::eulerian;
    if (s == "cut-eulerian" || s == "cut_eulerian") return Relation::cut_eulerian;
    return std::nullopt;
}

std::optional<OrientationFilter> parse_filter(std::string_view s) {
    if (s == "all") return OrientationFilter::all;
    if (s == "acyclic") return OrientationFilter::acyclic;
    if (s == "totally-cyclic" || s == "totally_cyclic") return OrientationFilter::totally_cyclic;
    return std::nullopt;
}

bool equivalent(const MultiGraph& g, const Orientation& r, const Orientation& s, Relation relation) {
    check_domain(g, r);
    check_domain(g, s);
    BitStructure bits(g);
    return bits.related(g, r, s, relation, minty_partition(g, r));
}

std::vector<Orientation> all_orientations(const MultiGraph& g, OrientationFilter filter, std::size_t limit) {
    if (g.edge_count() > limit)
        throw EnumerationLimitExceeded("orientation sweep over " + std::to_string(g.edge_count()) +
                                       " edges exceeds limit " + std::to_string(limit));
    std::vector<Orientation> out;
    const std::uint64_t total = std::uint64_t{1} << g.edge_count();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Orientation o = Orientation::reference(g);
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            if ((mask >> i) & 1U) o.flips.insert(g.edge(i).id);
        if (filter != OrientationFilter::all) {
            auto c = classify(g, o);
            if (filter == OrientationFilter::acyclic && !c.is_acyclic) continue;
            if (filter == OrientationFilter::totally_cyclic && !c.is_totally_cyclic) continue;
        }
        out.push_back(o);
    }
    return out;
}

std::optional<std::size_t> ClassPartition::class_of(const Orientation& o) const {
    auto it = index.find(o.flips.bits());
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::size_t ClassPartition::class_size_of(const Orientation& o) const {
    auto c = class_of(o);
    if (!c) throw std::invalid_argument("orientation not covered by this partition");
    return classes[*c].size();
}

ClassPartition enumerate_classes(const MultiGraph& g, Relation relation, OrientationFilter filter, std::size_t limit,
                                 RepresentativeChoice choice) {
    auto members = all_orientations(g, filter, limit);
    BitStructure bits(g);
    std::vector<MintyPartition> minty;
    minty.reserve(members.size());
    for (const auto& o : members) minty.push_back(minty_partition(g, o));

    std::vector<std::size_t> parent(members.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            auto a = find(i), b = find(j);
            if (a == b) continue;
            if (bits.related(g, members[i], members[j], relation, minty[i])) parent[std::max(a, b)] = std::min(a, b);
        }

    std::unordered_map<std::size_t, std::vector<Orientation>> grouped;
    for (std::size_t i = 0; i < members.size(); ++i) grouped[find(i)].push_back(members[i]);

    ClassPartition out;
    out.relation = relation;
    out.filter = filter;
    for (auto& [root, cls] : grouped) {
        std::sort(cls.begin(), cls.end(), lex_less);
        out.classes.push_back(std::move(cls));
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const auto& a, const auto& b) { return lex_less(a.front(), b.front()); });
    for (std::size_t k = 0; k < out.classes.size(); ++k) {
        const auto& cls = out.classes[k];
        out.representatives.push_back(choice == RepresentativeChoice::smallest ? cls.front() : cls.back());
        for (const auto& o : cls) out.index.emplace(o.flips.bits(), k);
    }
    return out;
}

} // namespace ctf
