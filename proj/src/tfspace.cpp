#include "ctf/tfspace.hpp"

#include <array>
#include <bit>
#include <unordered_map>

namespace ctf {

namespace {

void check_domain(const MultiGraph& g, const Orientation& o) {
    if (o.domain != g.edge_ids() || !o.flips.is_subset_of(o.domain))
        throw std::invalid_argument("orientation does not belong to this graph");
}

std::uint64_t checked_product(std::uint64_t acc, std::uint64_t factor, std::uint64_t budget, const char* what) {
    if (factor != 0 && acc > budget / factor)
        throw BudgetExceeded(std::string(what) + ": candidate count exceeds budget " + std::to_string(budget));
    acc *= factor;
    if (acc > budget)
        throw BudgetExceeded(std::string(what) + ": candidate count exceeds budget " + std::to_string(budget));
    return acc;
}

// Fundamental circuits expressed in the frame of an orientation and
// normalised so that the chord carries +1.
struct Frame {
    std::vector<std::size_t> forest;
    struct Chord {
        std::size_t position;
        std::vector<std::pair<std::size_t, int>> forest_terms; // (forest position, sign)
    };
    std::vector<Chord> chords;

    Frame(const MultiGraph& g, const Orientation& o) {
        auto data = spanning_structure(g);
        forest = data.forest_positions;
        for (const auto& circuit : data.fundamental_circuits) {
            Chord c{circuit.chord, {}};
            const int chord_sign = direction(g, o, circuit.chord); // chord's reference sign is +1
            for (const auto& se : circuit.edges) {
                if (se.index == circuit.chord) continue;
                c.forest_terms.emplace_back(se.index, chord_sign * se.sign * direction(g, o, se.index));
            }
            chords.push_back(std::move(c));
        }
    }
};

// Odometer over per-coordinate value lists.
template <typename Fn>
void odometer(const std::vector<std::vector<std::int64_t>>& values, Fn&& fn) {
    for (const auto& v : values)
        if (v.empty()) return;
    std::vector<std::size_t> digit(values.size(), 0);
    std::vector<std::int64_t> current(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) current[k] = values[k][0];
    while (true) {
        fn(current);
        std::size_t k = 0;
        for (; k < values.size(); ++k) {
            if (++digit[k] < values[k].size()) {
                current[k] = values[k][digit[k]];
                break;
            }
            digit[k] = 0;
            current[k] = values[k][0];
        }
        if (k == values.size()) return;
    }
}

std::vector<std::int64_t> admissible_values(const EdgeBound& b, bool nowhere_zero) {
    std::vector<std::int64_t> out;
    for (auto v = b.min_value(); v <= b.max_value(); ++v)
        if (!(nowhere_zero && v == 0)) out.push_back(v);
    return out;
}

bool admits(const Box& box, std::size_t pos, std::int64_t v) {
    return box.bounds[pos].admits(v) && !(box.nowhere_zero && v == 0);
}

// Counts of vectors keyed by an edge-position bitmask.
class MaskTally {
public:
    explicit MaskTally(std::size_t edges) : edges_(edges) {
        if (edges_ <= 20) dense_.assign(std::size_t{1} << edges_, 0);
    }
    void add(std::uint64_t mask) {
        if (!dense_.empty()) ++dense_[mask];
        else ++sparse_[mask];
    }
    std::uint64_t at(std::uint64_t mask) const {
        if (!dense_.empty()) return dense_[mask];
        auto it = sparse_.find(mask);
        return it == sparse_.end() ? 0 : it->second;
    }
    template <typename Fn>
    void for_each(Fn&& fn) const {
        if (!dense_.empty()) {
            for (std::size_t m = 0; m < dense_.size(); ++m)
                if (dense_[m]) fn(static_cast<std::uint64_t>(m), dense_[m]);
        } else {
            for (auto [m, c] : sparse_) fn(m, c);
        }
    }

private:
    std::size_t edges_;
    std::vector<std::uint64_t> dense_;
    std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

std::uint64_t full_mask(std::size_t edges) { return edges >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges) - 1; }

// Number of pairs (f, g) with ker f == supp g, given f tallied by zero mask
// and g tallied by zero mask.
std::uint64_t complementary_pairs(const MaskTally& tension_zeros, const MaskTally& flow_zeros, std::size_t edges) {
    std::uint64_t total = 0;
    const auto full = full_mask(edges);
    tension_zeros.for_each([&](std::uint64_t ker, std::uint64_t n) { total += n * flow_zeros.at(full & ~ker); });
    return total;
}

std::uint64_t count_visits(const std::function<void(const EdgeVectorVisitor&)>& run) {
    std::uint64_t n = 0;
    run([&](const EdgeVector&) { ++n; });
    return n;
}

} // namespace

std::uint64_t zero_mask(const EdgeVector& v) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == 0) m |= std::uint64_t{1} << i;
    return m;
}

void for_each_modular_tension(const MultiGraph& g, const Orientation& o, const AbelianGroup& group,
                              const EdgeVectorVisitor& visit, std::uint64_t budget) {
    check_domain(g, o);
    auto labels = component_labels(g);
    std::vector<bool> is_root(g.vertex_count(), false);
    std::vector<bool> seen_label(g.vertex_count(), false);
    std::vector<std::size_t> free_vertices;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!seen_label[labels[v]]) {
            seen_label[labels[v]] = true;
            is_root[v] = true;
        } else {
            free_vertices.push_back(v);
        }
    }
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < free_vertices.size(); ++k)
        total = checked_product(total, static_cast<std::uint64_t>(group.order()), budget, "modular tensions");

    std::vector<std::int64_t> elements(static_cast<std::size_t>(group.order()));
    for (std::size_t a = 0; a < elements.size(); ++a) elements[a] = static_cast<std::int64_t>(a);
    std::vector<std::vector<std::int64_t>> values(free_vertices.size(), elements);

    std::vector<std::int64_t> potential(g.vertex_count(), 0);
    EdgeVector f(g.edge_count());
    odometer(values, [&](const std::vector<std::int64_t>& assignment) {
        for (std::size_t k = 0; k < free_vertices.size(); ++k) potential[free_vertices[k]] = assignment[k];
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            if (e.is_loop()) {
                f[i] = 0;
                continue;
            }
            f[i] = direction(g, o, i) > 0 ? group.subtract(potential[e.tail], potential[e.head])
                                          : group.subtract(potential[e.head], potential[e.tail]);
        }
        visit(f);
    });
}

void for_each_modular_flow(const MultiGraph& g, const Orientation& o, const AbelianGroup& group,
                           const EdgeVectorVisitor& visit, std::uint64_t budget) {
    check_domain(g, o);
    Frame frame(g, o);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < frame.chords.size(); ++k)
        total = checked_product(total, static_cast<std::uint64_t>(group.order()), budget, "modular flows");

    std::vector<std::int64_t> elements(static_cast<std::size_t>(group.order()));
    for (std::size_t a = 0; a < elements.size(); ++a) elements[a] = static_cast<std::int64_t>(a);
    std::vector<std::vector<std::int64_t>> values(frame.chords.size(), elements);

    EdgeVector flow(g.edge_count());
    odometer(values, [&](const std::vector<std::int64_t>& assignment) {
        std::fill(flow.begin(), flow.end(), 0);
        for (std::size_t k = 0; k < frame.chords.size(); ++k) {
            const auto& chord = frame.chords[k];
            const auto value = assignment[k];
            flow[chord.position] = value;
            const auto negated = group.negate(value);
            for (auto [pos, sign] : chord.forest_terms) flow[pos] = group.add(flow[pos], sign > 0 ? value : negated);
        }
        visit(flow);
    });
}

std::vector<EdgeVector> enum_modular_tensions(const MultiGraph& g, const Orientation& o, const AbelianGroup& group,
                                              std::uint64_t budget) {
    std::vector<EdgeVector> out;
    for_each_modular_tension(g, o, group, [&](const EdgeVector& f) { out.push_back(f); }, budget);
    return out;
}

std::vector<EdgeVector> enum_modular_flows(const MultiGraph& g, const Orientation& o, const AbelianGroup& group,
                                           std::uint64_t budget) {
    std::vector<EdgeVector> out;
    for_each_modular_flow(g, o, group, [&](const EdgeVector& f) { out.push_back(f); }, budget);
    return out;
}

void for_each_integer_tension(const MultiGraph& g, const Orientation& o, const Box& box,
                              const EdgeVectorVisitor& visit, std::uint64_t budget) {
    check_domain(g, o);
    if (box.bounds.size() != g.edge_count()) throw std::invalid_argument("box dimension mismatch");
    Frame frame(g, o);
    std::vector<std::vector<std::int64_t>> values;
    std::uint64_t total = 1;
    for (auto pos : frame.forest) {
        values.push_back(admissible_values(box.bounds[pos], box.nowhere_zero));
        total = checked_product(total, values.back().size(), budget, "integer tensions");
    }
    EdgeVector f(g.edge_count(), 0);
    odometer(values, [&](const std::vector<std::int64_t>& assignment) {
        for (std::size_t k = 0; k < frame.forest.size(); ++k) f[frame.forest[k]] = assignment[k];
        for (const auto& chord : frame.chords) {
            std::int64_t sum = 0;
            for (auto [pos, sign] : chord.forest_terms) sum += sign * f[pos];
            f[chord.position] = -sum;
            if (!admits(box, chord.position, -sum)) return;
        }
        visit(f);
    });
}

void for_each_integer_flow(const MultiGraph& g, const Orientation& o, const Box& box, const EdgeVectorVisitor& visit,
                           std::uint64_t budget) {
    check_domain(g, o);
    if (box.bounds.size() != g.edge_count()) throw std::invalid_argument("box dimension mismatch");
    Frame frame(g, o);
    std::vector<std::vector<std::int64_t>> values;
    std::uint64_t total = 1;
    for (const auto& chord : frame.chords) {
        values.push_back(admissible_values(box.bounds[chord.position], box.nowhere_zero));
        total = checked_product(total, values.back().size(), budget, "integer flows");
    }
    EdgeVector flow(g.edge_count(), 0);
    odometer(values, [&](const std::vector<std::int64_t>& assignment) {
        for (auto pos : frame.forest) flow[pos] = 0;
        for (std::size_t k = 0; k < frame.chords.size(); ++k) {
            const auto& chord = frame.chords[k];
            flow[chord.position] = assignment[k];
            for (auto [pos, sign] : chord.forest_terms) flow[pos] += sign * assignment[k];
        }
        for (auto pos : frame.forest)
            if (!admits(box, pos, flow[pos])) return;
        visit(flow);
    });
}

std::vector<EdgeVector> enum_integer_tensions_box(const MultiGraph& g, const Orientation& o, const Box& box,
                                                  std::uint64_t budget) {
    std::vector<EdgeVector> out;
    for_each_integer_tension(g, o, box, [&](const EdgeVector& f) { out.push_back(f); }, budget);
    return out;
}

std::vector<EdgeVector> enum_integer_flows_box(const MultiGraph& g, const Orientation& o, const Box& box,
                                               std::uint64_t budget) {
    std::vector<EdgeVector> out;
    for_each_integer_flow(g, o, box, [&](const EdgeVector& f) { out.push_back(f); }, budget);
    return out;
}

// --- families ------------------------------------------------------------

namespace {

//                                   name              x      y      closed local  modular intcoef
constexpr std::array<FamilyTraits, 18> kTraits{{
    {"tau_mod",         true,  false, false, false, true,  true},
    {"phi_mod",         false, true,  false, false, true,  true},
    {"tau_int",         true,  false, false, false, false, false},
    {"phi_int",         false, true,  false, false, false, false},
    {"tau_local",       true,  false, false, true,  false, false},
    {"phi_local",       false, true,  false, true,  false, false},
    {"tau_bar_local",   true,  false, true,  true,  false, false},
    {"phi_bar_local",   false, true,  true,  true,  false, false},
    {"tau_bar_int",     true,  false, true,  false, false, false},
    {"phi_bar_int",     false, true,  true,  false, false, false},
    {"tau_bar_mod",     true,  false, true,  false, true,  true},
    {"phi_bar_mod",     false, true,  true,  false, true,  true},
    {"kappa_mod",       true,  true,  false, false, true,  true},
    {"kappa_int",       true,  true,  false, false, false, false},
    {"kappa_local",     true,  true,  false, true,  false, false},
    {"kappa_bar_local", true,  true,  true,  true,  false, false},
    {"kappa_bar_int",   true,  true,  true,  false, false, false},
    {"kappa_bar_mod",   true,  true,  true,  false, true,  true},
}};

AbelianGroup group_for(const std::optional<AbelianGroup>& requested, std::int64_t order, const char* which) {
    if (!requested) return AbelianGroup::cyclic(order);
    if (requested->order() != order)
        throw std::invalid_argument(std::string("group for ") + which + " has order " +
                                    std::to_string(requested->order()) + ", expected " + std::to_string(order));
    return *requested;
}

std::uint64_t tension_count(const MultiGraph& g, const Orientation& o, const Box& box, std::uint64_t budget) {
    return count_visits([&](const EdgeVectorVisitor& v) { for_each_integer_tension(g, o, box, v, budget); });
}

std::uint64_t flow_count(const MultiGraph& g, const Orientation& o, const Box& box, std::uint64_t budget) {
    return count_visits([&](const EdgeVectorVisitor& v) { for_each_integer_flow(g, o, box, v, budget); });
}

void validate(const CountQuery& q, const FamilyTraits& t) {
    const std::int64_t minimum = t.closed ? 0 : 1;
    if (t.uses_x && q.p < minimum)
        throw std::invalid_argument(std::string(t.name) + " requires p >= " + std::to_string(minimum));
    if (t.uses_y && q.q < minimum)
        throw std::invalid_argument(std::string(t.name) + " requires q >= " + std::to_string(minimum));
    if (t.local && !q.orientation) throw std::invalid_argument(std::string(t.name) + " requires an orientation");
}

} // namespace

const FamilyTraits& traits(Family f) { return kTraits.at(static_cast<std::size_t>(f)); }

std::optional<Family> parse_family(std::string_view name) {
    for (std::size_t i = 0; i < kTraits.size(); ++i)
        if (kTraits[i].name == name) return static_cast<Family>(i);
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> v;
        for (std::size_t i = 0; i < kTraits.size(); ++i) v.push_back(static_cast<Family>(i));
        return v;
    }();
    return families;
}

std::uint64_t count(const CountQuery& query, const MultiGraph& g) {
    const auto& t = traits(query.family);
    validate(query, t);
    const Orientation o = query.orientation.value_or(Orientation::reference(g));
    check_domain(g, o);
    const std::size_t m = g.edge_count();
    const auto budget = query.budget;
    const auto p = query.p;
    const auto q = query.q;

    auto sum_over = [&](const std::vector<Orientation>& rhos, Family local) {
        std::uint64_t total = 0;
        CountQuery sub = query;
        sub.family = local;
        for (const auto& rho : rhos) {
            sub.orientation = rho;
            total += count(sub, g);
        }
        return total;
    };
    auto representatives = [&](OrientationFilter filter) {
        return enumerate_classes(g, Relation::cut_eulerian, filter, query.orientation_limit, query.representatives)
            .representatives;
    };

    switch (query.family) {
    case Family::tau_mod: {
        const auto a = group_for(query.group_p, p, "p");
        std::uint64_t n = 0;
        for_each_modular_tension(g, o, a, [&](const EdgeVector& f) { n += zero_mask(f) == 0; }, budget);
        return n;
    }
    case Family::phi_mod: {
        const auto b = group_for(query.group_q, q, "q");
        std::uint64_t n = 0;
        for_each_modular_flow(g, o, b, [&](const EdgeVector& f) { n += zero_mask(f) == 0; }, budget);
        return n;
    }
    case Family::tau_int: return tension_count(g, o, Box::open_symmetric(m, p, true), budget);
    case Family::phi_int: return flow_count(g, o, Box::open_symmetric(m, q, true), budget);
    case Family::tau_local: return tension_count(g, o, Box::open_positive(m, p), budget);
    case Family::phi_local: return flow_count(g, o, Box::open_positive(m, q), budget);
    case Family::tau_bar_local: return tension_count(g, o, Box::closed_nonnegative(m, p), budget);
    case Family::phi_bar_local: return flow_count(g, o, Box::closed_nonnegative(m, q), budget);
    case Family::tau_bar_int:
        return sum_over(all_orientations(g, OrientationFilter::acyclic, query.orientation_limit), Family::tau_bar_local);
    case Family::phi_bar_int:
        return sum_over(all_orientations(g, OrientationFilter::totally_cyclic, query.orientation_limit),
                        Family::phi_bar_local);
    case Family::tau_bar_mod: return sum_over(representatives(OrientationFilter::acyclic), Family::tau_bar_local);
    case Family::phi_bar_mod:
        return sum_over(representatives(OrientationFilter::totally_cyclic), Family::phi_bar_local);
    case Family::kappa_mod: {
        const auto a = group_for(query.group_p, p, "p");
        const auto b = group_for(query.group_q, q, "q");
        MaskTally tensions(m), flows(m);
        for_each_modular_tension(g, o, a, [&](const EdgeVector& f) { tensions.add(zero_mask(f)); }, budget);
        for_each_modular_flow(g, o, b, [&](const EdgeVector& f) { flows.add(zero_mask(f)); }, budget);
        return complementary_pairs(tensions, flows, m);
    }
    case Family::kappa_int: {
        MaskTally tensions(m), flows(m);
        for_each_integer_tension(g, o, Box::open_symmetric(m, p, false),
                                 [&](const EdgeVector& f) { tensions.add(zero_mask(f)); }, budget);
        for_each_integer_flow(g, o, Box::open_symmetric(m, q, false),
                              [&](const EdgeVector& f) { flows.add(zero_mask(f)); }, budget);
        return complementary_pairs(tensions, flows, m);
    }
    case Family::kappa_local: {
        // Lattice points of the open local polytope: nonnegative complementary
        // pairs with f < p, g < q.
        MaskTally tensions(m), flows(m);
        for_each_integer_tension(g, o, Box::uniform(m, {0, p, false, true}),
                                 [&](const EdgeVector& f) { tensions.add(zero_mask(f)); }, budget);
        for_each_integer_flow(g, o, Box::uniform(m, {0, q, false, true}),
                              [&](const EdgeVector& f) { flows.add(zero_mask(f)); }, budget);
        const auto direct = complementary_pairs(tensions, flows, m);

        const auto circuit_part = minty_partition(g, o).circuit_part;
        const auto quotient = contract(g, circuit_part);
        const auto strong = restrict(g, circuit_part);
        CountQuery sub = query;
        sub.family = Family::tau_local;
        sub.orientation = o.induced_on(quotient);
        const auto tension_factor = count(sub, quotient);
        sub.family = Family::phi_local;
        sub.orientation = o.induced_on(strong);
        const auto flow_factor = count(sub, strong);
        if (direct != tension_factor * flow_factor)
            throw InternalCheckFailure("kappa_local product decomposition mismatch on orientation " + o.to_string() +
                                       " at (" + std::to_string(p) + "," + std::to_string(q) + "): direct " +
                                       std::to_string(direct) + " vs " + std::to_string(tension_factor) + "*" +
                                       std::to_string(flow_factor));
        return direct;
    }
    case Family::kappa_bar_local:
        return tension_count(g, o, Box::closed_nonnegative(m, p), budget) *
               flow_count(g, o, Box::closed_nonnegative(m, q), budget);
    case Family::kappa_bar_int:
        return sum_over(all_orientations(g, OrientationFilter::all, query.orientation_limit), Family::kappa_bar_local);
    case Family::kappa_bar_mod: return sum_over(representatives(OrientationFilter::all), Family::kappa_bar_local);
    }
    throw std::invalid_argument("unknown family");
}

bool is_complementary(const TensionFlowPair& pair) {
    if (pair.f.size() != pair.g.size()) throw std::invalid_argument("tension and flow sizes differ");
    for (std::size_t i = 0; i < pair.f.size(); ++i)
        if ((pair.f[i] == 0) == (pair.g[i] == 0)) return false;
    return true;
}

TensionFlowPair mod_map(const MultiGraph& g, const Orientation& o, const TensionFlowPair& pair, std::int64_t p,
                        std::int64_t q) {
    check_domain(g, o);
    if (p < 1 || q < 1) throw std::invalid_argument("mod_map requires p, q >= 1");
    if (pair.f.size() != g.edge_count() || pair.g.size() != g.edge_count())
        throw std::invalid_argument("mod_map: dimension mismatch");
    TensionFlowPair out{pair.f, pair.g};
    for (auto& v : out.f) v = ((v % p) + p) % p;
    for (auto& v : out.g) v = ((v % q) + q) % q;
    return out;
}

EdgeVector reorient_p(const MultiGraph& g, const Orientation& r, const Orientation& s, const EdgeVector& v) {
    auto c = coupling(g, r, s);
    if (v.size() != c.size()) throw std::invalid_argument("reorient_p: dimension mismatch");
    EdgeVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c[i] * v[i];
    return out;
}

EdgeVector reorient_q(const MultiGraph& g, const Orientation& r, const Orientation& s, EdgeSet subset,
                      std::int64_t bound, const EdgeVector& v) {
    auto c = coupling(g, r, s);
    if (v.size() != c.size()) throw std::invalid_argument("reorient_q: dimension mismatch");
    EdgeVector out(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] > bound) throw std::invalid_argument("reorient_q: value outside [0, bound]");
        if (c[i] < 0 && subset.contains(g.edge(i).id)) out[i] = bound - v[i];
    }
    return out;
}

} // namespace ctf
