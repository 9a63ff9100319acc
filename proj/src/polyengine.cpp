#include "ctf/polyengine.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace ctf {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
}

// Relabels vertices in order of first appearance and drops isolated ones;
// the sorted endpoint list is an exact key for the Tutte memo.
std::string tutte_key(const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::unordered_map<std::size_t, std::size_t> relabel;
    std::vector<std::pair<std::size_t, std::size_t>> mapped;
    for (auto [a, b] : edges) {
        auto ra = relabel.try_emplace(a, relabel.size()).first->second;
        auto rb = relabel.try_emplace(b, relabel.size()).first->second;
        mapped.emplace_back(std::min(ra, rb), std::max(ra, rb));
    }
    std::sort(mapped.begin(), mapped.end());
    std::string key;
    for (auto [a, b] : mapped) key += std::to_string(a) + "-" + std::to_string(b) + ",";
    return key;
}

bool connects_without(const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t skip,
                      std::size_t vertices) {
    std::vector<std::size_t> parent(vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (i != skip) parent[find_root(parent, edges[i].first)] = find_root(parent, edges[i].second);
    return find_root(parent, edges[skip].first) == find_root(parent, edges[skip].second);
}

BivariatePolynomial tutte_rec(std::vector<std::pair<std::size_t, std::size_t>> edges, std::size_t vertices,
                              std::unordered_map<std::string, BivariatePolynomial>& memo) {
    if (edges.empty()) return BivariatePolynomial(1);
    unsigned loops = 0;
    std::erase_if(edges, [&](const auto& e) {
        if (e.first != e.second) return false;
        ++loops;
        return true;
    });
    const auto loop_factor = BivariatePolynomial::y().pow(loops);
    if (edges.empty()) return loop_factor;

    auto key = tutte_key(edges);
    if (auto it = memo.find(key); it != memo.end()) return loop_factor * it->second;

    const std::size_t last = edges.size() - 1;
    const auto [a, b] = edges[last];
    auto contracted = edges;
    contracted.pop_back();
    for (auto& [u, v] : contracted) {
        if (u == b) u = a;
        if (v == b) v = a;
    }
    BivariatePolynomial result;
    if (!connects_without(edges, last, vertices)) {
        result = BivariatePolynomial::x() * tutte_rec(std::move(contracted), vertices, memo);
    } else {
        auto deleted = edges;
        deleted.pop_back();
        result = tutte_rec(std::move(deleted), vertices, memo) + tutte_rec(std::move(contracted), vertices, memo);
    }
    memo.emplace(std::move(key), result);
    return loop_factor * result;
}

void check_local(Family family, bool want_local) {
    if (traits(family).local != want_local)
        throw std::invalid_argument(std::string("family ") + std::string(traits(family).name) +
                                    (want_local ? " is not a local family" : " is a local family"));
}

BivariatePolynomial interpolate_family(const MultiGraph& g, Family family,
                                       const std::function<std::uint64_t(std::int64_t, std::int64_t)>& value) {
    const auto grid = sample_grid(g, family);
    std::vector<std::vector<Integer>> values(grid.xs.size(), std::vector<Integer>(grid.ys.size()));
    for (std::size_t a = 0; a < grid.xs.size(); ++a)
        for (std::size_t b = 0; b < grid.ys.size(); ++b) values[a][b] = value(grid.xs[a], grid.ys[b]);
    auto poly = interpolate(grid.xs, grid.ys, values);
    const auto name = std::string(traits(family).name);
    for (auto [p, q] : grid.held_out) {
        const Integer expected = value(p, q);
        const Rational got = poly.evaluate(p, q);
        if (got != Rational(expected))
            throw InterpolationError(name + ": held-out point (" + std::to_string(p) + "," + std::to_string(q) +
                                     ") counts " + expected.str() + " but the interpolant gives " + to_string(got));
    }
    if (traits(family).integer_coefficients && !poly.has_integer_coefficients())
        throw InterpolationError(name + ": non-integer coefficient in " + poly.to_text());
    return poly;
}

} // namespace

BivariatePolynomial rank_generating(const MultiGraph& g, std::size_t limit) {
    const std::size_t m = g.edge_count();
    if (m > limit)
        throw EnumerationLimitExceeded("rank generating polynomial: " + std::to_string(m) + " edges exceeds limit " +
                                       std::to_string(limit));
    const std::size_t total_rank = stats(g).rank;
    std::vector<std::vector<std::uint64_t>> tally(total_rank + 1, std::vector<std::uint64_t>(m + 1, 0));
    std::vector<std::size_t> parent(g.vertex_count());
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        std::size_t rank = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!((subset >> i) & 1U)) continue;
            auto a = find_root(parent, g.edge(i).tail);
            auto b = find_root(parent, g.edge(i).head);
            if (a != b) {
                parent[b] = a;
                ++rank;
            }
        }
        const std::size_t size = static_cast<std::size_t>(std::popcount(subset));
        ++tally[total_rank - rank][size - rank];
    }
    BivariatePolynomial r;
    for (unsigned i = 0; i < tally.size(); ++i)
        for (unsigned j = 0; j < tally[i].size(); ++j)
            if (tally[i][j]) r += BivariatePolynomial::monomial(i, j, Rational(tally[i][j]));
    return r;
}

BivariatePolynomial tutte(const MultiGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.tail, e.head);
    std::unordered_map<std::string, BivariatePolynomial> memo;
    return tutte_rec(std::move(edges), g.vertex_count(), memo);
}

SampleGrid sample_grid(const MultiGraph& g, Family family) {
    const auto& t = traits(family);
    const auto s = stats(g);
    const std::int64_t start = t.closed ? 0 : 1;
    auto axis = [&](bool used, std::size_t degree) {
        std::vector<std::int64_t> v(used ? degree + 1 : 1);
        std::iota(v.begin(), v.end(), start);
        return v;
    };
    SampleGrid grid{axis(t.uses_x, s.rank), axis(t.uses_y, s.nullity), {}};
    grid.held_out = {{grid.xs.back() + 1, grid.ys.back() + 1}, {grid.xs.front(), grid.ys.back() + 2}};
    return grid;
}

BivariatePolynomial counting_polynomial(const MultiGraph& g, Family family, const PolynomialOptions& options) {
    check_local(family, false);
    CountQuery base;
    base.family = family;
    base.orientation = options.reference;
    base.budget = options.budget;
    base.orientation_limit = options.orientation_limit;
    base.representatives = options.representatives;

    // Families summed over orientations: fix the orientation set once.
    std::optional<Family> local;
    std::vector<Orientation> rhos;
    auto reps = [&](OrientationFilter f) {
        return enumerate_classes(g, Relation::cut_eulerian, f, options.orientation_limit, options.representatives)
            .representatives;
    };
    switch (family) {
    case Family::tau_bar_int:
        local = Family::tau_bar_local;
        rhos = all_orientations(g, OrientationFilter::acyclic, options.orientation_limit);
        break;
    case Family::phi_bar_int:
        local = Family::phi_bar_local;
        rhos = all_orientations(g, OrientationFilter::totally_cyclic, options.orientation_limit);
        break;
    case Family::kappa_bar_int:
        local = Family::kappa_bar_local;
        rhos = all_orientations(g, OrientationFilter::all, options.orientation_limit);
        break;
    case Family::tau_bar_mod:
        local = Family::tau_bar_local;
        rhos = reps(OrientationFilter::acyclic);
        break;
    case Family::phi_bar_mod:
        local = Family::phi_bar_local;
        rhos = reps(OrientationFilter::totally_cyclic);
        break;
    case Family::kappa_bar_mod:
        local = Family::kappa_bar_local;
        rhos = reps(OrientationFilter::all);
        break;
    default: break;
    }

    return interpolate_family(g, family, [&](std::int64_t p, std::int64_t q) -> std::uint64_t {
        CountQuery query = base;
        query.p = p;
        query.q = q;
        if (!local) return count(query, g);
        query.family = *local;
        std::uint64_t total = 0;
        for (const auto& rho : rhos) {
            query.orientation = rho;
            total += count(query, g);
        }
        return total;
    });
}

BivariatePolynomial local_polynomial(const MultiGraph& g, Family family, const Orientation& rho,
                                     const PolynomialOptions& options) {
    check_local(family, true);
    CountQuery base;
    base.family = family;
    base.orientation = rho;
    base.budget = options.budget;
    base.orientation_limit = options.orientation_limit;
    return interpolate_family(g, family, [&](std::int64_t p, std::int64_t q) {
        CountQuery query = base;
        query.p = p;
        query.q = q;
        return count(query, g);
    });
}

const std::vector<Family>& report_families() {
    static const std::vector<Family> families{
        Family::kappa_mod,   Family::kappa_int,   Family::kappa_bar_mod, Family::kappa_bar_int,
        Family::tau_mod,     Family::tau_int,     Family::phi_mod,       Family::phi_int,
        Family::tau_bar_mod, Family::tau_bar_int, Family::phi_bar_mod,   Family::phi_bar_int,
    };
    return families;
}

PolynomialReport polynomial_report(const MultiGraph& g, const PolynomialOptions& options) {
    PolynomialReport report;
    report.tutte = tutte(g);
    report.rank_generating = rank_generating(g);
    for (auto f : report_families()) report.families.emplace(f, counting_polynomial(g, f, options));
    return report;
}

nlohmann::json to_json(const PolynomialReport& report) {
    nlohmann::json j;
    j["tutte"] = to_json(report.tutte);
    j["rank_generating"] = to_json(report.rank_generating);
    for (auto f : report_families()) j[std::string(traits(f).name)] = to_json(report.families.at(f));
    return j;
}

std::string to_text(const PolynomialReport& report) {
    std::string out = "T = " + report.tutte.to_text() + "\n";
    out += "R = " + report.rank_generating.to_text() + "\n";
    for (auto f : report_families())
        out += std::string(traits(f).name) + " = " + report.families.at(f).to_text() + "\n";
    return out;
}

} // namespace ctf
