#include "ctf/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace ctf {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    // Keeps the smaller index as representative.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

MultiGraph::MultiGraph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_pairs) {
    std::vector<Edge> edges;
    edges.reserve(edge_pairs.size());
    for (std::size_t i = 0; i < edge_pairs.size(); ++i) edges.push_back({edge_pairs[i].first, edge_pairs[i].second, i});
    *this = from_edges(vertex_count, std::move(edges));
}

MultiGraph MultiGraph::from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
    if (edges.size() > kMaxEdges) throw std::invalid_argument("at most 64 edges are supported");
    MultiGraph g;
    g.vertex_count_ = vertex_count;
    for (const auto& e : edges) {
        if (e.tail >= vertex_count || e.head >= vertex_count)
            throw std::invalid_argument("edge " + std::to_string(e.id) + " has an endpoint out of range");
        if (g.ids_.contains(e.id)) throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
        g.ids_.insert(e.id);
    }
    g.edges_ = std::move(edges);
    return g;
}

EdgeSet MultiGraph::loop_ids() const {
    EdgeSet s;
    for (const auto& e : edges_)
        if (e.is_loop()) s.insert(e.id);
    return s;
}

std::optional<std::size_t> MultiGraph::position_of(EdgeId id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id == id) return i;
    return std::nullopt;
}

std::vector<std::size_t> component_labels(const MultiGraph& g) {
    UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges()) uf.unite(e.tail, e.head);
    std::vector<std::size_t> label(g.vertex_count());
    std::vector<std::size_t> root_label(g.vertex_count(), SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto r = uf.find(v);
        if (root_label[r] == SIZE_MAX) root_label[r] = next++;
        label[v] = root_label[r];
    }
    return label;
}

GraphStats stats(const MultiGraph& g) {
    UnionFind uf(g.vertex_count());
    std::size_t merges = 0;
    for (const auto& e : g.edges())
        if (uf.unite(e.tail, e.head)) ++merges;
    GraphStats s;
    s.components = g.vertex_count() - merges;
    s.rank = merges;
    s.nullity = g.edge_count() - merges;
    return s;
}

MultiGraph restrict(const MultiGraph& g, EdgeSet x) {
    if (!x.is_subset_of(g.edge_ids())) throw std::invalid_argument("restrict: unknown edge id");
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
        if (x.contains(e.id)) kept.push_back(e);
    return MultiGraph::from_edges(g.vertex_count(), std::move(kept));
}

MultiGraph contract(const MultiGraph& g, EdgeSet x) {
    if (!x.is_subset_of(g.edge_ids())) throw std::invalid_argument("contract: unknown edge id");
    UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges())
        if (x.contains(e.id)) uf.unite(e.tail, e.head);
    std::vector<std::size_t> renumber(g.vertex_count(), SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (uf.find(v) == v) renumber[v] = next++;
    std::vector<Edge> kept;
    for (const auto& e : g.edges()) {
        if (x.contains(e.id)) continue;
        kept.push_back({renumber[uf.find(e.tail)], renumber[uf.find(e.head)], e.id});
    }
    return MultiGraph::from_edges(next, std::move(kept));
}

MultiGraph delete_edge(const MultiGraph& g, EdgeId e) {
    if (!g.edge_ids().contains(e)) throw std::invalid_argument("delete: unknown edge id");
    return restrict(g, g.edge_ids() - EdgeSet::of({e}));
}

bool is_bridge(const MultiGraph& g, EdgeId id) {
    auto pos = g.position_of(id);
    if (!pos) throw std::invalid_argument("is_bridge: unknown edge id");
    const Edge& target = g.edge(*pos);
    if (target.is_loop()) return false;
    UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges())
        if (e.id != id) uf.unite(e.tail, e.head);
    return uf.find(target.tail) != uf.find(target.head);
}

ForestData spanning_structure(const MultiGraph& g) {
    ForestData data;
    const std::size_t n = g.vertex_count();
    UnionFind uf(n);
    // Forest adjacency: (neighbour, edge position).
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(n);
    std::vector<std::size_t> chords;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (uf.unite(e.tail, e.head)) {
            data.forest_edges.insert(e.id);
            data.forest_positions.push_back(i);
            adj[e.tail].push_back({e.head, i});
            adj[e.head].push_back({e.tail, i});
        } else {
            chords.push_back(i);
        }
    }

    for (std::size_t c : chords) {
        const Edge& chord = g.edge(c);
        FundamentalCircuit circuit;
        circuit.chord = c;
        circuit.edges.push_back({c, 1});
        if (!chord.is_loop()) {
            // Traverse chord tail -> head, then walk the forest from head back to tail.
            std::vector<std::pair<Vertex, std::size_t>> via(n, {SIZE_MAX, SIZE_MAX});
            std::vector<bool> seen(n, false);
            std::queue<Vertex> frontier;
            frontier.push(chord.head);
            seen[chord.head] = true;
            while (!frontier.empty()) {
                Vertex v = frontier.front();
                frontier.pop();
                if (v == chord.tail) break;
                for (auto [w, pos] : adj[v]) {
                    if (seen[w]) continue;
                    seen[w] = true;
                    via[w] = {v, pos};
                    frontier.push(w);
                }
            }
            // via[] links point back towards chord.head; walking from tail gives the
            // reversed path, so the traversal direction on each edge is w -> prev.
            std::vector<SignedEdge> path;
            for (Vertex w = chord.tail; w != chord.head;) {
                auto [prev, pos] = via[w];
                const Edge& e = g.edge(pos);
                // Walk is head ... prev -> w ... tail; the edge is traversed prev -> w.
                path.push_back({pos, (e.tail == prev && e.head == w) ? 1 : -1});
                w = prev;
            }
            circuit.edges.insert(circuit.edges.end(), path.rbegin(), path.rend());
        }
        data.fundamental_circuits.push_back(std::move(circuit));
    }
    return data;
}

std::optional<std::string> canonical_key(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kCanonicalVertexLimit) return std::nullopt;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::pair<std::size_t, std::size_t>> best;
    std::vector<std::pair<std::size_t, std::size_t>> current(g.edge_count());
    bool first = true;
    do {
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            auto a = perm[g.edge(i).tail];
            auto b = perm[g.edge(i).head];
            current[i] = {std::min(a, b), std::max(a, b)};
        }
        std::sort(current.begin(), current.end());
        if (first || current < best) {
            best = current;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::string key = std::to_string(n) + ":";
    for (auto [a, b] : best) key += std::to_string(a) + "-" + std::to_string(b) + ",";
    return key;
}

} // namespace ctf
