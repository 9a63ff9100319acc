#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctf/edge_set.hpp"

namespace ctf {

/// One edge of a multigraph. The pair order (tail, head) is the reference
/// orientation; tail == head is a loop.
struct Edge {
    Vertex tail = 0;
    Vertex head = 0;
    EdgeId id = 0;

    bool is_loop() const { return tail == head; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge-indexed integer values, indexed by edge position in MultiGraph::edges().
using EdgeVector = std::vector<std::int64_t>;

struct GraphStats {
    std::size_t components = 0;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// Entry of a fundamental circuit: edge position plus +1/-1 depending on
/// whether traversal agrees with the reference orientation.
struct SignedEdge {
    std::size_t index = 0;
    int sign = 1;
};

struct FundamentalCircuit {
    std::size_t chord = 0; ///< position of the unique non-forest edge
    std::vector<SignedEdge> edges;
};

/// Spanning forest (first acyclic edge in position order wins) and the
/// fundamental circuit of every non-forest edge.
struct ForestData {
    EdgeSet forest_edges;
    std::vector<std::size_t> forest_positions;
    std::vector<FundamentalCircuit> fundamental_circuits;
};

/// Vertices 0..n-1 plus an ordered multiset of edges. Edge ids are labels
/// that survive restriction, deletion and contraction; positions are local.
class MultiGraph {
public:
    MultiGraph() = default;

    /// Builds a graph whose edge ids equal their positions.
    MultiGraph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_pairs);
    MultiGraph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edge_pairs)
        : MultiGraph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edge_pairs.begin(), edge_pairs.size())) {}

    /// Builds a graph from explicitly labelled edges (ids must be distinct and < 64).
    static MultiGraph from_edges(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t position) const { return edges_.at(position); }

    /// Set of all edge ids carried by this graph.
    EdgeSet edge_ids() const { return ids_; }
    EdgeSet loop_ids() const;
    std::optional<std::size_t> position_of(EdgeId id) const;

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    EdgeSet ids_;
};

GraphStats stats(const MultiGraph& g);

/// G|X: same vertices, only the edges whose ids are in X.
MultiGraph restrict(const MultiGraph& g, EdgeSet x);

/// G/X: merges the endpoints of every edge in X (smallest vertex of each
/// merged class is its representative, classes renumbered in increasing order).
MultiGraph contract(const MultiGraph& g, EdgeSet x);

/// G-e.
MultiGraph delete_edge(const MultiGraph& g, EdgeId e);

ForestData spanning_structure(const MultiGraph& g);

/// Component label per vertex (labels 0..c-1 in order of first vertex).
std::vector<std::size_t> component_labels(const MultiGraph& g);

/// Whether removing edge `e` disconnects its endpoints.
bool is_bridge(const MultiGraph& g, EdgeId e);

/// Isomorphism-invariant canonical form (edge labels and directions ignored).
/// Only computed for graphs with at most kCanonicalVertexLimit vertices.
inline constexpr std::size_t kCanonicalVertexLimit = 7;
std::optional<std::string> canonical_key(const MultiGraph& g);

} // namespace ctf
