#include <doctest.h>

#include <algorithm>

#include "ctf/graph.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace ctf;

TEST_CASE("edge sets") {
    auto s = EdgeSet::of({0, 3, 5});
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(4));
    CHECK(s.ids() == std::vector<EdgeId>{0, 3, 5});
    CHECK((s - EdgeSet::of({3})) == EdgeSet::of({0, 5}));
    CHECK(EdgeSet::first_n(64).size() == 64);
    CHECK_THROWS_AS(s.insert(64), std::out_of_range);
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph::from_edges(2, {{0, 1, 4}, {1, 0, 4}}), std::invalid_argument);
    std::vector<std::pair<Vertex, Vertex>> many(65, {0, 0});
    CHECK_THROWS_AS(MultiGraph(1, many), std::invalid_argument);
}

TEST_CASE("stats agree with the union-find oracle") {
    for (const auto& g : {fixtures::k1(), fixtures::k2(), fixtures::l1(), fixtures::digon_loop(), fixtures::c4(),
                          fixtures::k4(), fixtures::p8(), fixtures::split()}) {
        const auto s = stats(g);
        const auto c = oracle::components(g, (std::uint64_t{1} << g.edge_count()) - 1);
        CHECK(s.components == c);
        CHECK(s.rank == g.vertex_count() - c);
        CHECK(s.nullity == g.edge_count() - s.rank);
    }
    CHECK(stats(fixtures::p8()) == GraphStats{1, 2, 3});
    CHECK(stats(fixtures::split()) == GraphStats{2, 3, 3});
}

TEST_CASE("minors keep edge ids") {
    const auto g = fixtures::p8();
    const auto r = restrict(g, EdgeSet::of({1, 3}));
    CHECK(r.vertex_count() == 3);
    CHECK(r.edge_ids() == EdgeSet::of({1, 3}));
    CHECK(stats(r) == GraphStats{2, 1, 1});

    const auto c = contract(g, EdgeSet::of({1}));
    CHECK(c.vertex_count() == 2);
    CHECK(c.edge_ids() == EdgeSet::of({0, 2, 3, 4}));
    CHECK(c.loop_ids() == EdgeSet::of({3}));
    CHECK(stats(c) == GraphStats{1, 1, 3});

    const auto d = delete_edge(g, 0);
    CHECK(d.edge_count() == 4);
    CHECK_FALSE(d.position_of(0).has_value());
    CHECK(d.position_of(4) == 3);

    CHECK_THROWS_AS(restrict(g, EdgeSet::of({9})), std::invalid_argument);
    CHECK_THROWS_AS(contract(g, EdgeSet::of({9})), std::invalid_argument);
    CHECK_THROWS_AS(delete_edge(g, 9), std::invalid_argument);
}

TEST_CASE("contracting everything leaves one vertex per component") {
    const auto g = fixtures::split();
    const auto c = contract(g, g.edge_ids());
    CHECK(c.vertex_count() == 2);
    CHECK(c.edge_count() == 0);
}

TEST_CASE("bridges") {
    CHECK(is_bridge(fixtures::k2(), 0));
    CHECK(is_bridge(fixtures::path3(), 1));
    CHECK_FALSE(is_bridge(fixtures::c3(), 0));
    CHECK_FALSE(is_bridge(fixtures::l1(), 0));
    CHECK_FALSE(is_bridge(fixtures::digon(), 0));
}

TEST_CASE("fundamental circuits are circuits") {
    for (const auto& g : {fixtures::p8(), fixtures::k4(), fixtures::split(), fixtures::digon_loop()}) {
        const auto f = spanning_structure(g);
        CHECK(f.forest_positions.size() == stats(g).rank);
        CHECK(f.fundamental_circuits.size() == stats(g).nullity);
        const auto arcs = oracle::arcs(g);
        for (const auto& c : f.fundamental_circuits) {
            oracle::Values v(g.edge_count(), 0);
            for (const auto& se : c.edges) v[se.index] = se.sign;
            CHECK(oracle::is_flow(arcs, g.vertex_count(), v));
            CHECK(v[c.chord] != 0);
            CHECK_FALSE(f.forest_edges.contains(g.edge(c.chord).id));
        }
    }
}

TEST_CASE("component labels") {
    const auto labels = component_labels(fixtures::split());
    CHECK(labels == std::vector<std::size_t>{0, 0, 1, 1, 1});
}

TEST_CASE("canonical keys identify isomorphic graphs") {
    const auto a = MultiGraph(3, {{0, 1}, {1, 2}, {1, 2}});
    const auto b = MultiGraph(3, {{2, 0}, {0, 1}, {2, 0}});
    const auto c = MultiGraph(3, {{0, 1}, {0, 1}, {0, 2}});
    const auto d = MultiGraph(3, {{0, 1}, {0, 1}, {1, 1}});
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(canonical_key(a) == canonical_key(c));
    CHECK(canonical_key(a) != canonical_key(d));
    CHECK(canonical_key(fixtures::c3()) != canonical_key(MultiGraph(4, {{0, 1}, {1, 2}, {2, 0}})));
    CHECK_FALSE(canonical_key(MultiGraph(8, {})).has_value());
}
