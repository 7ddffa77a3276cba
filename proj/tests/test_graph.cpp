#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "slec/catalog.hpp"
#include "slec/graph.hpp"

using namespace slec;

namespace {

Graph path(std::size_t edges)
{
    std::vector<std::pair<Vertex, Vertex>> el;
    for (Vertex i = 0; i < edges; ++i)
        el.emplace_back(i, i + 1);
    return build_graph(edges + 1, el);
}

Graph complete(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> el;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            el.emplace_back(i, j);
    return build_graph(n, el);
}

// Line-graph BFS written out from scratch: edges e, f adjacent when they share an endpoint.
std::vector<std::size_t> naive_line_distances(const Graph& g, EdgeId src)
{
    const std::size_t m = g.edge_count();
    std::vector<std::size_t> dist(m, SIZE_MAX);
    std::deque<EdgeId> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        EdgeId e = queue.front();
        queue.pop_front();
        for (EdgeId f = 0; f < m; ++f) {
            const Edge &a = g.edge(e), &b = g.edge(f);
            bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (f != e && share && dist[f] == SIZE_MAX) {
                dist[f] = dist[e] + 1;
                queue.push_back(f);
            }
        }
    }
    return dist;
}

Graph random_graph(std::mt19937& rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> el;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (coin(rng))
                el.emplace_back(i, j);
    return build_graph(n, el);
}

}  // namespace

TEST_CASE("build_graph basics and rejections")
{
    CHECK(build_graph(1, {}).edge_count() == 0);
    Graph g = build_graph(2, {{0, 1}});
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edge(0) == Edge{0, 1});

    auto kind_of = [](std::size_t n, std::vector<std::pair<Vertex, Vertex>> el) {
        try {
            (void)build_graph(n, el);
        } catch (const GraphError& e) {
            return e.kind();
        }
        FAIL("no error");
        return GraphError::Kind::disconnected;
    };
    CHECK(kind_of(4, {{0, 1}, {0, 1}}) == GraphError::Kind::duplicate_edge);
    CHECK(kind_of(4, {{0, 1}, {1, 0}}) == GraphError::Kind::duplicate_edge);
    CHECK(kind_of(4, {{2, 2}}) == GraphError::Kind::self_loop);
    CHECK(kind_of(4, {{0, 4}}) == GraphError::Kind::vertex_out_of_range);
    CHECK_THROWS_AS((void)g.edge(1), GraphError);
}

TEST_CASE("edge distance on Petersen")
{
    const LabeledGraph p = named_graph("petersen");
    const Graph& g = p.graph;
    CHECK(edge_distance(g, 0, 0) == 0u);
    CHECK(edge_distance(g, 0, 1) == 1u);
    // two spokes u1v1 and u2v2 are joined through the outer edge v1v2
    CHECK(edge_distance(g, p.edge_between("u1", "v1"), p.edge_between("u2", "v2")) == 2u);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto fast = edge_distances_from(g, e);
        auto slow = naive_line_distances(g, e);
        for (EdgeId f = 0; f < g.edge_count(); ++f)
            CHECK(fast[f] == slow[f]);
    }
}

TEST_CASE("edge distance agrees with a naive line-graph BFS on random graphs")
{
    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, 9, 0.3);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto fast = edge_distances_from(g, e);
            auto slow = naive_line_distances(g, e);
            for (EdgeId f = 0; f < g.edge_count(); ++f) {
                if (slow[f] == SIZE_MAX)
                    CHECK_FALSE(fast[f].has_value());
                else
                    CHECK(fast[f] == slow[f]);
            }
        }
    }
}

TEST_CASE("strong conflict graph")
{
    ConflictGraph two = strong_conflict_graph(path(2));
    CHECK(two.node_count() == 2);
    CHECK(two.pair_count() == 1);
    CHECK(strong_conflict_graph(path(3)).pair_count() == 3);
    CHECK(strong_conflict_graph(path(4)).pair_count() == 5);

    const LabeledGraph p = named_graph("petersen");
    ConflictGraph cg = strong_conflict_graph(p.graph);
    CHECK(cg.node_count() == 15);
    for (EdgeId e = 0; e < 15; ++e)
        CHECK(cg.degree(e) == 12);
    REQUIRE(cg.parts.has_value());
    CHECK(cg.parts->size() == 5);

    auto matchings = maximum_induced_matchings(p.graph);
    std::set<std::vector<EdgeId>> as_parts(cg.parts->begin(), cg.parts->end());
    for (auto part : *cg.parts)
        CHECK(std::find(matchings.begin(), matchings.end(), part) != matchings.end());
    CHECK(as_parts.size() == 5);

    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(rng, 8, 0.35);
        ConflictGraph r = strong_conflict_graph(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto d = naive_line_distances(g, e);
            for (EdgeId f = 0; f < g.edge_count(); ++f)
                CHECK(r.adjacent(e, f) == (d[f] == 1 || d[f] == 2));
        }
    }
}

TEST_CASE("adjacency conflict graph and multipartite detection")
{
    ConflictGraph a = adjacency_conflict_graph(complete(4));
    CHECK(a.pair_count() == 12);
    auto parts = detect_multipartite(a);
    REQUIRE(parts.has_value());  // line graph of K4 is the octahedron K_{2,2,2}
    CHECK(parts->size() == 3);
    CHECK(detect_multipartite(adjacency_conflict_graph(path(3))).has_value());  // K_{1,2}
    CHECK_FALSE(detect_multipartite(adjacency_conflict_graph(path(4))).has_value());
}

TEST_CASE("induced conflict graph")
{
    ConflictGraph cg = strong_conflict_graph(named_graph("petersen").graph);
    ConflictGraph sub = induced_conflict_graph(cg, {0, 1, 7});
    CHECK(sub.node_count() == 3);
    CHECK(sub.adjacent(0, 1) == cg.adjacent(0, 1));
    CHECK(sub.adjacent(1, 2) == cg.adjacent(1, 7));
}

TEST_CASE("max clique")
{
    CHECK(max_clique_size(strong_conflict_graph(complete(4))) == 6);
    CHECK(max_clique_size(strong_conflict_graph(named_graph("petersen").graph)) == 5);
    std::vector<std::pair<Vertex, Vertex>> c5;
    for (Vertex i = 0; i < 5; ++i)
        c5.emplace_back(i, (i + 1) % 5);
    CHECK(max_clique_size(strong_conflict_graph(build_graph(5, c5))) == 5);
}

TEST_CASE("girth, connectivity, bipartiteness, bridges")
{
    CHECK_FALSE(girth(path(3)).has_value());
    CHECK(girth(complete(4)) == 3u);
    CHECK(girth(named_graph("petersen").graph) == 5u);
    CHECK(girth(named_graph("dodecahedron").graph) == 5u);
    CHECK(girth(named_graph("gp10_3").graph) == 6u);

    CHECK(is_connected(named_graph("petersen").graph));
    CHECK_FALSE(is_connected(build_graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_bipartite(named_graph("gp10_3").graph));
    CHECK_FALSE(is_bipartite(named_graph("petersen").graph));
    CHECK(has_bridge(path(2)));
    CHECK_FALSE(has_bridge(complete(4)));
    CHECK(has_bridge(named_graph("h_i_host").graph));
    CHECK_FALSE(has_bridge(named_graph("nor8").graph));
}

TEST_CASE("maximum induced matchings")
{
    auto single = maximum_induced_matchings(path(1));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::vector<EdgeId>{0});

    const LabeledGraph p = named_graph("petersen");
    auto ms = maximum_induced_matchings(p.graph);
    REQUIRE(!ms.empty());
    for (const auto& m : ms) {
        CHECK(m.size() == 3);
        CHECK(is_induced_matching(p.graph, m));
        std::multiset<EdgeRole> roles;
        for (EdgeId e : m)
            roles.insert(p.roles[e]);
        CHECK(roles == std::multiset<EdgeRole>{EdgeRole::outer, EdgeRole::spoke, EdgeRole::inner});
    }
    // they partition E(P): five of them, pairwise disjoint
    CHECK(ms.size() == 5);
    std::set<EdgeId> seen;
    for (const auto& m : ms)
        seen.insert(m.begin(), m.end());
    CHECK(seen.size() == 15);
    CHECK_FALSE(is_induced_matching(p.graph, {0, 1}));
}

TEST_CASE("cyclic edge connectivity")
{
    CHECK(cyclic_edge_connectivity(named_graph("petersen").graph) == 5);
    CHECK(cyclic_edge_connectivity(named_graph("l10").graph) == 4);
    CHECK(cyclic_edge_connectivity(l2k(5).graph) == 4);
    CHECK(cyclic_edge_connectivity(l2k(7).graph) == 4);
    CHECK(cyclic_edge_connectivity(named_graph("nor8").graph) == 2);
    // K3,3 has no cut leaving a cycle on both sides, so the cap is returned
    CHECK(cyclic_edge_connectivity(named_graph("k33").graph) == 6);
    CHECK_THROWS_AS(cyclic_edge_connectivity(path(3)), GraphError);
}
