#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slec {

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    [[nodiscard]] bool touches(Vertex x) const { return u == x || v == x; }
    [[nodiscard]] Vertex other(Vertex x) const { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    enum class Kind { duplicate_edge, self_loop, vertex_out_of_range, invalid_edge_id, not_cubic, budget_exceeded, disconnected };

    GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    [[nodiscard]] Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Distance in a graph; std::nullopt means "infinite" (unreachable, or no cycle for girth).
using Distance = std::optional<std::size_t>;

/// Immutable simple undirected graph. Edge ids are positions in the input edge list.
class Graph {
public:
    Graph() = default;

    [[nodiscard]] std::size_t vertex_count() const { return incident_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeId e) const;

    /// Edge ids incident to v, in increasing id order.
    [[nodiscard]] const std::vector<EdgeId>& incident(Vertex v) const { return incident_.at(v); }
    [[nodiscard]] std::size_t degree(Vertex v) const { return incident_.at(v).size(); }
    [[nodiscard]] std::vector<Vertex> neighbors(Vertex v) const;
    [[nodiscard]] std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

    [[nodiscard]] std::size_t max_degree() const;
    [[nodiscard]] bool is_regular(std::size_t d) const;
    [[nodiscard]] bool is_cubic() const { return is_regular(3); }

    /// Edges sharing an endpoint with e (excluding e).
    [[nodiscard]] std::vector<EdgeId> adjacent_edges(EdgeId e) const;

    friend Graph build_graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

/// Rejects loops, duplicate edges, and out-of-range endpoints with distinct GraphError kinds.
Graph build_graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

/// BFS distance between e and f in the line graph.
Distance edge_distance(const Graph& g, EdgeId e, EdgeId f);

/// All line-graph distances from e (nullopt where unreachable).
std::vector<Distance> edge_distances_from(const Graph& g, EdgeId e);

/// Symmetric relation over edge ids of a source graph.
class ConflictGraph {
public:
    explicit ConflictGraph(std::size_t node_count) : adjacency_(node_count) {}

    void add_conflict(EdgeId e, EdgeId f);

    [[nodiscard]] std::size_t node_count() const { return adjacency_.size(); }
    [[nodiscard]] const std::vector<EdgeId>& neighbors(EdgeId e) const { return adjacency_.at(e); }
    [[nodiscard]] bool adjacent(EdgeId e, EdgeId f) const;
    [[nodiscard]] std::size_t degree(EdgeId e) const { return adjacency_.at(e).size(); }
    [[nodiscard]] std::size_t pair_count() const;

    /// Set when the relation is complete multipartite (see detect_multipartite).
    std::optional<std::vector<std::vector<EdgeId>>> parts;

private:
    std::vector<std::vector<EdgeId>> adjacency_;  // sorted
};

/// Restriction to `nodes`; node i of the result is nodes[i].
ConflictGraph induced_conflict_graph(const ConflictGraph& cg, const std::vector<EdgeId>& nodes);

/// Nodes are edges of g; adjacency iff edge distance is 1 or 2. `parts` is filled when complete multipartite.
ConflictGraph strong_conflict_graph(const Graph& g);

/// Nodes are edges of g; adjacency iff the edges share an endpoint.
ConflictGraph adjacency_conflict_graph(const Graph& g);

/// Partition into independent classes if the relation is complete multipartite, in order of smallest member.
std::optional<std::vector<std::vector<EdgeId>>> detect_multipartite(const ConflictGraph& cg);

/// Size of a largest clique of the relation (exact branch and bound; node_count <= 64).
std::size_t max_clique_size(const ConflictGraph& cg);

Distance girth(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool has_bridge(const Graph& g);

using InducedMatching = std::vector<EdgeId>;

/// All induced matchings of maximum cardinality, each sorted, the list in lexicographic order.
/// Throws GraphError(budget_exceeded) when the graph has more than 40 edges.
std::vector<InducedMatching> maximum_induced_matchings(const Graph& g);

bool is_induced_matching(const Graph& g, const std::vector<EdgeId>& edges);

/// Smallest edge cut whose removal leaves two components that both contain a cycle,
/// capped at `cap`. Requires a cubic graph on at most 40 vertices.
std::size_t cyclic_edge_connectivity(const Graph& g, std::size_t cap = 6);

}  // namespace slec
