#include "slec/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

namespace slec {

const Edge& Graph::edge(EdgeId e) const
{
    if (e >= edges_.size())
        throw GraphError(GraphError::Kind::invalid_edge_id, "edge id " + std::to_string(e) + " out of range");
    return edges_[e];
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
    std::vector<Vertex> result;
    for (EdgeId e : incident_.at(v))
        result.push_back(edges_[e].other(v));
    return result;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const
{
    if (u >= vertex_count() || v >= vertex_count())
        return std::nullopt;
    for (EdgeId e : incident_[u])
        if (edges_[e].other(u) == v)
            return e;
    return std::nullopt;
}

std::size_t Graph::max_degree() const
{
    std::size_t d = 0;
    for (const auto& inc : incident_)
        d = std::max(d, inc.size());
    return d;
}

bool Graph::is_regular(std::size_t d) const
{
    return std::all_of(incident_.begin(), incident_.end(), [d](const auto& inc) { return inc.size() == d; });
}

std::vector<EdgeId> Graph::adjacent_edges(EdgeId e) const
{
    const Edge& ed = edge(e);
    std::vector<EdgeId> result;
    for (Vertex x : {ed.u, ed.v})
        for (EdgeId f : incident_[x])
            if (f != e)
                result.push_back(f);
    std::sort(result.begin(), result.end());
    return result;
}

Graph build_graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_list)
{
    Graph g;
    g.incident_.resize(vertex_count);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        auto [u, v] = edge_list[i];
        const std::string where = "edge " + std::to_string(i) + " (" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u >= vertex_count || v >= vertex_count)
            throw GraphError(GraphError::Kind::vertex_out_of_range, where + ": vertex out of range");
        if (u == v)
            throw GraphError(GraphError::Kind::self_loop, where + ": self-loop");
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw GraphError(GraphError::Kind::duplicate_edge, where + ": duplicate edge");
        g.edges_.push_back(Edge{u, v});
        g.incident_[u].push_back(i);
        g.incident_[v].push_back(i);
    }
    return g;
}

std::vector<Distance> edge_distances_from(const Graph& g, EdgeId e)
{
    (void)g.edge(e);
    std::vector<Distance> dist(g.edge_count());
    std::deque<EdgeId> queue{e};
    dist[e] = 0;
    while (!queue.empty()) {
        EdgeId cur = queue.front();
        queue.pop_front();
        const Edge& ed = g.edge(cur);
        for (Vertex x : {ed.u, ed.v})
            for (EdgeId f : g.incident(x))
                if (!dist[f]) {
                    dist[f] = *dist[cur] + 1;
                    queue.push_back(f);
                }
    }
    return dist;
}

Distance edge_distance(const Graph& g, EdgeId e, EdgeId f)
{
    (void)g.edge(f);
    return edge_distances_from(g, e)[f];
}

void ConflictGraph::add_conflict(EdgeId e, EdgeId f)
{
    if (e == f)
        throw std::invalid_argument("conflict relation is irreflexive");
    auto insert = [](std::vector<EdgeId>& list, EdgeId x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x)
            list.insert(it, x);
    };
    insert(adjacency_.at(e), f);
    insert(adjacency_.at(f), e);
}

bool ConflictGraph::adjacent(EdgeId e, EdgeId f) const
{
    const auto& list = adjacency_.at(e);
    return std::binary_search(list.begin(), list.end(), f);
}

std::size_t ConflictGraph::pair_count() const
{
    std::size_t total = 0;
    for (const auto& list : adjacency_)
        total += list.size();
    return total / 2;
}

ConflictGraph induced_conflict_graph(const ConflictGraph& cg, const std::vector<EdgeId>& nodes)
{
    ConflictGraph sub(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (cg.adjacent(nodes[i], nodes[j]))
                sub.add_conflict(i, j);
    sub.parts = detect_multipartite(sub);
    return sub;
}

ConflictGraph strong_conflict_graph(const Graph& g)
{
    ConflictGraph cg(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        // N2(e): edges adjacent to e or to an edge adjacent to e
        for (EdgeId f : g.adjacent_edges(e)) {
            if (f > e)
                cg.add_conflict(e, f);
            for (EdgeId h : g.adjacent_edges(f))
                if (h > e)
                    cg.add_conflict(e, h);
        }
    }
    cg.parts = detect_multipartite(cg);
    return cg;
}

ConflictGraph adjacency_conflict_graph(const Graph& g)
{
    ConflictGraph cg(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (EdgeId f : g.adjacent_edges(e))
            if (f > e)
                cg.add_conflict(e, f);
    return cg;
}

std::optional<std::vector<std::vector<EdgeId>>> detect_multipartite(const ConflictGraph& cg)
{
    // Complete multipartite iff non-adjacency is an equivalence relation.
    const std::size_t n = cg.node_count();
    std::vector<std::optional<std::size_t>> part_of(n);
    std::vector<std::vector<EdgeId>> parts;
    for (EdgeId e = 0; e < n; ++e) {
        if (part_of[e])
            continue;
        std::vector<EdgeId> part{e};
        for (EdgeId f = e + 1; f < n; ++f)
            if (!cg.adjacent(e, f))
                part.push_back(f);
        for (EdgeId f : part) {
            if (part_of[f])
                return std::nullopt;
            part_of[f] = parts.size();
        }
        parts.push_back(std::move(part));
    }
    for (EdgeId e = 0; e < n; ++e)
        for (EdgeId f = e + 1; f < n; ++f)
            if ((part_of[e] == part_of[f]) == cg.adjacent(e, f))
                return std::nullopt;
    return parts;
}

namespace {

using Mask = std::uint64_t;

void clique_search(const std::vector<Mask>& adj, Mask candidates, std::size_t size, std::size_t& best)
{
    if (candidates == 0) {
        best = std::max(best, size);
        return;
    }
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best)
        return;
    while (candidates) {
        if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best)
            return;
        int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        clique_search(adj, candidates & adj[v], size + 1, best);
    }
}

}  // namespace

std::size_t max_clique_size(const ConflictGraph& cg)
{
    const std::size_t n = cg.node_count();
    if (n > 64)
        throw GraphError(GraphError::Kind::budget_exceeded, "max_clique_size supports at most 64 nodes");
    std::vector<Mask> adj(n, 0);
    for (EdgeId e = 0; e < n; ++e)
        for (EdgeId f : cg.neighbors(e))
            adj[e] |= Mask{1} << f;
    std::size_t best = 0;
    Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    clique_search(adj, all, 0, best);
    return best;
}

Distance girth(const Graph& g)
{
    Distance best;
    const std::size_t n = g.vertex_count();
    for (Vertex s = 0; s < n; ++s) {
        std::vector<std::optional<std::size_t>> dist(n);
        std::vector<Vertex> parent(n, s);
        std::deque<Vertex> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (!dist[y]) {
                    dist[y] = *dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    std::size_t len = *dist[x] + *dist[y] + 1;
                    if (!best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

bool is_connected(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n == 0)
        return true;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
            if (!seen[y]) {
                seen[y] = true;
                ++count;
                stack.push_back(y);
            }
    }
    return count == n;
}

bool is_bipartite(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (side[y] == -1) {
                    side[y] = 1 - side[x];
                    stack.push_back(y);
                } else if (side[y] == side[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::size_t component_count_without(const Graph& g, const std::vector<bool>& removed)
{
    UnionFind uf(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!removed[e])
            uf.unite(g.edge(e).u, g.edge(e).v);
    std::size_t count = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (uf.find(v) == v)
            ++count;
    return count;
}

}  // namespace

bool has_bridge(const Graph& g)
{
    std::vector<bool> removed(g.edge_count(), false);
    const std::size_t base = component_count_without(g, removed);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        removed[e] = true;
        bool bridge = component_count_without(g, removed) > base;
        removed[e] = false;
        if (bridge)
            return true;
    }
    return false;
}

bool is_induced_matching(const Graph& g, const std::vector<EdgeId>& edges)
{
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto dist = edge_distances_from(g, edges[i]);
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& d = dist[edges[j]];
            if (d && *d < 3)
                return false;
        }
    }
    return true;
}

namespace {

void enumerate_independent(const std::vector<Mask>& conflicts, std::size_t m, std::size_t next, Mask chosen,
                           Mask blocked, std::size_t& best, std::vector<Mask>& found)
{
    const std::size_t size = static_cast<std::size_t>(std::popcount(chosen));
    std::size_t free_after = 0;
    for (std::size_t e = next; e < m; ++e)
        if (!((blocked >> e) & 1))
            ++free_after;
    if (size + free_after < best)
        return;
    if (next == m) {
        if (size > best) {
            best = size;
            found.clear();
        }
        found.push_back(chosen);
        return;
    }
    if (!((blocked >> next) & 1))
        enumerate_independent(conflicts, m, next + 1, chosen | (Mask{1} << next), blocked | conflicts[next], best, found);
    enumerate_independent(conflicts, m, next + 1, chosen, blocked | (Mask{1} << next), best, found);
}

}  // namespace

std::vector<InducedMatching> maximum_induced_matchings(const Graph& g)
{
    const std::size_t m = g.edge_count();
    if (m > 40)
        throw GraphError(GraphError::Kind::budget_exceeded, "maximum_induced_matchings: more than 40 edges");
    if (m == 0)
        return {};
    ConflictGraph cg = strong_conflict_graph(g);
    std::vector<Mask> conflicts(m, 0);
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f : cg.neighbors(e))
            conflicts[e] |= Mask{1} << f;
    std::size_t best = 0;
    std::vector<Mask> found;
    enumerate_independent(conflicts, m, 0, 0, 0, best, found);

    std::vector<InducedMatching> result;
    for (Mask mask : found) {
        InducedMatching matching;
        for (EdgeId e = 0; e < m; ++e)
            if ((mask >> e) & 1)
                matching.push_back(e);
        result.push_back(std::move(matching));
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

namespace {

std::size_t cyclic_component_count(const Graph& g, const std::vector<bool>& removed)
{
    const std::size_t n = g.vertex_count();
    UnionFind uf(n);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!removed[e])
            uf.unite(g.edge(e).u, g.edge(e).v);
    std::vector<std::size_t> vertices(n, 0), edges(n, 0);
    for (Vertex v = 0; v < n; ++v)
        ++vertices[uf.find(v)];
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!removed[e])
            ++edges[uf.find(g.edge(e).u)];
    std::size_t count = 0;
    for (Vertex r = 0; r < n; ++r)
        if (vertices[r] > 0 && edges[r] >= vertices[r])
            ++count;
    return count;
}

bool cyclic_cut_of_size(const Graph& g, std::size_t size, std::size_t start, std::vector<bool>& removed)
{
    if (size == 0)
        return cyclic_component_count(g, removed) >= 2;
    for (EdgeId e = start; e + size <= g.edge_count(); ++e) {
        removed[e] = true;
        bool hit = cyclic_cut_of_size(g, size - 1, e + 1, removed);
        removed[e] = false;
        if (hit)
            return true;
    }
    return false;
}

}  // namespace

std::size_t cyclic_edge_connectivity(const Graph& g, std::size_t cap)
{
    if (!g.is_cubic())
        throw GraphError(GraphError::Kind::not_cubic, "cyclic_edge_connectivity requires a cubic graph");
    if (g.vertex_count() > 40)
        throw GraphError(GraphError::Kind::budget_exceeded, "cyclic_edge_connectivity: more than 40 vertices");
    std::vector<bool> removed(g.edge_count(), false);
    // a disconnected graph with two cyclic components has a cut of size 0
    if (cyclic_component_count(g, removed) >= 2)
        return 0;
    for (std::size_t s = 1; s < cap; ++s)
        if (cyclic_cut_of_size(g, s, 0, removed))
            return s;
    return cap;
}

}  // namespace slec
