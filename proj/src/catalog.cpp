#include "slec/catalog.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace slec {

namespace {

constexpr std::array<std::pair<EdgeRole, std::string_view>, 8> kRoleNames{{
    {EdgeRole::outer, "outer"},
    {EdgeRole::spoke, "spoke"},
    {EdgeRole::inner, "inner"},
    {EdgeRole::pendant, "pendant"},
    {EdgeRole::special1, "special-1"},
    {EdgeRole::special2, "special-2"},
    {EdgeRole::special3, "special-3"},
    {EdgeRole::plain, "plain"},
}};

// Incremental builder keyed by vertex labels.
class Builder {
public:
    Builder(std::string name, std::vector<std::string> labels) : name_(std::move(name)), labels_(std::move(labels)) {}

    Vertex id(std::string_view label) const
    {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end())
            throw std::logic_error("catalog: unknown vertex label " + std::string(label));
        return static_cast<Vertex>(it - labels_.begin());
    }

    void add(std::string_view a, std::string_view b, EdgeRole role = EdgeRole::plain) { add(id(a), id(b), role); }
    void add(Vertex a, Vertex b, EdgeRole role = EdgeRole::plain)
    {
        edges_.emplace_back(a, b);
        roles_.push_back(role);
    }

    LabeledGraph finish() const
    {
        return LabeledGraph{name_, build_graph(labels_.size(), edges_), roles_, labels_};
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<EdgeRole> roles_;
};

std::vector<std::string> numbered(std::string_view prefix, std::size_t count, std::size_t first = 1)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < count; ++i)
        labels.push_back(std::string(prefix) + std::to_string(first + i));
    return labels;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void require(bool condition, const std::string& graph, const std::string& what)
{
    if (!condition)
        throw std::logic_error("catalog validation failed for " + graph + ": " + what);
}

void require_cubic(const LabeledGraph& lg)
{
    require(lg.graph.is_cubic(), lg.name, "not cubic");
    require(is_connected(lg.graph), lg.name, "not connected");
}

LabeledGraph petersen_split()
{
    Builder b("petersen_split", concat(concat(numbered("v", 5), numbered("u", 5)), {"w1", "w2"}));
    for (int i = 2; i <= 5; ++i)
        b.add("v" + std::to_string(i), "v" + std::to_string(i % 5 + 1), EdgeRole::outer);
    for (int i = 1; i <= 5; ++i)
        b.add("u" + std::to_string(i), "v" + std::to_string(i), EdgeRole::spoke);
    for (int i = 1; i <= 5; ++i)
        b.add("u" + std::to_string(i), "u" + std::to_string((i + 1) % 5 + 1), EdgeRole::inner);
    b.add("w1", "v1", EdgeRole::pendant);
    b.add("w2", "v2", EdgeRole::pendant);
    LabeledGraph lg = b.finish();
    auto counts = lg.role_counts();
    require(lg.graph.vertex_count() == 12 && lg.graph.edge_count() == 16, lg.name, "size");
    require(counts[EdgeRole::outer] == 4 && counts[EdgeRole::spoke] == 5 && counts[EdgeRole::inner] == 5 &&
                counts[EdgeRole::pendant] == 2,
            lg.name, "role counts");
    return lg;
}

LabeledGraph wagner()
{
    Builder b("wagner", numbered("v", 8));
    for (Vertex i = 0; i < 8; ++i)
        b.add(i, (i + 1) % 8);
    for (Vertex i = 0; i < 4; ++i)
        b.add(i, i + 4);
    LabeledGraph lg = b.finish();
    require_cubic(lg);
    return lg;
}

LabeledGraph k4()
{
    Builder b("k4", numbered("v", 4));
    for (Vertex i = 0; i < 4; ++i)
        for (Vertex j = i + 1; j < 4; ++j)
            b.add(i, j);
    return b.finish();
}

LabeledGraph k33()
{
    Builder b("k33", {"a1", "a2", "a3", "b1", "b2", "b3"});
    for (Vertex i = 0; i < 3; ++i)
        for (Vertex j = 3; j < 6; ++j)
            b.add(i, j);
    return b.finish();
}

LabeledGraph k33_subdivided()
{
    Builder b("k33_subdivided", {"a1", "a2", "a3", "b1", "b2", "b3", "s"});
    b.add("a1", "s");
    b.add("s", "b1");
    for (Vertex i = 0; i < 3; ++i)
        for (Vertex j = 3; j < 6; ++j)
            if (i != 0 || j != 3)
                b.add(i, j);
    LabeledGraph lg = b.finish();
    require(lg.graph.vertex_count() == 7 && lg.graph.edge_count() == 10 && lg.graph.max_degree() == 3, lg.name,
            "shape");
    return lg;
}

LabeledGraph k33_truncated()
{
    // a1 of K3,3 replaced by the triangle t1 t2 t3, with t_i joined to b_i
    Builder b("k33_truncated", {"t1", "t2", "t3", "a2", "a3", "b1", "b2", "b3"});
    b.add("t1", "t2");
    b.add("t2", "t3");
    b.add("t1", "t3");
    for (int i = 1; i <= 3; ++i)
        b.add("t" + std::to_string(i), "b" + std::to_string(i));
    for (const char* a : {"a2", "a3"})
        for (int i = 1; i <= 3; ++i)
            b.add(a, "b" + std::to_string(i));
    LabeledGraph lg = b.finish();
    require_cubic(lg);
    return lg;
}

LabeledGraph nor8()
{
    // Two copies of K3,3 minus an edge ({v1,v3,v5} x {v2,v4,v6} minus v5v6), joined by v5u5 and v6u6.
    Builder b("nor8", concat(numbered("v", 6), numbered("u", 6)));
    for (const char* side : {"v", "u"}) {
        auto s = [side](int i) { return std::string(side) + std::to_string(i); };
        b.add(s(1), s(2));
        b.add(s(1), s(4));
        b.add(s(1), s(6));
        b.add(s(2), s(3));
        b.add(s(2), s(5));
        b.add(s(3), s(4));
        b.add(s(3), s(6), side[0] == 'v' ? EdgeRole::special1 : EdgeRole::plain);
        b.add(s(4), s(5), side[0] == 'u' ? EdgeRole::special3 : EdgeRole::plain);
    }
    b.add("v5", "u5", EdgeRole::special2);
    b.add("v6", "u6");
    LabeledGraph lg = b.finish();
    require_cubic(lg);
    require(lg.graph.edge_count() == 18 && !has_bridge(lg.graph), lg.name, "shape");
    return lg;
}

// H_I on v1..v8; v7v8 is the only edge leaving {v1..v7}.
void add_h_i(Builder& b)
{
    b.add("v1", "v2");
    b.add("v1", "v4");
    b.add("v1", "v6", EdgeRole::special1);
    b.add("v2", "v3");
    b.add("v2", "v5");
    b.add("v3", "v4");
    b.add("v3", "v6");
    b.add("v4", "v5");
    b.add("v5", "v7");
    b.add("v6", "v7");
    b.add("v7", "v8", EdgeRole::special2);
}

LabeledGraph h_i_host()
{
    // v8 completed by K4 minus the edge ab, with v8 joined to a and b.
    Builder b("h_i_host", concat(numbered("v", 8), {"a", "b", "c", "d"}));
    add_h_i(b);
    b.add("v8", "a");
    b.add("v8", "b");
    b.add("a", "c");
    b.add("a", "d");
    b.add("b", "c");
    b.add("b", "d");
    b.add("c", "d");
    LabeledGraph lg = b.finish();
    require_cubic(lg);
    return lg;
}

LabeledGraph h_i_host_alt()
{
    // v8 completed by K3,3 minus the edge a1b1, with v8 joined to a1 and b1.
    Builder b("h_i_host_alt", concat(numbered("v", 8), {"a1", "a2", "a3", "b1", "b2", "b3"}));
    add_h_i(b);
    b.add("v8", "a1");
    b.add("v8", "b1");
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != 1 || j != 1)
                b.add("a" + std::to_string(i), "b" + std::to_string(j));
    LabeledGraph lg = b.finish();
    require_cubic(lg);
    return lg;
}

}  // namespace

std::string_view role_name(EdgeRole role)
{
    for (auto [r, name] : kRoleNames)
        if (r == role)
            return name;
    return "plain";
}

EdgeRole parse_role(std::string_view name)
{
    for (auto [r, n] : kRoleNames)
        if (n == name)
            return r;
    throw std::invalid_argument("unknown edge role '" + std::string(name) + "'");
}

Vertex LabeledGraph::vertex(std::string_view label) const
{
    auto it = std::find(vertex_labels.begin(), vertex_labels.end(), label);
    if (it == vertex_labels.end())
        throw std::invalid_argument(name + ": no vertex labelled " + std::string(label));
    return static_cast<Vertex>(it - vertex_labels.begin());
}

EdgeId LabeledGraph::edge_between(std::string_view a, std::string_view b) const
{
    auto e = graph.find_edge(vertex(a), vertex(b));
    if (!e)
        throw std::invalid_argument(name + ": no edge " + std::string(a) + std::string(b));
    return *e;
}

std::vector<EdgeId> LabeledGraph::edges_with_role(EdgeRole role) const
{
    std::vector<EdgeId> result;
    for (EdgeId e = 0; e < roles.size(); ++e)
        if (roles[e] == role)
            result.push_back(e);
    return result;
}

std::map<EdgeRole, std::size_t> LabeledGraph::role_counts() const
{
    std::map<EdgeRole, std::size_t> counts;
    for (EdgeRole r : roles)
        ++counts[r];
    return counts;
}

const std::vector<std::string>& catalog_names()
{
    static const std::vector<std::string> names{
        "petersen", "petersen_split", "wagner", "k33_subdivided", "k33_truncated", "dodecahedron", "gp10_3",
        "nor8",     "h_i_host",       "h_i_host_alt", "l10",        "k4",           "k33",
    };
    return names;
}

LabeledGraph named_graph(std::string_view name)
{
    LabeledGraph lg;
    if (name == "petersen")
        lg = generalized_petersen(5, 2);
    else if (name == "petersen_split")
        return petersen_split();
    else if (name == "wagner")
        return wagner();
    else if (name == "k33_subdivided")
        return k33_subdivided();
    else if (name == "k33_truncated")
        return k33_truncated();
    else if (name == "dodecahedron")
        lg = generalized_petersen(10, 2);
    else if (name == "gp10_3")
        lg = generalized_petersen(10, 3);
    else if (name == "nor8")
        return nor8();
    else if (name == "h_i_host")
        return h_i_host();
    else if (name == "h_i_host_alt")
        return h_i_host_alt();
    else if (name == "l10")
        lg = l2k(5);
    else if (name == "k4")
        return k4();
    else if (name == "k33")
        return k33();
    else
        throw std::invalid_argument("unknown catalog graph '" + std::string(name) + "'");
    lg.name = std::string(name);
    return lg;
}

LabeledGraph generalized_petersen(std::size_t n, std::size_t k)
{
    if (n < 3 || k < 1 || 2 * k >= n)
        throw std::invalid_argument("generalized_petersen requires n >= 3 and 1 <= k < n/2");
    Builder b("gp" + std::to_string(n) + "_" + std::to_string(k), concat(numbered("v", n), numbered("u", n)));
    for (Vertex i = 0; i < n; ++i)
        b.add(i, (i + 1) % n, EdgeRole::outer);
    for (Vertex i = 0; i < n; ++i)
        b.add(n + i, i, EdgeRole::spoke);
    for (Vertex i = 0; i < n; ++i)
        b.add(n + i, n + (i + k) % n, EdgeRole::inner);
    LabeledGraph lg = b.finish();
    require_cubic(lg);
    return lg;
}

LabeledGraph voltage_lift(const LabeledGraph& base, const std::vector<std::vector<std::size_t>>& voltages)
{
    const Graph& g = base.graph;
    if (voltages.size() != g.edge_count())
        throw std::invalid_argument("voltage_lift: one permutation per base edge required");
    const std::size_t r = voltages.empty() ? 1 : voltages.front().size();
    if (r == 0)
        throw std::invalid_argument("voltage_lift: empty permutation");
    for (const auto& sigma : voltages) {
        if (sigma.size() != r)
            throw std::invalid_argument("voltage_lift: permutation arity mismatch");
        std::vector<bool> hit(r, false);
        for (std::size_t x : sigma) {
            if (x >= r || hit[x])
                throw std::invalid_argument("voltage_lift: not a permutation of [0,r)");
            hit[x] = true;
        }
    }

    LabeledGraph lifted;
    lifted.name = base.name + "_lift" + std::to_string(r);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (std::size_t i = 0; i < r; ++i) {
            std::string label = v < base.vertex_labels.size() ? base.vertex_labels[v] : std::to_string(v);
            lifted.vertex_labels.push_back(label + "." + std::to_string(i));
        }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (std::size_t i = 0; i < r; ++i) {
            edges.emplace_back(g.edge(e).u * r + i, g.edge(e).v * r + voltages[e][i]);
            lifted.roles.push_back(e < base.roles.size() ? base.roles[e] : EdgeRole::plain);
        }
    lifted.graph = build_graph(g.vertex_count() * r, edges);
    return lifted;
}

LabeledGraph glue_thm4(const Graph& r_graph, EdgeId uv)
{
    if (!r_graph.is_cubic())
        throw GraphError(GraphError::Kind::not_cubic, "glue_thm4 requires a cubic graph");
    const Edge removed = r_graph.edge(uv);
    const std::size_t n = r_graph.vertex_count();
    const LabeledGraph split = petersen_split();

    LabeledGraph lg;
    lg.name = "thm4_glue";
    for (Vertex x = 0; x < n; ++x)
        lg.vertex_labels.push_back("r" + std::to_string(x));
    for (std::size_t i = 0; i < 10; ++i)
        lg.vertex_labels.push_back(split.vertex_labels[i]);

    // split-Petersen vertex -> glued vertex; w1 -> u, w2 -> v
    auto map_vertex = [&](Vertex p) -> Vertex {
        if (p == split.vertex("w1"))
            return removed.u;
        if (p == split.vertex("w2"))
            return removed.v;
        return n + p;
    };

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (EdgeId e = 0; e < r_graph.edge_count(); ++e)
        if (e != uv) {
            edges.emplace_back(r_graph.edge(e).u, r_graph.edge(e).v);
            lg.roles.push_back(EdgeRole::plain);
        }
    for (EdgeId e = 0; e < split.graph.edge_count(); ++e) {
        const Edge& pe = split.graph.edge(e);
        edges.emplace_back(map_vertex(pe.u), map_vertex(pe.v));
        lg.roles.push_back(split.roles[e]);
    }
    lg.graph = build_graph(n + 10, edges);
    require(lg.graph.is_cubic(), lg.name, "not cubic");
    return lg;
}

LabeledGraph l2k(std::size_t k)
{
    if (k < 5)
        throw std::invalid_argument("l2k requires k >= 5");
    const std::size_t top = 2 * k;
    Builder b("l" + std::to_string(top), concat(numbered("v", top), numbered("u", 4)));
    auto v = [](std::size_t i) { return "v" + std::to_string(i); };
    b.add("v1", "v2");
    b.add("v1", "v3", EdgeRole::special1);
    b.add("v2", "v4", EdgeRole::special2);
    b.add("v3", "v5");
    b.add("v3", "v6");
    b.add("v4", "v5");
    b.add("v4", "v6");
    for (std::size_t i = 5; i + 2 <= top; ++i)
        b.add(v(i), v(i + 2));
    for (std::size_t j = 3; j < k; ++j)
        b.add(v(2 * j + 1), v(2 * j + 2));
    b.add("u1", "v1");
    b.add("u2", "v2");
    b.add("u1", "u2");
    b.add("u3", "u4");
    b.add("u1", "u3");
    b.add("u2", "u4");
    b.add("u3", v(top - 1));
    b.add("u4", v(top));
    LabeledGraph lg = b.finish();
    require_cubic(lg);
    require(lg.graph.vertex_count() == top + 4, lg.name, "vertex count");
    if (lg.graph.vertex_count() <= 40)
        require(cyclic_edge_connectivity(lg.graph, 5) == 4, lg.name, "not cyclically 4-edge-connected");
    return lg;
}

}  // namespace slec
