#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "slec/graph.hpp"

namespace slec {

enum class EdgeRole { outer, spoke, inner, pendant, special1, special2, special3, plain };

std::string_view role_name(EdgeRole role);
EdgeRole parse_role(std::string_view name);

/// A graph together with per-edge role tags and the vertex labels used to name edges
/// (e.g. "v3" and "v6" for the edge v3v6).
struct LabeledGraph {
    std::string name;
    Graph graph;
    std::vector<EdgeRole> roles;
    std::vector<std::string> vertex_labels;

    [[nodiscard]] EdgeId edge_between(std::string_view a, std::string_view b) const;
    [[nodiscard]] Vertex vertex(std::string_view label) const;
    [[nodiscard]] std::vector<EdgeId> edges_with_role(EdgeRole role) const;
    [[nodiscard]] std::map<EdgeRole, std::size_t> role_counts() const;
};

/// Names accepted by named_graph, in catalog order.
const std::vector<std::string>& catalog_names();

/// Canonical labeled graph for a catalog name; throws std::invalid_argument for unknown names.
LabeledGraph named_graph(std::string_view name);

/// GP(n,k): outer vertices 0..n-1 (labels "v1".."vn"), inner n..2n-1 ("u1".."un").
/// Edge order: outer i,i+1; spokes i,i'; inner i',(i+k)'.
LabeledGraph generalized_petersen(std::size_t n, std::size_t k);

/// r-fold lift; lifted vertex (v,i) gets id v*r + i. Each permutation maps fibre index i
/// at the first endpoint to fibre index sigma(i) at the second.
LabeledGraph voltage_lift(const LabeledGraph& base, const std::vector<std::vector<std::size_t>>& voltages);

/// (R - uv) glued to the split Petersen graph with u = w1 and v = w2.
/// Vertices of R keep their ids; the split-Petersen vertices v1..v5,u1..u5 follow.
LabeledGraph glue_thm4(const Graph& r_graph, EdgeId uv);

/// The cyclically 4-edge-connected cubic ladder-like graph on 2k+4 vertices (k >= 5).
LabeledGraph l2k(std::size_t k);

}  // namespace slec
