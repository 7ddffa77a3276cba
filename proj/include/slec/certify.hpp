#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "slec/catalog.hpp"
#include "slec/graph.hpp"
#include "slec/nullsz.hpp"
#include "slec/solver.hpp"

namespace slec::certify {

struct CoveringProjection {
    std::vector<Vertex> vertex_map;  // cover vertex -> base vertex
    std::vector<EdgeId> edge_map;    // cover edge -> base edge
};

/// A covering projection g -> base, or nullopt when none exists.
/// Both graphs must be connected (GraphError::disconnected otherwise).
std::optional<CoveringProjection> covering_projection(const Graph& g, const Graph& base);

/// Homomorphism, surjective, and locally bijective on incident edges.
bool is_covering_projection(const Graph& g, const Graph& base, const CoveringProjection& p);

// List assignments of the constructions.

/// Petersen lower bound: outer {1,2,4,5,7,8}, spokes {1,3,4,6,7,9}, inner {2,3,5,6,8,9}.
ListAssignment petersen_lower_lists(const LabeledGraph& petersen);

/// The three 5-lists {1,2,3,4,5}, {1,2,3,4,6}, {1,2,3,5,6}; `choice` gives the list index used for
/// inner edges, spokes and all remaining edges, in that order. The default is the primary assignment.
ListAssignment five_lists(const LabeledGraph& lg, const std::array<int, 3>& choice = {0, 1, 2});

/// Every edge gets [1, size]; special edge i gets [size*(i+1)+1, size*(i+2)].
ListAssignment disjoint_special_lists(std::size_t edge_count, int size, const std::vector<EdgeId>& special);

/// Edges tagged special-1, special-2, special-3, in that order.
std::vector<EdgeId> special_edges(const LabeledGraph& lg);

/// Bold edges of the Wagner and truncated K3,3 assignments (a smallest infeasible choice).
std::vector<EdgeId> fig10_bold_edges(const LabeledGraph& lg);

// Petersen upper bound.

/// The nine edges of three of the five maximum induced matchings, named c1..c3, d1..d3, e1..e3,
/// with one factor (x - y) per pair of edges from different matchings.
nullsz::FactorProduct petersen_residual_polynomial();

struct CaseCoefficient {
    std::string label;
    std::vector<std::pair<std::string, unsigned>> monomial;
    long long expected;
};
const std::vector<CaseCoefficient>& petersen_case_coefficients();

/// `matchings` groups of three sets of `list_size` colors; the sets of a group are pairwise
/// disjoint and every group draws from the same 3*list_size colors, rotated by group index.
std::vector<ColorSet> hall_profile(std::size_t matchings, std::size_t list_size);

/// Hall's union condition checked over every nonempty subfamily (at most 20 sets), or the
/// first violating subfamily.
std::optional<std::vector<std::size_t>> hall_violation(const std::vector<ColorSet>& family);

/// Counting bound for a complete multipartite conflict graph: colors never repeat across parts,
/// so at least sum over parts of the fewest colors covering that part from its lists are needed.
std::size_t multipartite_color_lower_bound(const std::vector<std::vector<EdgeId>>& parts, const ListAssignment& lists);

// Certificates.

enum class CertVerdict { confirmed, refuted, undecided };
std::string_view cert_verdict_name(CertVerdict v);

enum class Tier { fast, full };
std::string_view tier_name(Tier t);

struct CheckResult {
    std::string name;
    bool passed = false;
    bool complete = true;  // false when a search ran out of budget
    std::string detail;
};

struct CertificateReport {
    std::string name;
    std::vector<long long> params;
    CertVerdict verdict = CertVerdict::undecided;
    nlohmann::json witness = nlohmann::json::object();
    std::uint64_t nodes = 0;
    double millis = 0;
    std::vector<CheckResult> checks;

    [[nodiscard]] nlohmann::json to_json(bool with_timing = true) const;
};

struct CertificateInfo {
    std::string name;
    std::string params;  // e.g. "k" or "variant edge"
    Tier tier;
    std::string summary;
};

const std::vector<CertificateInfo>& certificates();

struct CertifyOptions {
    std::uint64_t node_budget = 0;     // per search; 0 = unlimited
    double time_budget_seconds = 0;    // per search; 0 = unlimited
};

/// Runs a named certificate. Unknown names and bad parameters throw std::invalid_argument.
CertificateReport run_certificate(std::string_view name, const std::vector<long long>& params = {},
                                  const CertifyOptions& options = {});

}  // namespace slec::certify
