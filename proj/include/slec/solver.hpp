#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slec/graph.hpp"

namespace slec {

using Color = int;
using ColorSet = std::vector<Color>;  // sorted, unique

ColorSet color_range(Color first, Color last);  // [first, last]

class ListAssignment {
public:
    ListAssignment() = default;
    ListAssignment(std::size_t edge_count, ColorSet default_list);

    /// Every edge gets {1..k}.
    static ListAssignment uniform(std::size_t edge_count, int k);

    void set(EdgeId e, ColorSet list);
    [[nodiscard]] const ColorSet& at(EdgeId e) const { return lists_.at(e); }
    [[nodiscard]] std::size_t size() const { return lists_.size(); }
    [[nodiscard]] bool is_uniform() const;
    [[nodiscard]] ColorSet palette() const;  // union of all lists

private:
    std::vector<ColorSet> lists_;
};

/// "edge_id : c1 c2 ..." lines; "* : c1 c2 ..." sets the default for unlisted edges.
ListAssignment parse_list_assignment(std::string_view text, std::size_t edge_count);
std::string write_list_assignment(const ListAssignment& lists);

class PartialColoring {
public:
    PartialColoring() = default;
    explicit PartialColoring(std::size_t edge_count) : colors_(edge_count) {}

    void assign(EdgeId e, Color c) { colors_.at(e) = c; }
    void clear(EdgeId e) { colors_.at(e).reset(); }
    [[nodiscard]] const std::optional<Color>& at(EdgeId e) const { return colors_.at(e); }
    [[nodiscard]] bool is_colored(EdgeId e) const { return colors_.at(e).has_value(); }
    [[nodiscard]] std::size_t size() const { return colors_.size(); }
    [[nodiscard]] std::size_t colored_count() const;

private:
    std::vector<std::optional<Color>> colors_;
};

enum class ColoringMode { proper, strong, normal };
enum class Verdict { feasible, infeasible, undecided };

std::string_view verdict_name(Verdict v);

struct SearchOptions {
    std::uint64_t node_budget = 0;  // 0: unlimited
    double time_budget_seconds = 0;  // 0: unlimited; running out gives UNDECIDED like the node budget
    bool symmetry_breaking = true;  // unused colors lying in exactly the same lists are tried once
};

struct SearchResult {
    Verdict verdict = Verdict::undecided;
    std::vector<Color> coloring;  // total coloring when feasible
    std::uint64_t nodes = 0;

    [[nodiscard]] bool search_complete() const { return verdict != Verdict::undecided; }
};

/// Thrown by the index computations when a node budget runs out.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t nodes) : std::runtime_error(what), nodes_(nodes) {}
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t nodes_;
};

/// Complete backtracking search: most-constrained edge first (ties by smallest id),
/// colors in increasing order, forward checking on bitmask domains. At most 64 distinct colors.
SearchResult list_colorable(const Graph& g, ColoringMode mode, const ListAssignment& lists,
                            const PartialColoring& partial = {}, const SearchOptions& options = {});

SearchResult list_strong_colorable(const Graph& g, const ListAssignment& lists, const PartialColoring& partial = {},
                                   const SearchOptions& options = {});

/// Cubic graphs only.
SearchResult list_normal_colorable(const Graph& g, const ListAssignment& lists, const PartialColoring& partial = {},
                                   const SearchOptions& options = {});

struct IndexResult {
    std::size_t index = 0;
    std::vector<Color> coloring;  // a witness with colors 1..index
    std::uint64_t nodes = 0;      // summed over all deepening rounds
};

/// Iterative deepening from the largest clique of the conflict graph. At most 40 edges.
IndexResult strong_chromatic_index(const Graph& g, const SearchOptions& options = {});

/// Iterative deepening from 3. Cubic graphs with at most 40 edges.
IndexResult normal_chromatic_index(const Graph& g, const SearchOptions& options = {});

/// L(e) minus the colors on already colored edges of N2(e).
ColorSet available_colors(const Graph& g, const PartialColoring& partial, const ListAssignment& lists, EdgeId e);

enum class EdgeClass { rich, poor, invalid };

std::string_view edge_class_name(EdgeClass c);

/// Rich: the four adjacent edges carry 4 distinct colors; poor: exactly 2; invalid otherwise.
std::vector<EdgeClass> classify_edges(const Graph& g, const std::vector<Color>& coloring);

// Independent validators
bool respects_lists(const std::vector<Color>& coloring, const ListAssignment& lists);
bool is_proper_edge_coloring(const Graph& g, const std::vector<Color>& coloring);
bool is_strong_edge_coloring(const Graph& g, const std::vector<Color>& coloring);
bool is_normal_edge_coloring(const Graph& g, const std::vector<Color>& coloring);

/// System of distinct representatives, or a subfamily violating Hall's condition.
struct SdrResult {
    std::optional<std::vector<Color>> representatives;
    std::vector<std::size_t> violating_subfamily;  // indices into the family; |family| > |union| on these
};

SdrResult find_sdr(const std::vector<ColorSet>& family);

struct HallResult {
    std::optional<PartialColoring> extension;
    std::vector<EdgeId> violating_edges;
};

/// Colors all edges of X with distinct available colors when Hall's condition holds.
/// The edges of X must pairwise be within distance 2 (checked in debug builds).
HallResult hall_extend(const Graph& g, const PartialColoring& partial, const ListAssignment& lists,
                       const std::vector<EdgeId>& uncolored);

/// Multiplicity with which each edge is covered by the edges of color c (minus `exclude`)
/// together with their adjacent edges.
std::vector<std::size_t> color_class_cover(const Graph& g, const std::vector<Color>& coloring, Color c,
                                           const std::vector<EdgeId>& exclude = {});

}  // namespace slec
