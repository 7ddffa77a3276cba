#include "slec/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "slec/graph_io.hpp"

namespace slec {

ColorSet color_range(Color first, Color last)
{
    ColorSet result;
    for (Color c = first; c <= last; ++c)
        result.push_back(c);
    return result;
}

namespace {

ColorSet normalized(ColorSet list)
{
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (list.empty())
        throw std::invalid_argument("color lists must be non-empty");
    if (list.front() < 0)
        throw std::invalid_argument("colors must be non-negative");
    return list;
}

}  // namespace

ListAssignment::ListAssignment(std::size_t edge_count, ColorSet default_list)
    : lists_(edge_count, normalized(std::move(default_list)))
{
}

ListAssignment ListAssignment::uniform(std::size_t edge_count, int k)
{
    return ListAssignment(edge_count, color_range(1, k));
}

void ListAssignment::set(EdgeId e, ColorSet list) { lists_.at(e) = normalized(std::move(list)); }

bool ListAssignment::is_uniform() const
{
    return std::all_of(lists_.begin(), lists_.end(), [&](const ColorSet& l) { return l == lists_.front(); });
}

ColorSet ListAssignment::palette() const
{
    std::set<Color> all;
    for (const auto& l : lists_)
        all.insert(l.begin(), l.end());
    return {all.begin(), all.end()};
}

ListAssignment parse_list_assignment(std::string_view text, std::size_t edge_count)
{
    std::optional<ColorSet> fallback;
    std::map<EdgeId, ColorSet> explicit_lists;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(line_no, "expected 'edge_id : colors'");
        std::istringstream key(line.substr(0, colon));
        std::string key_token, trailing;
        key >> key_token;
        if (key_token.empty() || (key >> trailing))
            throw ParseError(line_no, "malformed edge id");
        std::istringstream rest(line.substr(colon + 1));
        ColorSet colors;
        std::string token;
        while (rest >> token) {
            int c = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), c);
            if (ec != std::errc{} || ptr != token.data() + token.size() || c < 0)
                throw ParseError(line_no, "invalid color '" + token + "'");
            colors.push_back(c);
        }
        if (colors.empty())
            throw ParseError(line_no, "empty color list");
        if (key_token == "*") {
            if (fallback)
                throw ParseError(line_no, "duplicate default line");
            fallback = colors;
            continue;
        }
        EdgeId e = 0;
        auto [ptr, ec] = std::from_chars(key_token.data(), key_token.data() + key_token.size(), e);
        if (ec != std::errc{} || ptr != key_token.data() + key_token.size())
            throw ParseError(line_no, "invalid edge id '" + key_token + "'");
        if (e >= edge_count)
            throw ParseError(line_no, "edge id " + key_token + " out of range (m = " + std::to_string(edge_count) + ")");
        if (!explicit_lists.emplace(e, colors).second)
            throw ParseError(line_no, "duplicate list for edge " + key_token);
    }
    ListAssignment lists(edge_count, fallback.value_or(ColorSet{0}));
    for (EdgeId e = 0; e < edge_count; ++e) {
        auto it = explicit_lists.find(e);
        if (it != explicit_lists.end())
            lists.set(e, it->second);
        else if (!fallback)
            throw ParseError(0, "no list for edge " + std::to_string(e) + " and no default '*' line");
    }
    return lists;
}

std::string write_list_assignment(const ListAssignment& lists)
{
    std::ostringstream out;
    for (EdgeId e = 0; e < lists.size(); ++e) {
        out << e << " :";
        for (Color c : lists.at(e))
            out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

std::size_t PartialColoring::colored_count() const
{
    return static_cast<std::size_t>(std::count_if(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); }));
}

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::feasible:
        return "FEASIBLE";
    case Verdict::infeasible:
        return "INFEASIBLE";
    case Verdict::undecided:
        return "UNDECIDED";
    }
    return "UNDECIDED";
}

std::string_view edge_class_name(EdgeClass c)
{
    switch (c) {
    case EdgeClass::rich:
        return "rich";
    case EdgeClass::poor:
        return "poor";
    case EdgeClass::invalid:
        return "invalid";
    }
    return "invalid";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int c) { return Mask{1} << c; }

bool rich_or_poor(int a1, int a2, int b1, int b2)
{
    std::array<int, 4> xs{a1, a2, b1, b2};
    std::sort(xs.begin(), xs.end());
    int distinct = static_cast<int>(std::unique(xs.begin(), xs.end()) - xs.begin());
    return distinct == 2 || distinct == 4;
}

// The four edges adjacent to e in a cubic graph: two at each endpoint.
std::array<EdgeId, 4> neighbors4(const Graph& g, EdgeId e)
{
    std::array<EdgeId, 4> out{};
    std::size_t k = 0;
    const Edge& ed = g.edge(e);
    for (Vertex x : {ed.u, ed.v})
        for (EdgeId f : g.incident(x))
            if (f != e)
                out[k++] = f;
    return out;
}

class Search {
public:
    Search(const Graph& g, ColoringMode mode, const ListAssignment& lists, const SearchOptions& options)
        : g_(g), mode_(mode), m_(g.edge_count()), options_(options)
    {
        if (lists.size() != m_)
            throw std::invalid_argument("list assignment size does not match edge count");
        if (mode == ColoringMode::normal && !g.is_cubic())
            throw GraphError(GraphError::Kind::not_cubic, "normal edge-coloring requires a cubic graph");
        palette_ = lists.palette();
        if (palette_.size() > 64)
            throw std::invalid_argument("at most 64 distinct colors are supported, got " + std::to_string(palette_.size()));
        list_mask_.resize(m_, 0);
        for (EdgeId e = 0; e < m_; ++e)
            for (Color c : lists.at(e))
                list_mask_[e] |= bit(index_of(c));

        ConflictGraph cg = mode == ColoringMode::strong ? strong_conflict_graph(g) : adjacency_conflict_graph(g);
        conflicts_.resize(m_);
        for (EdgeId e = 0; e < m_; ++e)
            conflicts_[e] = cg.neighbors(e);
        if (mode == ColoringMode::normal) {
            quad_.resize(m_);
            for (EdgeId e = 0; e < m_; ++e)
                quad_[e] = neighbors4(g, e);
        }
        // colors contained in exactly the same lists are interchangeable
        std::map<std::vector<bool>, Mask> by_signature;
        for (std::size_t c = 0; c < palette_.size(); ++c) {
            std::vector<bool> sig(m_);
            for (EdgeId e = 0; e < m_; ++e)
                sig[e] = (list_mask_[e] >> c) & 1;
            by_signature[sig] |= bit(static_cast<int>(c));
        }
        for (const auto& [sig, mask] : by_signature)
            if (std::popcount(mask) > 1)
                color_classes_.push_back(mask);
    }

    SearchResult run(const PartialColoring& partial)
    {
        if (partial.size() != 0 && partial.size() != m_)
            throw std::invalid_argument("partial coloring size does not match edge count");
        color_.assign(m_, -1);
        use_count_.assign(palette_.size(), 0);
        std::vector<Mask> avail = list_mask_;
        Mask precolored = 0;
        for (EdgeId e = 0; e < partial.size(); ++e) {
            if (!partial.is_colored(e))
                continue;
            Color c = *partial.at(e);
            auto it = std::lower_bound(palette_.begin(), palette_.end(), c);
            if (it == palette_.end() || *it != c || !(list_mask_[e] & bit(index_of(c))))
                throw std::invalid_argument("precolored edge " + std::to_string(e) + " uses a color outside its list");
            color_[e] = index_of(c);
            precolored |= bit(color_[e]);
            ++use_count_[static_cast<std::size_t>(color_[e])];
        }
        for (EdgeId e = 0; e < m_; ++e)
            for (EdgeId f : conflicts_[e])
                if (color_[e] >= 0 && color_[f] >= 0 && color_[e] == color_[f])
                    throw std::invalid_argument("precoloring is not conflict-free");

        // a precolored color is no longer interchangeable with the others of its class
        active_classes_.clear();
        if (options_.symmetry_breaking)
            for (Mask cls : color_classes_)
                if (std::popcount(cls & ~precolored) > 1)
                    active_classes_.push_back(cls & ~precolored);

        SearchResult result;
        bool consistent = true;
        for (EdgeId e = 0; e < m_ && consistent; ++e)
            if (color_[e] >= 0)
                consistent = propagate(e, color_[e], avail);
        if (consistent && mode_ == ColoringMode::normal)
            for (EdgeId h = 0; h < m_ && consistent; ++h)
                consistent = check_normal(h, avail);

        bool found = consistent && dfs(avail);
        result.nodes = nodes_;
        if (found) {
            result.verdict = Verdict::feasible;
            for (int idx : color_)
                result.coloring.push_back(palette_[static_cast<std::size_t>(idx)]);
        } else {
            result.verdict = aborted_ ? Verdict::undecided : Verdict::infeasible;
        }
        return result;
    }

private:
    int index_of(Color c) const
    {
        return static_cast<int>(std::lower_bound(palette_.begin(), palette_.end(), c) - palette_.begin());
    }

    bool dfs(std::vector<Mask>& avail)
    {
        ++nodes_;
        if (options_.node_budget && nodes_ > options_.node_budget) {
            aborted_ = true;
            return false;
        }
        if (options_.time_budget_seconds > 0 && (nodes_ & 1023) == 0 &&
            std::chrono::steady_clock::now() - start_ > std::chrono::duration<double>(options_.time_budget_seconds)) {
            aborted_ = true;
            return false;
        }
        std::optional<EdgeId> pick;
        int best = 65;
        for (EdgeId e = 0; e < m_; ++e)
            if (color_[e] < 0) {
                int size = std::popcount(avail[e]);
                if (size < best) {
                    best = size;
                    pick = e;
                }
            }
        if (!pick)
            return true;
        const EdgeId e = *pick;
        Mask choices = avail[e];
        // among unused interchangeable colors only the smallest needs trying
        for (Mask cls : active_classes_) {
            Mask unused = cls & ~used_mask();
            choices &= ~(unused & (unused - 1));
        }
        while (choices) {
            int c = std::countr_zero(choices);
            choices &= choices - 1;
            std::vector<Mask> next = avail;
            color_[e] = c;
            ++use_count_[static_cast<std::size_t>(c)];
            if (propagate(e, c, next) && dfs(next))
                return true;
            --use_count_[static_cast<std::size_t>(c)];
            color_[e] = -1;
            if (aborted_)
                return false;
        }
        return false;
    }

    Mask used_mask() const
    {
        Mask used = 0;
        for (std::size_t c = 0; c < use_count_.size(); ++c)
            if (use_count_[c])
                used |= bit(static_cast<int>(c));
        return used;
    }

    bool propagate(EdgeId e, int c, std::vector<Mask>& avail)
    {
        for (EdgeId f : conflicts_[e])
            if (color_[f] < 0) {
                avail[f] &= ~bit(c);
                if (!avail[f])
                    return false;
            }
        if (mode_ == ColoringMode::normal)
            for (EdgeId h : conflicts_[e])
                if (!check_normal(h, avail))
                    return false;
        return true;
    }

    // Rich-or-poor constraint of edge h: verified once all four neighbours are colored,
    // and used to filter the last uncolored neighbour once three are colored.
    bool check_normal(EdgeId h, std::vector<Mask>& avail)
    {
        const auto& q = quad_[h];
        int uncolored = -1, missing = 0;
        for (int i = 0; i < 4; ++i)
            if (color_[q[static_cast<std::size_t>(i)]] < 0) {
                uncolored = i;
                ++missing;
            }
        auto col = [&](int i) { return color_[q[static_cast<std::size_t>(i)]]; };
        if (missing == 0)
            return rich_or_poor(col(0), col(1), col(2), col(3));
        if (missing > 1)
            return true;
        const EdgeId target = q[static_cast<std::size_t>(uncolored)];
        Mask allowed = 0;
        for (Mask rest = avail[target]; rest; rest &= rest - 1) {
            int x = std::countr_zero(rest);
            std::array<int, 4> vals{};
            for (int i = 0; i < 4; ++i)
                vals[static_cast<std::size_t>(i)] = i == uncolored ? x : col(i);
            if (rich_or_poor(vals[0], vals[1], vals[2], vals[3]))
                allowed |= bit(x);
        }
        avail[target] &= allowed;
        return avail[target] != 0;
    }

    const Graph& g_;
    ColoringMode mode_;
    std::size_t m_;
    SearchOptions options_;
    ColorSet palette_;
    std::vector<Mask> list_mask_;
    std::vector<std::vector<EdgeId>> conflicts_;
    std::vector<std::array<EdgeId, 4>> quad_;
    std::vector<int> color_;
    std::vector<int> use_count_;
    std::vector<Mask> color_classes_;
    std::vector<Mask> active_classes_;
    bool aborted_ = false;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

SearchResult list_colorable(const Graph& g, ColoringMode mode, const ListAssignment& lists,
                            const PartialColoring& partial, const SearchOptions& options)
{
    if (g.edge_count() == 0)
        return SearchResult{Verdict::feasible, {}, 1};
    Search search(g, mode, lists, options);
    return search.run(partial);
}

SearchResult list_strong_colorable(const Graph& g, const ListAssignment& lists, const PartialColoring& partial,
                                   const SearchOptions& options)
{
    return list_colorable(g, ColoringMode::strong, lists, partial, options);
}

SearchResult list_normal_colorable(const Graph& g, const ListAssignment& lists, const PartialColoring& partial,
                                   const SearchOptions& options)
{
    if (!g.is_cubic())
        throw GraphError(GraphError::Kind::not_cubic, "normal edge-coloring requires a cubic graph");
    return list_colorable(g, ColoringMode::normal, lists, partial, options);
}

namespace {

IndexResult deepen(const Graph& g, ColoringMode mode, std::size_t lower, const SearchOptions& options,
                   const char* what)
{
    if (g.edge_count() > 40)
        throw GraphError(GraphError::Kind::budget_exceeded, std::string(what) + ": more than 40 edges");
    IndexResult result;
    if (g.edge_count() == 0)
        return result;
    for (std::size_t k = std::max<std::size_t>(lower, 1);; ++k) {
        SearchResult r = list_colorable(g, mode, ListAssignment::uniform(g.edge_count(), static_cast<int>(k)), {}, options);
        result.nodes += r.nodes;
        if (r.verdict == Verdict::undecided)
            throw BudgetExceeded(std::string(what) + ": node budget exhausted at k = " + std::to_string(k), result.nodes);
        if (r.verdict == Verdict::feasible) {
            result.index = k;
            result.coloring = std::move(r.coloring);
            return result;
        }
    }
}

}  // namespace

IndexResult strong_chromatic_index(const Graph& g, const SearchOptions& options)
{
    if (g.edge_count() > 40)
        throw GraphError(GraphError::Kind::budget_exceeded, "strong_chromatic_index: more than 40 edges");
    return deepen(g, ColoringMode::strong, max_clique_size(strong_conflict_graph(g)), options, "strong_chromatic_index");
}

IndexResult normal_chromatic_index(const Graph& g, const SearchOptions& options)
{
    if (!g.is_cubic())
        throw GraphError(GraphError::Kind::not_cubic, "normal_chromatic_index requires a cubic graph");
    return deepen(g, ColoringMode::normal, 3, options, "normal_chromatic_index");
}

ColorSet available_colors(const Graph& g, const PartialColoring& partial, const ListAssignment& lists, EdgeId e)
{
    if (partial.size() != g.edge_count() || lists.size() != g.edge_count())
        throw std::invalid_argument("available_colors: size mismatch");
    if (partial.is_colored(e))
        throw std::invalid_argument("available_colors: edge " + std::to_string(e) + " is already colored");
    auto dist = edge_distances_from(g, e);
    std::set<Color> taken;
    for (EdgeId f = 0; f < g.edge_count(); ++f)
        if (f != e && dist[f] && *dist[f] <= 2 && partial.is_colored(f))
            taken.insert(*partial.at(f));
    ColorSet result;
    for (Color c : lists.at(e))
        if (!taken.count(c))
            result.push_back(c);
    return result;
}

std::vector<EdgeClass> classify_edges(const Graph& g, const std::vector<Color>& coloring)
{
    if (!g.is_cubic())
        throw GraphError(GraphError::Kind::not_cubic, "classify_edges requires a cubic graph");
    if (!is_proper_edge_coloring(g, coloring))
        throw std::invalid_argument("classify_edges requires a proper total edge-coloring");
    std::vector<EdgeClass> result;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::set<Color> seen;
        for (EdgeId f : g.adjacent_edges(e))
            seen.insert(coloring[f]);
        result.push_back(seen.size() == 4 ? EdgeClass::rich : seen.size() == 2 ? EdgeClass::poor : EdgeClass::invalid);
    }
    return result;
}

bool respects_lists(const std::vector<Color>& coloring, const ListAssignment& lists)
{
    if (coloring.size() != lists.size())
        return false;
    for (EdgeId e = 0; e < coloring.size(); ++e)
        if (!std::binary_search(lists.at(e).begin(), lists.at(e).end(), coloring[e]))
            return false;
    return true;
}

bool is_proper_edge_coloring(const Graph& g, const std::vector<Color>& coloring)
{
    if (coloring.size() != g.edge_count())
        return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::set<Color> seen;
        for (EdgeId e : g.incident(v))
            if (!seen.insert(coloring[e]).second)
                return false;
    }
    return true;
}

bool is_strong_edge_coloring(const Graph& g, const std::vector<Color>& coloring)
{
    if (coloring.size() != g.edge_count())
        return false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto dist = edge_distances_from(g, e);
        for (EdgeId f = e + 1; f < g.edge_count(); ++f)
            if (dist[f] && *dist[f] <= 2 && coloring[e] == coloring[f])
                return false;
    }
    return true;
}

bool is_normal_edge_coloring(const Graph& g, const std::vector<Color>& coloring)
{
    if (!g.is_cubic() || !is_proper_edge_coloring(g, coloring))
        return false;
    auto classes = classify_edges(g, coloring);
    return std::none_of(classes.begin(), classes.end(), [](EdgeClass c) { return c == EdgeClass::invalid; });
}

SdrResult find_sdr(const std::vector<ColorSet>& family)
{
    // Kuhn's augmenting paths over members x colors.
    std::map<Color, std::size_t> owner;
    std::vector<std::optional<Color>> chosen(family.size());

    std::function<bool(std::size_t, std::set<Color>&)> augment = [&](std::size_t i, std::set<Color>& visited) {
        for (Color c : family[i]) {
            if (!visited.insert(c).second)
                continue;
            auto it = owner.find(c);
            if (it == owner.end() || augment(it->second, visited)) {
                owner[c] = i;
                chosen[i] = c;
                return true;
            }
        }
        return false;
    };

    SdrResult result;
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::set<Color> visited;
        if (augment(i, visited))
            continue;
        // Members reachable from i by alternating paths have fewer colors than members.
        std::set<std::size_t> members{i};
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (Color c : family[x]) {
                auto it = owner.find(c);
                if (it != owner.end() && members.insert(it->second).second)
                    stack.push_back(it->second);
            }
        }
        result.violating_subfamily.assign(members.begin(), members.end());
        return result;
    }
    std::vector<Color> reps;
    for (const auto& c : chosen)
        reps.push_back(*c);
    result.representatives = std::move(reps);
    return result;
}

HallResult hall_extend(const Graph& g, const PartialColoring& partial, const ListAssignment& lists,
                       const std::vector<EdgeId>& uncolored)
{
    for (EdgeId e : uncolored)
        if (partial.is_colored(e))
            throw std::invalid_argument("hall_extend: edge " + std::to_string(e) + " is already colored");
#ifndef NDEBUG
    for (std::size_t i = 0; i < uncolored.size(); ++i)
        for (std::size_t j = i + 1; j < uncolored.size(); ++j) {
            auto d = edge_distance(g, uncolored[i], uncolored[j]);
            if (!d || *d > 2)
                throw std::logic_error("hall_extend: edges of X must pairwise conflict");
        }
#endif
    std::vector<ColorSet> family;
    for (EdgeId e : uncolored)
        family.push_back(available_colors(g, partial, lists, e));
    SdrResult sdr = find_sdr(family);
    HallResult result;
    if (!sdr.representatives) {
        for (std::size_t i : sdr.violating_subfamily)
            result.violating_edges.push_back(uncolored[i]);
        return result;
    }
    PartialColoring extended = partial;
    for (std::size_t i = 0; i < uncolored.size(); ++i)
        extended.assign(uncolored[i], (*sdr.representatives)[i]);
    result.extension = std::move(extended);
    return result;
}

std::vector<std::size_t> color_class_cover(const Graph& g, const std::vector<Color>& coloring, Color c,
                                           const std::vector<EdgeId>& exclude)
{
    if (coloring.size() != g.edge_count())
        throw std::invalid_argument("color_class_cover requires a total coloring");
    if (std::find(coloring.begin(), coloring.end(), c) == coloring.end())
        throw std::invalid_argument("color_class_cover: color " + std::to_string(c) + " is unused");
    std::vector<std::size_t> counts(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (coloring[e] != c || std::find(exclude.begin(), exclude.end(), e) != exclude.end())
            continue;
        ++counts[e];
        for (EdgeId f : g.adjacent_edges(e))
            ++counts[f];
    }
    return counts;
}

}  // namespace slec
