#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slec/graph.hpp"

namespace slec {

/// Malformed input; line is 1-based (0 when the error is not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line)
    {
    }
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Text format: "n m" followed by m lines "u v" (0-based). Blank lines and '#' comments are ignored.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Standard graph6 encoding (optional ">>graph6<<" header). Edge ids follow the bit order
/// of the upper triangle, column by column.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Detects graph6 vs. edge-list text.
Graph parse_graph_auto(std::string_view text);

std::string write_dot(const Graph& g, const std::string& name = "G",
                      const std::vector<std::string>& edge_labels = {});

std::string read_file(const std::string& path);

}  // namespace slec
