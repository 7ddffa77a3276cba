#include "slec/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace slec {

namespace {

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::string_view strip(std::string_view s)
{
    if (auto hash = s.find('#'); hash != std::string_view::npos)
        s = s.substr(0, hash);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::size_t> parse_numbers(std::string_view line, std::size_t line_no)
{
    std::vector<std::size_t> values;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
            ++pos;
        if (pos == line.size())
            break;
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
            throw ParseError(line_no, "expected non-negative integers, got '" + std::string(line) + "'");
        values.push_back(value);
        pos = static_cast<std::size_t>(ptr - line.data());
    }
    return values;
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    auto lines = split_lines(text);
    std::size_t idx = 0;
    auto next_content = [&]() -> std::pair<std::size_t, std::string_view> {
        while (idx < lines.size()) {
            std::string_view s = strip(lines[idx]);
            ++idx;
            if (!s.empty())
                return {idx, s};
        }
        return {0, {}};
    };

    auto [header_line, header] = next_content();
    if (header_line == 0)
        throw ParseError(0, "empty graph file");
    auto head = parse_numbers(header, header_line);
    if (head.size() != 2)
        throw ParseError(header_line, "header must be 'n m'");
    const std::size_t n = head[0], m = head[1];

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < m; ++i) {
        auto [line_no, content] = next_content();
        if (line_no == 0)
            throw ParseError(lines.size(), "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        auto pair = parse_numbers(content, line_no);
        if (pair.size() != 2)
            throw ParseError(line_no, "edge line must be 'u v'");
        if (pair[0] >= n || pair[1] >= n)
            throw ParseError(line_no, "vertex out of range (n = " + std::to_string(n) + ")");
        edges.emplace_back(pair[0], pair[1]);
    }
    if (auto [extra_line, extra] = next_content(); extra_line != 0)
        throw ParseError(extra_line, "unexpected content after " + std::to_string(m) + " edges");
    try {
        return build_graph(n, edges);
    } catch (const GraphError& err) {
        throw ParseError(0, err.what());
    }
}

std::string write_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    for (char c : text)
        if (c < 63 || c > 126)
            throw ParseError(1, "graph6: invalid character");
    if (text.empty())
        throw ParseError(1, "graph6: empty string");

    std::size_t pos = 0;
    auto take = [&]() -> std::size_t {
        if (pos >= text.size())
            throw ParseError(1, "graph6: truncated input");
        return static_cast<std::size_t>(text[pos++] - 63);
    };
    std::size_t n = 0;
    if (text[0] != 126) {
        n = take();
    } else if (text.size() > 1 && text[1] != 126) {
        ++pos;
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | take();
    } else {
        pos += 2;
        for (int i = 0; i < 6; ++i)
            n = (n << 6) | take();
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError(1, "graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                                std::to_string(text.size() - pos));
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            std::size_t byte = static_cast<std::size_t>(text[pos + k / 6] - 63);
            if ((byte >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    return build_graph(n, edges);
}

std::string write_graph6(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, count = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.find_edge(i, j) ? 1 : 0);
            if (++count == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = count = 0;
            }
        }
    if (count > 0)
        out.push_back(static_cast<char>((acc << (6 - count)) + 63));
    return out;
}

Graph parse_graph_auto(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\n' || s.front() == '\r'))
        s.remove_prefix(1);
    bool looks_like_edge_list = !s.empty() && ((s.front() >= '0' && s.front() <= '9') || s.front() == '#');
    return looks_like_edge_list ? parse_edge_list(text) : parse_graph6(s);
}

std::string write_dot(const Graph& g, const std::string& name, const std::vector<std::string>& edge_labels)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.edge(e).u << " -- " << g.edge(e).v << " [label=\"" << e;
        if (e < edge_labels.size() && !edge_labels[e].empty())
            out << ":" << edge_labels[e];
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace slec
