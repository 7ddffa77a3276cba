// slec: command-line front end for the strong/normal list edge-coloring toolkit.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "slec/catalog.hpp"
#include "slec/certify.hpp"
#include "slec/graph.hpp"
#include "slec/graph_io.hpp"
#include "slec/nullsz.hpp"
#include "slec/solver.hpp"

using nlohmann::json;
using namespace slec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUndecided = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fnv1a(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

struct GraphInput {
    std::string graph_file;
    std::string named;
};

struct LoadedGraph {
    LabeledGraph lg;
    std::string source;
    std::string hash;
};

std::size_t parse_size(std::string_view s, const std::string& what)
{
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw UsageError("bad " + what + " '" + std::string(s) + "'");
    return v;
}

// Catalog names, plus "gp:N,K" and "l2k:K".
LabeledGraph resolve_named(const std::string& name)
{
    if (name.rfind("gp:", 0) == 0) {
        auto rest = name.substr(3);
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw UsageError("expected gp:N,K");
        return generalized_petersen(parse_size(rest.substr(0, comma), "n"), parse_size(rest.substr(comma + 1), "k"));
    }
    if (name.rfind("l2k:", 0) == 0)
        return l2k(parse_size(name.substr(4), "k"));
    return named_graph(name);
}

LoadedGraph load_graph(const GraphInput& in)
{
    if (in.graph_file.empty() == in.named.empty())
        throw UsageError("give exactly one of --graph FILE or --named NAME");
    LoadedGraph out;
    if (!in.named.empty()) {
        out.lg = resolve_named(in.named);
        out.source = "named:" + in.named;
        out.hash = fnv1a(write_edge_list(out.lg.graph));
        return out;
    }
    const std::string text = read_file(in.graph_file);
    out.lg.name = std::filesystem::path(in.graph_file).stem().string();
    out.lg.graph = parse_graph_auto(text);
    out.lg.roles.assign(out.lg.graph.edge_count(), EdgeRole::plain);
    for (Vertex v = 0; v < out.lg.graph.vertex_count(); ++v)
        out.lg.vertex_labels.push_back(std::to_string(v));
    out.source = in.graph_file;
    out.hash = fnv1a(text);
    return out;
}

void add_graph_options(CLI::App* cmd, GraphInput& in)
{
    cmd->add_option("--graph", in.graph_file, "graph file (edge list or graph6)");
    cmd->add_option("--named", in.named, "catalog graph, gp:N,K or l2k:K");
}

struct Budget {
    std::uint64_t nodes = 0;
    double seconds = 0;

    [[nodiscard]] SearchOptions options() const
    {
        SearchOptions so;
        so.node_budget = nodes;
        so.time_budget_seconds = seconds;
        return so;
    }
};

void add_budget_options(CLI::App* cmd, Budget& b)
{
    cmd->add_option("--node-budget", b.nodes, "search node cap (0 = none)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--time-budget", b.seconds, "search time cap in seconds (0 = none)")->check(CLI::NonNegativeNumber);
}

double millis_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void write_report(const std::string& path, const json& report)
{
    if (path.empty())
        return;
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << report.dump(2) << '\n';
}

json graph_json(const LoadedGraph& g)
{
    return {{"source", g.source},
            {"input_hash", g.hash},
            {"vertices", g.lg.graph.vertex_count()},
            {"edges", g.lg.graph.edge_count()}};
}

int index_command(const GraphInput& in, const Budget& budget, bool normal, const std::string& json_path)
{
    const LoadedGraph g = load_graph(in);
    json report = {{"command", normal ? "normal-index" : "index"}, {"graph", graph_json(g)}};
    const char* key = normal ? "chromatic_index_normal" : "chromatic_index_strong";
    const auto start = std::chrono::steady_clock::now();
    try {
        IndexResult r = normal ? normal_chromatic_index(g.lg.graph, budget.options())
                               : strong_chromatic_index(g.lg.graph, budget.options());
        report[key] = r.index;
        report["coloring"] = r.coloring;
        report["nodes"] = r.nodes;
        report["verdict"] = "FEASIBLE";
        report["millis"] = millis_since(start);
        std::cout << key << ": " << r.index << '\n';
        write_report(json_path, report);
        return kExitOk;
    } catch (const BudgetExceeded& e) {
        report[key] = nullptr;
        report["nodes"] = e.nodes();
        report["verdict"] = "UNDECIDED";
        report["millis"] = millis_since(start);
        std::cout << key << ": UNDECIDED (" << e.what() << ")\n";
        write_report(json_path, report);
        return kExitUndecided;
    }
}

int check_command(const GraphInput& in, const std::string& lists_path, const Budget& budget, bool normal,
                  const std::string& json_path)
{
    const LoadedGraph g = load_graph(in);
    if (lists_path.empty())
        throw UsageError("--lists FILE is required");
    const std::string text = read_file(lists_path);
    const ListAssignment lists = parse_list_assignment(text, g.lg.graph.edge_count());
    const auto start = std::chrono::steady_clock::now();
    SearchResult r = normal ? list_normal_colorable(g.lg.graph, lists, {}, budget.options())
                            : list_strong_colorable(g.lg.graph, lists, {}, budget.options());
    json report = {{"command", normal ? "normal-check" : "check"},
                   {"graph", graph_json(g)},
                   {"lists", {{"source", lists_path}, {"input_hash", fnv1a(text)}}},
                   {"verdict", std::string(verdict_name(r.verdict))},
                   {"search_complete", r.search_complete()},
                   {"nodes", r.nodes},
                   {"millis", millis_since(start)}};
    if (r.verdict == Verdict::feasible)
        report["coloring"] = r.coloring;
    std::cout << verdict_name(r.verdict) << '\n';
    write_report(json_path, report);
    return r.verdict == Verdict::undecided ? kExitUndecided : kExitOk;
}

int coef_command(const std::string& product_path, bool reorder, bool no_prune, bool brute, const std::string& json_path)
{
    const std::string text = read_file(product_path);
    const auto pf = nullsz::parse_product_file(text);
    nullsz::CoefficientOptions opt;
    opt.reorder = reorder;
    opt.prune = !no_prune;
    const auto c = brute ? nullsz::brute_coefficient_oracle(pf.product, pf.target)
                         : nullsz::coefficient_of_monomial(pf.product, pf.target, opt);
    std::cout << c << '\n';
    write_report(json_path, {{"command", "coef"},
                             {"product", {{"source", product_path}, {"input_hash", fnv1a(text)}}},
                             {"factors", pf.product.degree()},
                             {"coefficient", c.str()}});
    return kExitOk;
}

int ck_command(std::size_t k, bool direct, bool trace, const std::string& json_path)
{
    const auto t = nullsz::ck_chain_trace(k);
    json report = {{"command", "ck"}, {"k", k}, {"staged", t.coefficient.str()}};
    std::cout << "staged: " << t.coefficient << '\n';
    if (trace) {
        json stages = json::array();
        for (const auto& s : t.stages) {
            std::cout << "  positions";
            for (auto i : s.indices)
                std::cout << ' ' << i;
            std::cout << " (" << s.factors_used << " factors): " << s.residual.to_string(t.names) << '\n';
            stages.push_back({{"positions", s.indices}, {"residual", s.residual.to_string(t.names)}});
        }
        report["stages"] = stages;
    }
    if (direct) {
        const auto d = nullsz::coefficient_of_monomial(nullsz::cycle_conflict_polynomial(k), nullsz::cycle_target(k));
        std::cout << "direct: " << d << '\n';
        report["direct"] = d.str();
    }
    write_report(json_path, report);
    return kExitOk;
}

int certify_command(const std::string& name, const std::vector<long long>& params, const std::string& tier,
                    const Budget& budget, bool list, const std::string& json_path)
{
    if (list) {
        for (const auto& c : certify::certificates())
            std::cout << c.name << (c.params.empty() ? "" : " [" + c.params + "]") << "  (" << certify::tier_name(c.tier)
                      << ")  " << c.summary << '\n';
        return kExitOk;
    }
    if (name.empty())
        throw UsageError("certificate name required (see --list)");
    certify::CertifyOptions opt;
    opt.node_budget = budget.nodes;
    opt.time_budget_seconds = budget.seconds;
    // the fast tier caps each search unless an explicit budget is given
    if (tier == "fast" && budget.nodes == 0)
        opt.node_budget = 50'000'000;

    std::vector<std::string> names;
    if (name == "all") {
        for (const auto& c : certify::certificates())
            if (tier == "full" || c.tier == certify::Tier::fast)
                names.push_back(c.name);
    } else {
        names.push_back(name);
    }
    json reports = json::array();
    int worst = kExitOk;
    for (const auto& n : names) {
        auto r = certify::run_certificate(n, name == "all" ? std::vector<long long>{} : params, opt);
        std::cout << r.name << ": " << cert_verdict_name(r.verdict) << " (" << r.nodes << " nodes, " << r.millis
                  << " ms)\n";
        for (const auto& c : r.checks)
            std::cout << "  [" << (c.passed ? "ok" : c.complete ? "FAIL" : "budget") << "] " << c.name
                      << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
        if (r.verdict == certify::CertVerdict::undecided)
            worst = kExitUndecided;
        json j = r.to_json();
        j["tier"] = tier;
        reports.push_back(j);
    }
    write_report(json_path, names.size() == 1 ? reports[0] : reports);
    return worst;
}

int catalog_command(const std::string& name, bool dot, const std::string& out_dir)
{
    if (name.empty()) {
        for (const auto& n : catalog_names())
            std::cout << n << '\n';
        return kExitOk;
    }
    const LabeledGraph lg = resolve_named(name);
    std::vector<std::string> labels;
    for (EdgeId e = 0; e < lg.graph.edge_count(); ++e) {
        const Edge& ed = lg.graph.edge(e);
        labels.push_back(lg.vertex_labels[ed.u] + lg.vertex_labels[ed.v] + " " + std::string(role_name(lg.roles[e])));
    }
    std::string roles;
    for (EdgeId e = 0; e < lg.graph.edge_count(); ++e)
        roles += std::to_string(e) + " " + std::string(role_name(lg.roles[e])) + "\n";
    const std::string body = dot ? write_dot(lg.graph, lg.name, labels) : write_edge_list(lg.graph);
    if (out_dir.empty()) {
        std::cout << body;
        if (!dot)
            std::cout << "# roles\n" << [&] {
                std::string commented;
                std::istringstream in(roles);
                for (std::string line; std::getline(in, line);)
                    commented += "# " + line + "\n";
                return commented;
            }();
        return kExitOk;
    }
    std::filesystem::create_directories(out_dir);
    const auto base = std::filesystem::path(out_dir) / lg.name;
    std::ofstream(base.string() + (dot ? ".dot" : ".txt")) << body;
    std::ofstream(base.string() + ".roles") << roles;
    std::cout << "wrote " << base.string() << (dot ? ".dot" : ".txt") << " and " << base.string() << ".roles\n";
    return kExitOk;
}

int conflict_command(const GraphInput& in, const std::string& json_path)
{
    const LoadedGraph g = load_graph(in);
    const ConflictGraph cg = strong_conflict_graph(g.lg.graph);
    json report = {{"command", "conflict"}, {"graph", graph_json(g)}, {"nodes", cg.node_count()}, {"pairs", cg.pair_count()}};
    std::cout << "nodes: " << cg.node_count() << "\npairs: " << cg.pair_count() << '\n';
    if (cg.node_count() <= 64) {
        auto w = max_clique_size(cg);
        report["max_clique"] = w;
        std::cout << "max clique: " << w << '\n';
    }
    if (cg.parts) {
        report["parts"] = *cg.parts;
        std::cout << "complete multipartite with " << cg.parts->size() << " parts\n";
    } else {
        report["parts"] = nullptr;
    }
    write_report(json_path, report);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Strong and normal list edge-coloring toolkit"};
    app.require_subcommand(1);

    GraphInput graph_in;
    Budget budget;
    std::string json_path, lists_path, product_path, name, tier = "fast", out_dir;
    std::vector<long long> params;
    std::size_t k = 7;
    bool reorder = false, no_prune = false, brute = false, direct = false, trace = false, list = false, dot = false;

    auto* index = app.add_subcommand("index", "strong chromatic index");
    auto* normal_index = app.add_subcommand("normal-index", "normal chromatic index (cubic graphs)");
    auto* check = app.add_subcommand("check", "list strong edge-colorability");
    auto* normal_check = app.add_subcommand("normal-check", "list normal edge-colorability (cubic graphs)");
    for (auto* cmd : {index, normal_index, check, normal_check}) {
        add_graph_options(cmd, graph_in);
        add_budget_options(cmd, budget);
        cmd->add_option("--json", json_path, "write a JSON report");
    }
    for (auto* cmd : {check, normal_check})
        cmd->add_option("--lists", lists_path, "list assignment file")->required();

    auto* coef = app.add_subcommand("coef", "coefficient of a monomial in a product of differences");
    coef->add_option("--product", product_path, "product file")->required();
    coef->add_flag("--reorder", reorder, "greedy factor order");
    coef->add_flag("--no-prune", no_prune, "keep every monomial");
    coef->add_flag("--brute", brute, "sign-subset enumeration instead");
    coef->add_option("--json", json_path, "write a JSON report");

    auto* ck = app.add_subcommand("ck", "staged k-cycle coefficient");
    ck->add_option("k", k, "cycle length (>= 7)")->required();
    ck->add_flag("--direct", direct, "also expand the full product");
    ck->add_flag("--trace", trace, "print every stage residual");
    ck->add_option("--json", json_path, "write a JSON report");

    auto* cert = app.add_subcommand("certify", "run a named certificate (or 'all')");
    cert->add_option("name", name, "certificate name");
    cert->add_option("params", params, "integer parameters");
    cert->add_option("--tier", tier, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    cert->add_flag("--list", list, "list certificates");
    add_budget_options(cert, budget);
    cert->add_option("--json", json_path, "write a JSON report");

    auto* cat = app.add_subcommand("catalog", "list or export catalog graphs");
    cat->add_option("name", name, "graph name (catalog name, gp:N,K, l2k:K)");
    cat->add_flag("--dot", dot, "DOT output");
    cat->add_option("--out-dir", out_dir, "write NAME.txt (or .dot) and NAME.roles here");

    auto* conflict = app.add_subcommand("conflict", "strong conflict graph summary");
    add_graph_options(conflict, graph_in);
    conflict->add_option("--json", json_path, "write a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*index)
            return index_command(graph_in, budget, false, json_path);
        if (*normal_index)
            return index_command(graph_in, budget, true, json_path);
        if (*check)
            return check_command(graph_in, lists_path, budget, false, json_path);
        if (*normal_check)
            return check_command(graph_in, lists_path, budget, true, json_path);
        if (*coef)
            return coef_command(product_path, reorder, no_prune, brute, json_path);
        if (*ck)
            return ck_command(k, direct, trace, json_path);
        if (*cert)
            return certify_command(name, params, tier, budget, list, json_path);
        if (*cat)
            return catalog_command(name, dot, out_dir);
        if (*conflict)
            return conflict_command(graph_in, json_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
