// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "slec/catalog.hpp"
#include "slec/certify.hpp"
#include "slec/graph.hpp"
#include "slec/nullsz.hpp"
#include "slec/solver.hpp"

#include "oracles.hpp"

using namespace slec;
using namespace slec::testing;

namespace {

// Collects failed sub-checks for one criterion.
struct Criterion {
    std::ostringstream failures;
    int failed = 0;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            ++failed;
            failures << "    failed: " << what << '\n';
        }
    }

    void certificate(const std::string& name, const std::vector<long long>& params = {},
                     const certify::CertifyOptions& options = {})
    {
        auto r = certify::run_certificate(name, params, options);
        expect(r.verdict == certify::CertVerdict::confirmed,
               name + " verdict " + std::string(certify::cert_verdict_name(r.verdict)));
        for (const auto& c : r.checks)
            expect(c.passed && c.complete, name + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
};

bool naive_feasible(const Graph& g, ColoringMode mode, const ListAssignment& lists)
{
    PartialColoring none(g.edge_count());
    NaiveOracle oracle(g, mode, lists, none);
    return oracle.feasible();
}

void criterion1(Criterion& c)
{
    auto c6 = nullsz::coefficient_of_monomial(nullsz::six_cycle_polynomial(), nullsz::six_cycle_target());
    c.expect(c6 == -2, "C6 coefficient is " + c6.str());
    c.certificate("c6_coef");
    for (long long k = 7; k <= 12; ++k) {
        const int expected = k % 2 ? -1 : 1;
        auto staged = nullsz::ck_chain_coefficient(static_cast<std::size_t>(k));
        c.expect(staged == expected, "staged k=" + std::to_string(k) + " gives " + staged.str());
        if (k <= 9) {
            auto direct = nullsz::coefficient_of_monomial(nullsz::cycle_conflict_polynomial(k), nullsz::cycle_target(k));
            c.expect(direct == staged, "direct k=" + std::to_string(k) + " gives " + direct.str());
        }
        c.certificate("ck_coef", {k});
    }
}

void criterion2(Criterion& c)
{
    auto poly = certify::petersen_residual_polynomial();
    const long long expected[] = {94, -14, -6, 60, 33, 36};
    const auto& cases = certify::petersen_case_coefficients();
    c.expect(cases.size() == 6, "six cases");
    for (std::size_t i = 0; i < cases.size() && i < 6; ++i) {
        auto v = nullsz::coefficient_of_monomial(poly, poly.exponents(cases[i].monomial));
        c.expect(v == expected[i], cases[i].label + " gives " + v.str());
    }
    c.certificate("petersen_upper_cases");
}

void criterion3(Criterion& c)
{
    const std::pair<const char*, std::size_t> targets[] = {
        {"petersen", 5}, {"wagner", 10}, {"k33_subdivided", 10}, {"gp10_3", 5}, {"dodecahedron", 5}, {"k4", 6}};
    for (auto [name, want] : targets) {
        Graph g = named_graph(name).graph;
        IndexResult r = strong_chromatic_index(g);
        c.expect(r.index == want, std::string(name) + " index " + std::to_string(r.index));
        c.expect(is_strong_edge_coloring(g, r.coloring), std::string(name) + " witness is strong");
    }
    Graph k4 = named_graph("k4").graph;
    c.expect(naive_feasible(k4, ColoringMode::strong, ListAssignment::uniform(6, 6)), "K4 brute: 6 colors suffice");
    c.expect(!naive_feasible(k4, ColoringMode::strong, ListAssignment::uniform(6, 5)), "K4 brute: 5 colors fail");
    c.certificate("wagner_strong10");
    c.certificate("k33s_strong10");
}

void criterion4(Criterion& c)
{
    LabeledGraph p = named_graph("petersen");
    ListAssignment lists = certify::petersen_lower_lists(p);
    SearchResult r = list_strong_colorable(p.graph, lists);
    c.expect(r.verdict == Verdict::infeasible && r.search_complete(), "search verdict");
    c.expect(!naive_feasible(p.graph, ColoringMode::strong, lists), "naive enumeration verdict");
    ConflictGraph cg = strong_conflict_graph(p.graph);
    c.expect(cg.parts.has_value(), "complete 5-partite conflict graph");
    if (cg.parts) {
        std::size_t need = certify::multipartite_color_lower_bound(*cg.parts, lists);
        c.expect(need == 10 && lists.palette().size() == 9, "counting bound " + std::to_string(need) + " vs 9");
    }
    c.certificate("petersen_lower");
}

void criterion5(Criterion& c)
{
    LabeledGraph p = named_graph("petersen");
    LabeledGraph g = glue_thm4(p.graph, 0);
    c.expect(g.graph.vertex_count() == 20 && g.graph.is_cubic(), "20-vertex cubic");
    c.expect(strong_chromatic_index(g.graph).index == 5, "strong index 5");
    auto proj = certify::covering_projection(g.graph, p.graph);
    c.expect(proj && certify::is_covering_projection(g.graph, p.graph, *proj), "covers Petersen");
    c.certificate("thm4", {0, 0});
}

void criterion6(Criterion& c)
{
    c.certificate("fig4_dodecahedron");
    c.certificate("fig4_gp103");
}

void criterion7(Criterion& c)
{
    c.certificate("nor8");
    c.certificate("nor7", {5});
    c.expect(cyclic_edge_connectivity(l2k(5).graph) == 4, "l2k(5) cyclic edge connectivity 4");
    c.certificate("nor9");
    c.certificate("fig10_wagner");
    c.certificate("fig10_k33t");
}

void criterion8(Criterion& c)
{
    const std::pair<std::string, Graph> graphs[] = {{"k4", named_graph("k4").graph},
                                                    {"k33", named_graph("k33").graph},
                                                    {"nor8", named_graph("nor8").graph},
                                                    {"l2k(5)", l2k(5).graph}};
    for (const auto& [name, g] : graphs) {
        IndexResult r = normal_chromatic_index(g);
        c.expect(r.index == 3, name + " normal index " + std::to_string(r.index));
        c.expect(is_normal_edge_coloring(g, r.coloring), name + " witness is normal");
    }
}

void criterion9(Criterion& c)
{
    // solver against the naive enumerator
    std::mt19937 rng(9001);
    int instances = 0, mismatches = 0;
    for (int t = 0; t < 600; ++t) {
        const bool normal = t % 3 == 2;
        Graph g = normal ? random_cubic(rng, t % 2 ? 6 : 8)
                         : random_subcubic(rng, std::uniform_int_distribution<std::size_t>(4, 9)(rng), 12);
        if (g.edge_count() == 0 || g.edge_count() > 12)
            continue;
        ColoringMode mode = normal ? ColoringMode::normal : ColoringMode::strong;
        int palette = std::uniform_int_distribution<int>(normal ? 3 : 2, 6)(rng);
        ListAssignment lists = random_lists(rng, g.edge_count(), palette, normal ? 2 : 1, palette);
        PartialColoring pre = t % 4 == 0 ? random_precoloring(rng, g, normal ? ColoringMode::proper : mode, lists)
                                         : PartialColoring(g.edge_count());
        NaiveOracle oracle(g, mode, lists, pre);
        bool expected = oracle.feasible();
        SearchResult r = list_colorable(g, mode, lists, pre);
        bool got = r.verdict == Verdict::feasible;
        if (!r.search_complete() || got != expected)
            ++mismatches;
        ++instances;
    }
    c.expect(instances >= 500, "at least 500 solver instances (" + std::to_string(instances) + ")");
    c.expect(mismatches == 0, std::to_string(mismatches) + " solver mismatches");

    // coefficient dynamic program against the sign-subset enumeration
    int coef_mismatches = 0;
    for (int t = 0; t < 10000; ++t) {
        auto p = random_product(rng, std::uniform_int_distribution<std::size_t>(2, 7)(rng),
                                std::uniform_int_distribution<std::size_t>(1, 20)(rng));
        auto target = random_target(rng, p);
        coef_mismatches += nullsz::coefficient_of_monomial(p, target) != nullsz::brute_coefficient_oracle(p, target);
    }
    c.expect(coef_mismatches == 0, std::to_string(coef_mismatches) + " coefficient mismatches");

    // Hall extension against brute-force representatives
    Graph k4 = named_graph("k4").graph;
    int hall_mismatches = 0;
    for (int t = 0; t < 1000; ++t) {
        ListAssignment lists = random_lists(rng, 6, 7, 1, 5);
        PartialColoring partial = random_precoloring(rng, k4, ColoringMode::strong, lists);
        std::vector<EdgeId> x;
        std::vector<ColorSet> family;
        for (EdgeId e = 0; e < 6; ++e)
            if (!partial.is_colored(e)) {
                x.push_back(e);
                family.push_back(available_colors(k4, partial, lists, e));
            }
        HallResult h = hall_extend(k4, partial, lists, x);
        hall_mismatches += h.extension.has_value() != brute_sdr_exists(family);
    }
    c.expect(hall_mismatches == 0, std::to_string(hall_mismatches) + " Hall mismatches");

    // enlarging lists never turns a feasible instance infeasible
    int violations = 0, feasible = 0;
    for (int t = 0; t < 400; ++t) {
        Graph g = random_subcubic(rng, 8, 11);
        if (g.edge_count() == 0)
            continue;
        ListAssignment lists = random_lists(rng, g.edge_count(), 7, 2, 5);
        if (list_strong_colorable(g, lists).verdict != Verdict::feasible)
            continue;
        ++feasible;
        ListAssignment bigger = lists;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            ColorSet l = lists.at(e);
            l.push_back(std::uniform_int_distribution<Color>(1, 12)(rng));
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
            bigger.set(e, l);
        }
        violations += list_strong_colorable(g, bigger).verdict != Verdict::feasible;
    }
    c.expect(feasible > 0, "monotonicity suite found feasible instances");
    c.expect(violations == 0, std::to_string(violations) + " monotonicity violations");
}

void criterion10(Criterion& c)
{
    std::mt19937 rng(1010);
    SearchOptions opt;
    opt.node_budget = 10'000'000;
    for (const auto& name : catalog_names()) {
        Graph g = named_graph(name).graph;
        int infeasible = 0, undecided = 0;
        for (int t = 0; t < 200; ++t) {
            ListAssignment lists = random_lists(rng, g.edge_count(), 20, 10, 10);
            SearchResult r = list_strong_colorable(g, lists, {}, opt);
            infeasible += r.verdict == Verdict::infeasible;
            undecided += r.verdict == Verdict::undecided;
            if (r.verdict == Verdict::feasible && !(is_strong_edge_coloring(g, r.coloring) && respects_lists(r.coloring, lists)))
                c.expect(false, name + ": invalid witness");
        }
        c.expect(infeasible == 0 && undecided == 0,
                 name + ": " + std::to_string(infeasible) + " infeasible, " + std::to_string(undecided) + " undecided");
    }
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"Nullstellensatz kernel: C6 = -2, C_k = (-1)^k for k = 7..12, direct for 7..9", criterion1},
        {"Petersen upper-bound coefficients 94, -14, -6, 60, 33, 36", criterion2},
        {"strong indices: Petersen 5, Wagner 10, K33 subdivided 10, GP(10,3) 5, dodecahedron 5, K4 6", criterion3},
        {"Petersen lower bound: 6-lists infeasible, counting bound 10 > 9", criterion4},
        {"glued Petersen instance: index 5, covers Petersen, 5-lists infeasible, C_a/C_b/C_c covers", criterion5},
        {"dodecahedron and GP(10,3) 5-lists infeasible", criterion6},
        {"normal lower bounds: nor8, l2k(5), both H_I hosts, Wagner and truncated K33", criterion7},
        {"class I: normal index 3 for K4, K33, nor8, l2k(5)", criterion8},
        {"property suites: solver, coefficients, Hall, monotonicity", criterion9},
        {"random 10-lists from 20 colors are strongly colorable on every catalog graph", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2zu: %s  %s (%.2f s)\n", i + 1, c.failed ? "FAIL" : "PASS", criteria[i].first.c_str(),
                    secs);
        std::cout << c.failures.str() << std::flush;
        failed += c.failed != 0;
    }
    return failed ? 1 : 0;
}
