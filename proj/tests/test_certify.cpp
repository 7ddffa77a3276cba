#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "slec/catalog.hpp"
#include "slec/certify.hpp"
#include "slec/solver.hpp"

using namespace slec;
using namespace slec::certify;

namespace {

Graph k4()
{
    return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("covering projections")
{
    const Graph p = named_graph("petersen").graph;
    auto id = covering_projection(p, p);
    REQUIRE(id.has_value());
    CHECK(is_covering_projection(p, p, *id));

    auto gp = covering_projection(named_graph("gp10_3").graph, p);
    REQUIRE(gp.has_value());
    CHECK(is_covering_projection(named_graph("gp10_3").graph, p, *gp));
    auto dd = covering_projection(named_graph("dodecahedron").graph, p);
    REQUIRE(dd.has_value());
    CHECK(is_covering_projection(named_graph("dodecahedron").graph, p, *dd));

    CHECK_FALSE(covering_projection(k4(), p).has_value());
    // right size, wrong graph: the 20-vertex GP(10,1) prism has 4-cycles and cannot cover Petersen
    CHECK_FALSE(covering_projection(generalized_petersen(10, 1).graph, p).has_value());
    CHECK_THROWS_AS(covering_projection(build_graph(4, {{0, 1}, {2, 3}}), k4()), GraphError);

    CoveringProjection bad = *id;
    std::swap(bad.vertex_map[0], bad.vertex_map[1]);
    CHECK_FALSE(is_covering_projection(p, p, bad));
}

TEST_CASE("list constructions")
{
    LabeledGraph p = named_graph("petersen");
    ListAssignment low = petersen_lower_lists(p);
    for (EdgeId e = 0; e < 15; ++e)
        CHECK(low.at(e).size() == 6);
    CHECK(low.palette() == color_range(1, 9));

    ListAssignment d = disjoint_special_lists(5, 7, {3, 1});
    CHECK(d.at(0) == color_range(1, 7));
    CHECK(d.at(3) == color_range(8, 14));
    CHECK(d.at(1) == color_range(15, 21));

    LabeledGraph n8 = named_graph("nor8");
    auto sp = special_edges(n8);
    REQUIRE(sp.size() == 3);
    CHECK(sp[0] == n8.edge_between("v3", "v6"));
    CHECK(sp[1] == n8.edge_between("v5", "u5"));
    CHECK(sp[2] == n8.edge_between("u4", "u5"));

    ListAssignment five = five_lists(named_graph("dodecahedron"));
    CHECK(five.palette() == color_range(1, 6));
}

TEST_CASE("counting bound and Hall helpers")
{
    LabeledGraph p = named_graph("petersen");
    ConflictGraph cg = strong_conflict_graph(p.graph);
    REQUIRE(cg.parts.has_value());
    CHECK(multipartite_color_lower_bound(*cg.parts, petersen_lower_lists(p)) == 10);
    CHECK(multipartite_color_lower_bound(*cg.parts, ListAssignment::uniform(15, 5)) == 5);

    auto fam = hall_profile(3, 6);
    CHECK(fam.size() == 9);
    CHECK_FALSE(hall_violation(fam).has_value());
    auto bad = hall_violation({{1}, {1}, {1, 2, 3}});
    REQUIRE(bad.has_value());
    CHECK(bad->size() >= 2);
    // disjoint 7-sets
    std::vector<ColorSet> seven;
    for (int i = 0; i < 3; ++i)
        seven.push_back(color_range(7 * i + 1, 7 * i + 7));
    CHECK_FALSE(hall_violation(seven).has_value());
}

TEST_CASE("Petersen case coefficients")
{
    auto poly = petersen_residual_polynomial();
    CHECK(poly.degree() == 27);
    std::vector<long long> expected;
    for (const auto& c : petersen_case_coefficients()) {
        CHECK(nullsz::coefficient_of_monomial(poly, poly.exponents(c.monomial)) == c.expected);
        expected.push_back(c.expected);
    }
    CHECK(expected == std::vector<long long>{94, -14, -6, 60, 33, 36});
}

TEST_CASE("every certificate is confirmed")
{
    for (const auto& info : certificates()) {
        CAPTURE(info.name);
        CertificateReport r = run_certificate(info.name);
        CHECK(r.verdict == CertVerdict::confirmed);
        CHECK(!r.checks.empty());
        for (const auto& c : r.checks) {
            CAPTURE(c.name);
            CHECK(c.passed);
            CHECK(c.complete);
        }
    }
}

TEST_CASE("certificate witnesses")
{
    CHECK(run_certificate("c6_coef").witness["coefficient"] == -2);
    for (long long k = 7; k <= 12; ++k) {
        CAPTURE(k);
        auto r = run_certificate("ck_coef", {k});
        CHECK(r.verdict == CertVerdict::confirmed);
        CHECK(r.witness["staged"] == (k % 2 ? -1 : 1));
        if (k <= 9)
            CHECK(r.witness["direct"] == r.witness["staged"]);
    }
    auto lower = run_certificate("petersen_lower");
    CHECK(lower.witness["search_complete"] == true);
    CHECK(lower.witness["colors_needed"] == 10);
    CHECK(lower.witness["colors_available"] == 9);

    auto variant = run_certificate("thm4", {1, 3});
    CHECK(variant.verdict == CertVerdict::confirmed);
    CHECK(variant.witness["vertices"] == 30);

    CHECK(run_certificate("nor7", {6}).verdict == CertVerdict::confirmed);
    CHECK_THROWS_AS(run_certificate("nor7", {4}), std::invalid_argument);
    CHECK_THROWS_AS(run_certificate("ck_coef", {6}), std::invalid_argument);
    CHECK_THROWS_AS(run_certificate("no_such_certificate"), std::invalid_argument);
}

TEST_CASE("budgets give undecided, never a false verdict")
{
    CertifyOptions tiny;
    tiny.node_budget = 5;
    auto r = run_certificate("nor8", {}, tiny);
    CHECK(r.verdict == CertVerdict::undecided);
    CHECK(std::any_of(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return !c.complete; }));
    CHECK(std::none_of(r.checks.begin(), r.checks.end(),
                       [](const CheckResult& c) { return c.complete && !c.passed; }));
}

TEST_CASE("certificates are idempotent and order independent")
{
    std::vector<std::string> names;
    for (const auto& info : certificates())
        names.push_back(info.name);
    std::vector<std::string> forward, backward;
    for (const auto& n : names)
        forward.push_back(run_certificate(n).to_json(false).dump());
    for (auto it = names.rbegin(); it != names.rend(); ++it)
        backward.push_back(run_certificate(*it).to_json(false).dump());
    std::reverse(backward.begin(), backward.end());
    CHECK(forward == backward);
}
