#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "slec/catalog.hpp"
#include "slec/graph.hpp"
#include "slec/nullsz.hpp"

#include "oracles.hpp"

using namespace slec;
using namespace slec::nullsz;
using slec::testing::random_product;
using slec::testing::random_target;

namespace {

BigInt binomial(unsigned n, unsigned k)
{
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

SparsePoly::Monomial mono(std::initializer_list<std::pair<VarId, unsigned>> m)
{
    return SparsePoly::Monomial(m);
}

}  // namespace

TEST_CASE("small coefficients")
{
    FactorProduct one({"x", "y"});
    one.add_factor("x", "y");
    CHECK(coefficient_of_monomial(one, {1, 0}) == 1);
    CHECK(coefficient_of_monomial(one, {0, 1}) == -1);
    CHECK(brute_coefficient_oracle(one, {1, 0}) == 1);

    FactorProduct two({"x", "y", "z"});
    two.add_factor("x", "y");
    two.add_factor("x", "z");
    CHECK(coefficient_of_monomial(two, {1, 1, 0}) == -1);
    CHECK(coefficient_of_monomial(two, {2, 0, 0}) == 1);
    CHECK(coefficient_of_monomial(two, {0, 1, 1}) == 1);

    FactorProduct tri({"x", "y", "z"});
    tri.add_factor("x", "y");
    tri.add_factor("y", "z");
    tri.add_factor("x", "z");
    CHECK(brute_coefficient_oracle(tri, {1, 1, 1}) == 0);
    CHECK(coefficient_of_monomial(tri, {1, 1, 1}) == 0);

    CHECK_THROWS_AS(coefficient_of_monomial(two, {1, 0, 0}), NullszError);
    CHECK_THROWS_AS(coefficient_of_monomial(two, {1, 1}), NullszError);
    CHECK_THROWS_AS(two.add_factor("x", "x"), NullszError);
    CHECK_THROWS_AS(two.add_factor("x", "w"), NullszError);
}

TEST_CASE("coefficients beyond 64 bits are exact")
{
    FactorProduct p({"x", "y"});
    for (int i = 0; i < 70; ++i)
        p.add_factor("x", "y");
    // (x - y)^70: coefficient of x^35 y^35 is -C(70,35), about 1.1e20
    CHECK(coefficient_of_monomial(p, {35, 35}) == -binomial(70, 35));
    CHECK(coefficient_of_monomial(p, {35, 35}, {.prune = false, .reorder = false}) == -binomial(70, 35));
    CHECK(coefficient_of_monomial(p, {70, 0}) == 1);
}

TEST_CASE("dynamic program agrees with the sign-subset oracle")
{
    std::mt19937 rng(12345);
    int nonzero = 0;
    for (int t = 0; t < 10000; ++t) {
        std::size_t vars = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
        std::size_t factors = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
        FactorProduct p = random_product(rng, vars, factors);
        ExponentVector target = random_target(rng, p);
        BigInt fast = coefficient_of_monomial(p, target);
        BigInt slow = brute_coefficient_oracle(p, target);
        CAPTURE(t);
        REQUIRE(fast == slow);
        nonzero += fast != 0;
    }
    CHECK(nonzero > 1000);
}

TEST_CASE("twelve-factor products against many targets")
{
    std::mt19937 rng(77);
    FactorProduct p = random_product(rng, 6, 12);
    for (int t = 0; t < 1000; ++t) {
        ExponentVector target = random_target(rng, p);
        REQUIRE(coefficient_of_monomial(p, target) == brute_coefficient_oracle(p, target));
    }
}

TEST_CASE("pruning and reordering do not change coefficients")
{
    std::mt19937 rng(4);
    for (int t = 0; t < 2000; ++t) {
        FactorProduct p = random_product(rng, std::uniform_int_distribution<std::size_t>(2, 6)(rng),
                                         std::uniform_int_distribution<std::size_t>(1, 14)(rng));
        ExponentVector target = random_target(rng, p);
        BigInt base = coefficient_of_monomial(p, target, {.prune = true, .reorder = false});
        CHECK(coefficient_of_monomial(p, target, {.prune = false, .reorder = false}) == base);
        CHECK(coefficient_of_monomial(p, target, {.prune = true, .reorder = true}) == base);
        CHECK(coefficient_of_monomial(p, target, {.prune = false, .reorder = true}) == base);
    }
}

TEST_CASE("flipping one factor negates every coefficient")
{
    std::mt19937 rng(8);
    for (int t = 0; t < 500; ++t) {
        FactorProduct p = random_product(rng, 5, std::uniform_int_distribution<std::size_t>(1, 12)(rng));
        std::size_t flip = std::uniform_int_distribution<std::size_t>(0, p.degree() - 1)(rng);
        FactorProduct q(p.variables());
        for (std::size_t i = 0; i < p.degree(); ++i) {
            const Factor& f = p.factors()[i];
            if (i == flip)
                q.add_factor(f.minus, f.plus);
            else
                q.add_factor(f.plus, f.minus);
        }
        ExponentVector target = random_target(rng, p);
        CHECK(coefficient_of_monomial(q, target) == -coefficient_of_monomial(p, target));
    }
}

TEST_CASE("full expansion is homogeneous and evaluates like the product")
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> val(-9, 9);
    for (int t = 0; t < 200; ++t) {
        FactorProduct p = random_product(rng, 4, std::uniform_int_distribution<std::size_t>(1, 12)(rng));
        SparsePoly full = expand(p);
        for (const auto& [m, c] : full.terms()) {
            unsigned degree = 0;
            ExponentVector target(4, 0);
            for (auto [v, e] : m) {
                degree += e;
                target[v] = e;
            }
            CHECK(degree == p.degree());
            CHECK(coefficient_of_monomial(p, target) == c);
            CHECK(coefficient_of_monomial(p, target, {.prune = false, .reorder = false}) == c);
        }
        for (int s = 0; s < 5; ++s) {
            std::vector<BigInt> point;
            for (int i = 0; i < 4; ++i)
                point.push_back(val(rng));
            CHECK(full.evaluate(point) == p.evaluate(point));
        }
    }
}

TEST_CASE("sparse polynomial arithmetic")
{
    // (x0 + x1) * (x0 - x1) = x0^2 - x1^2
    SparsePoly a = SparsePoly::from_terms({{1, mono({{0, 1}})}, {1, mono({{1, 1}})}});
    SparsePoly b = SparsePoly::constant(1).times_factor({0, 1});
    SparsePoly prod = a * b;
    CHECK(prod == SparsePoly::from_terms({{1, mono({{0, 2}})}, {-1, mono({{1, 2}})}}));
    CHECK(prod.to_string({"x", "y"}) == "x^2 - y^2");
    CHECK((prod + -prod).is_zero());
    CHECK(prod.coefficient_of({{0, 2}}) == SparsePoly::constant(1));
    CHECK(prod.coefficient_of({{1, 2}, {0, 0}}) == SparsePoly::constant(-1));
    CHECK(prod.evaluate({3, 2}) == 5);
}

TEST_CASE("conflict polynomials")
{
    ConflictGraph two = strong_conflict_graph(build_graph(3, {{0, 1}, {1, 2}}));
    CHECK(build_strong_conflict_polynomial(two, {0, 1}).degree() == 1);
    CHECK_THROWS_AS(build_strong_conflict_polynomial(two, {0}), NullszError);
    CHECK_THROWS_AS(build_strong_conflict_polynomial(two, {0, 0}), NullszError);

    ConflictGraph petersen = strong_conflict_graph(named_graph("petersen").graph);
    std::vector<EdgeId> order;
    for (EdgeId e = 0; e < 15; ++e)
        order.push_back(e);
    FactorProduct pp = build_strong_conflict_polynomial(petersen, order);
    CHECK(pp.degree() == 90);
    // every factor joins two different parts of the five-part structure
    REQUIRE(petersen.parts.has_value());
    std::vector<std::size_t> part_of(15);
    for (std::size_t i = 0; i < petersen.parts->size(); ++i)
        for (EdgeId e : (*petersen.parts)[i])
            part_of[e] = i;
    for (const Factor& f : pp.factors())
        CHECK(part_of[f.plus] != part_of[f.minus]);
}

TEST_CASE("six-cycle configuration")
{
    FactorProduct p = six_cycle_polynomial();
    ExponentVector t = six_cycle_target();
    CHECK(p.variables().size() == 11);
    CHECK(p.degree() == 38);
    unsigned total = 0;
    for (unsigned e : t)
        total += e;
    CHECK(total == 38);
    CHECK(t == p.exponents({{"x0", 4}, {"x1", 4}, {"x2", 5}, {"x3", 5}, {"x4", 4}, {"x5", 4},
                            {"y1", 2}, {"y2", 3}, {"y3", 2}, {"y4", 3}, {"y5", 2}}));
    CHECK(coefficient_of_monomial(p, t) == -2);
    CHECK(coefficient_of_monomial(p, t, {.prune = true, .reorder = true}) == -2);
}

TEST_CASE("cycle chain: staged and direct")
{
    for (std::size_t k = 7; k <= 12; ++k) {
        CAPTURE(k);
        BigInt expected = k % 2 ? -1 : 1;
        CHECK(ck_chain_coefficient(k) == expected);
        FactorProduct p = cycle_conflict_polynomial(k);
        CHECK(p.degree() == 7 * k);
        CHECK(coefficient_of_monomial(p, cycle_target(k)) == expected);
    }
    CHECK(ck_chain_coefficient(40) == 1);
    CHECK(ck_chain_coefficient(101) == -1);
    CHECK_THROWS_AS(ck_chain_coefficient(6), NullszError);
}

TEST_CASE("cycle chain intermediate residuals")
{
    for (std::size_t k : {7, 8, 9, 10, 13}) {
        CAPTURE(k);
        ChainTrace t = ck_chain_trace(k);
        const auto& n = t.names;
        auto var = [&](const std::string& s) {
            return static_cast<VarId>(std::find(n.begin(), n.end(), s) - n.begin());
        };
        const VarId x0 = var("x0"), x5 = var("x5"), y1 = var("y1"), y5 = var("y5"), x1 = var("x1");
        REQUIRE(t.stages.size() == k - 3);

        // after positions 2, 3, 4
        std::vector<std::pair<BigInt, SparsePoly::Monomial>> first = {
            {1, {{x0, 2}, {x5, 2}, {y1, 2}}},        {2, {{x0, 2}, {x5, 1}, {y1, 2}, {y5, 1}}},
            {-1, {{x0, 2}, {x5, 2}, {y5, 2}}},       {-2, {{x0, 1}, {x5, 2}, {y1, 1}, {y5, 2}}},
            {1, {{x0, 2}, {y1, 2}, {y5, 2}}},        {-1, {{x5, 2}, {y1, 2}, {y5, 2}}},
        };
        for (auto& [c, m] : first)
            std::sort(m.begin(), m.end());
        CHECK(t.stages[0].indices == std::vector<std::size_t>{2, 3, 4});
        CHECK(t.stages[0].residual == SparsePoly::from_terms(first));

        // after positions 5, 6 and then each single position i: (-1)^i x0^2 y1^2 (x_{i+1} + y_{i+1})
        for (std::size_t s = 1; s + 2 < t.stages.size(); ++s) {
            std::size_t i = t.stages[s].indices.back();
            std::size_t nxt = (i + 1) % k;
            BigInt sign = i % 2 ? -1 : 1;
            SparsePoly::Monomial a{{x0, 2}, {var("x" + std::to_string(nxt)), 1}, {y1, 2}};
            SparsePoly::Monomial b{{x0, 2}, {y1, 2}, {var("y" + std::to_string(nxt)), 1}};
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (nxt == 0) {
                a = {{x0, 3}, {y1, 2}};
                b = {{x0, 2}, {y1, 2}, {var("y0"), 1}};
                std::sort(b.begin(), b.end());
            }
            CHECK(t.stages[s].residual == SparsePoly::from_terms({{sign, a}, {sign, b}}));
        }

        // after position 0: (-1)^k (x1^2 y1^2 - y1^4)
        const ChainStage& zero = t.stages[t.stages.size() - 2];
        CHECK(zero.indices == std::vector<std::size_t>{0});
        BigInt sign = k % 2 ? -1 : 1;
        SparsePoly::Monomial m1{{x1, 2}, {y1, 2}};
        std::sort(m1.begin(), m1.end());
        CHECK(zero.residual == SparsePoly::from_terms({{sign, m1}, {-sign, {{y1, 4}}}}));
        CHECK(t.stages.back().residual == SparsePoly::constant(sign));
    }
}
