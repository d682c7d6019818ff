#include <doctest.h>

#include "silt/builtins.hpp"
#include "silt/explorer.hpp"

using namespace silt;

TEST_CASE("single vertex") {
    auto eq = explore(FiniteDimAlgebra::build(hereditary_reduction(1)));
    CHECK(eq.complete);
    CHECK(eq.nodes.size() == 2);
    CHECK(eq.edges.size() == 1);
    CHECK(hasse_check(eq));
}

TEST_CASE("triangular A2 matches the figure") {
    auto a = FiniteDimAlgebra::build(triangular_example_reduction());
    auto eq = explore(a);
    REQUIRE(eq.complete);
    CHECK(eq.nodes.size() == 5);
    CHECK(eq.edges.size() == 5);
    CHECK(hasse_check(eq));
    auto leq = poset_relations(eq);
    std::size_t truths = 0;
    for (auto& r : leq)
        for (bool b : r) truths += b;
    CHECK(truths == 13);
    // out-degree of Lambda is the number of vertices
    std::size_t out0 = 0;
    for (auto& e : eq.edges) out0 += e.from == 0;
    CHECK(out0 == 2);

    auto broken = eq;
    std::size_t sink = 0;
    for (std::size_t i = 0; i < eq.nodes.size(); ++i)
        if (eq.nodes[i].summands.empty()) sink = i;
    broken.edges.push_back({0, sink, 0});
    CHECK_FALSE(hasse_check(broken));
}

TEST_CASE("limits give partial results") {
    auto a = FiniteDimAlgebra::build(hereditary_reduction(3));
    auto part = explore(a, {5, 100});
    CHECK_FALSE(part.complete);
    CHECK(part.nodes.size() == 5);
    auto shallow = explore(a, {1000, 1});
    CHECK_FALSE(shallow.complete);
    CHECK(shallow.max_depth() == 1);
    CHECK(explore(a, {20, 100}).complete);
}

TEST_CASE("json and dot") {
    auto eq = explore(FiniteDimAlgebra::build(triangular_example_reduction()));
    auto j = to_json(eq);
    auto again = nlohmann::json::parse(j.dump());
    CHECK(again == j);
    auto s = poset_summary(again);
    CHECK(s.complete);
    CHECK(s.graph().edges == eq.graph().edges);
    auto sincere = s.sincere();
    CHECK(sincere[0]);
    CHECK(std::count(sincere.begin(), sincere.end(), true) == 2);
    for (std::size_t i = 0; i < eq.nodes.size(); ++i) CHECK(sincere[i] == is_sincere_silting(eq.nodes[i], 2));
    auto dot = to_dot(eq);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 5 + 5 + 1);
}

TEST_CASE("worker count does not change the result") {
    auto a = FiniteDimAlgebra::build(hereditary_reduction(3));
    auto one = to_json(explore(a, {}, 1)).dump();
    auto many = to_json(explore(a, {}, 8)).dump();
    CHECK(one == many);
}
