#include <doctest.h>

#include <algorithm>

#include "silt/orders.hpp"

using namespace silt;

namespace {

ExchangeQuiver run(const AlgebraPresentation& p) { return explore(FiniteDimAlgebra::build(p)); }

CoverGraph chain(std::size_t n) {
    CoverGraph g{n, {}};
    for (std::size_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

// Independent recount: every ascent of w gives one upward cover.
std::size_t ascent_total(std::size_t m) {
    std::vector<int> w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = static_cast<int>(i);
    std::size_t total = 0;
    do {
        for (std::size_t i = 0; i + 1 < m; ++i) total += w[i] < w[i + 1];
    } while (std::next_permutation(w.begin(), w.end()));
    return total;
}

} // namespace

TEST_CASE("weak order examples") {
    auto w1 = weak_order_hasse(1);
    CHECK(w1.elements.size() == 1);
    CHECK(w1.covers.empty());
    auto w2 = weak_order_hasse(2);
    CHECK(w2.elements.size() == 2);
    CHECK(w2.covers.size() == 1);
    auto w3 = weak_order_hasse(3);
    CHECK(w3.elements.size() == 6);
    CHECK(w3.covers.size() == 6);
    CHECK_THROWS_AS(weak_order_hasse(8), Error);
    CHECK_THROWS_AS(weak_order_hasse(0), Error);
}

TEST_CASE("weak order structure") {
    for (std::size_t m = 1; m <= 6; ++m) {
        auto w = weak_order_hasse(m);
        std::size_t fact = 1;
        for (std::size_t i = 2; i <= m; ++i) fact *= i;
        CHECK(w.elements.size() == fact);
        CHECK(w.covers.size() == ascent_total(m));
        for (auto [lo, hi] : w.covers) CHECK(w.length(hi) == w.length(lo) + 1);
        auto g = w.hasse_graph();
        auto succ = g.successors(), pred = g.predecessors();
        CHECK(std::count_if(pred.begin(), pred.end(), [](auto& v) { return v.empty(); }) == 1);
        CHECK(std::count_if(succ.begin(), succ.end(), [](auto& v) { return v.empty(); }) == 1);
        CHECK(w.length(0) == 0);
        CHECK(w.length(w.elements.size() - 1) == m * (m - 1) / 2);
    }
}

TEST_CASE("poset_isomorphic examples") {
    auto s3 = weak_order_hasse(3).hasse_graph();
    CHECK(poset_isomorphic(s3, s3));
    CHECK_FALSE(poset_isomorphic(s3, chain(6)));
    CHECK(poset_isomorphic(run(bass_v_reduction()).graph(), s3));
    CHECK(poset_isomorphic(chain(4), chain(4)));
    CoverGraph relabelled{6, {}};
    std::vector<std::size_t> perm{3, 5, 0, 1, 4, 2};
    for (auto [x, y] : s3.edges) relabelled.edges.emplace_back(perm[x], perm[y]);
    CHECK(poset_isomorphic(s3, relabelled));
    CoverGraph two_sources{3, {{0, 2}, {1, 2}}};
    CHECK_THROWS_AS(poset_isomorphic(two_sources, two_sources), Error);
}

TEST_CASE("isomorphism distinguishes graphs with equal degree data") {
    // Two diamonds stacked vs a hexagon with a chord-free middle: same size, different shape.
    CoverGraph stacked{7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}};
    CoverGraph other{7, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}, {5, 6}, {4, 6}}};
    CHECK(poset_isomorphic(stacked, stacked));
    CHECK_FALSE(poset_isomorphic(stacked, other));
}

TEST_CASE("sincere classification") {
    auto eq = run(hereditary_reduction(2));
    auto s = classify_sincere(eq);
    CHECK(s[0]);
    std::size_t zero = 0;
    for (std::size_t i = 0; i < eq.nodes.size(); ++i)
        if (eq.nodes[i].summands.empty()) zero = i;
    CHECK_FALSE(s[zero]);
    CHECK(std::count(s.begin(), s.end(), true) == 3);
}

TEST_CASE("torsion-class assembly") {
    auto t1 = assemble_tors_hasse(OrderFamily::hereditary, run(hereditary_reduction(1)));
    CHECK(t1.nodes.size() == 3);
    auto t2 = assemble_tors_hasse(OrderFamily::hereditary, run(hereditary_reduction(2)));
    CHECK(t2.nodes.size() == 9);
    CHECK(t2.edges.size() == 11);
    auto g = t2.graph();
    auto succ = g.successors(), pred = g.predecessors();
    CHECK(std::count_if(pred.begin(), pred.end(), [](auto& v) { return v.empty(); }) == 1);
    CHECK(std::count_if(succ.begin(), succ.end(), [](auto& v) { return v.empty(); }) == 1);
    auto reach = g.reachability();
    for (std::size_t i = 0; i < g.size; ++i)
        for (std::size_t j = 0; j < g.size; ++j)
            if (i != j) CHECK_FALSE((reach[i][j] && reach[j][i]));
    CHECK_THROWS_AS(assemble_tors_hasse(OrderFamily::bass_v, run(bass_v_reduction())), Error);
    auto j = t2.to_json();
    CHECK(j["nodes"].size() == 9);
    CHECK(j["edges"].size() == 11);
}

TEST_CASE("torsion classes match the n = 2 figure") {
    // mod, Fac Le2, Fac Le1, fl, Fac Le2 cap fl, Fac Le1 cap fl, Fac S2, Fac S1, 0
    CoverGraph figure{9, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 8}, {7, 8}}};
    auto t2 = assemble_tors_hasse(OrderFamily::hereditary, run(hereditary_reduction(2)));
    CHECK(poset_isomorphic(t2.graph(), figure));
}
