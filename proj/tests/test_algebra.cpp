#include <doctest.h>

#include "silt/algebra_io.hpp"
#include "silt/builtins.hpp"
#include "silt/rep.hpp"

using namespace silt;

namespace {

AlgebraPresentation cyclic_two_radical_square_zero() {
    AlgebraPresentation p{Field(), {}, {}, 2};
    p.quiver.vertices = {"1", "2"};
    p.quiver.arrows = {{"a1", 0, 1}, {"a2", 1, 0}};
    p.relations = {{{1, {0, 1}}}, {{1, {1, 0}}}};
    return p;
}

void check_associative(const FiniteDimAlgebra& a) {
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j < a.dimension(); ++j)
            for (std::size_t k = 0; k < a.dimension(); ++k) {
                auto x = a.unit(i), y = a.unit(j), z = a.unit(k);
                REQUIRE(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
            }
}

void check_idempotents(const FiniteDimAlgebra& a) {
    Element one = a.zero();
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        one = a.add(one, a.unit(a.trivial(v)));
        for (std::size_t w = 0; w < a.num_vertices(); ++w) {
            auto ev = a.unit(a.trivial(v)), ew = a.unit(a.trivial(w));
            CHECK(a.multiply(ev, ew) == (v == w ? ev : a.zero()));
        }
    }
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        CHECK(a.multiply(one, a.unit(i)) == a.unit(i));
        CHECK(a.multiply(a.unit(i), one) == a.unit(i));
    }
}

} // namespace

TEST_CASE("build_algebra examples") {
    auto cyc = FiniteDimAlgebra::build(cyclic_two_radical_square_zero());
    CHECK(cyc->dimension() == 4);

    AlgebraPresentation k{Field(), {}, {}, 1};
    k.quiver.vertices = {"1"};
    CHECK(FiniteDimAlgebra::build(k)->dimension() == 1);

    auto dbl = FiniteDimAlgebra::build(bass_v_reduction());
    CHECK(dbl->dimension() == 4);
}

TEST_CASE("builtin dimensions") {
    CHECK(FiniteDimAlgebra::build(hereditary_reduction(1))->dimension() == 1);
    CHECK(FiniteDimAlgebra::build(hereditary_reduction(2))->dimension() == 4);
    CHECK(FiniteDimAlgebra::build(hereditary_reduction(3))->dimension() == 9);
    CHECK(FiniteDimAlgebra::build(triangular_example_reduction())->dimension() == 3);
    CHECK(FiniteDimAlgebra::build(auslander_bass_v_reduction(0))->dimension() == 1);
    CHECK(FiniteDimAlgebra::build(auslander_bass_v_reduction(1))->dimension() == 4);
}

// Independent count: walks in the double quiver of A_{n+1} that never turn around.
std::size_t monotone_path_count(std::size_t n) {
    std::size_t count = n + 1;  // trivial paths
    for (std::size_t s = 0; s <= n; ++s)
        for (std::size_t t = 0; t <= n; ++t)
            if (s != t) ++count;  // exactly one non-backtracking walk from s to t
    return count;
}

TEST_CASE("auslander reduction dimension matches a brute-force path count") {
    for (std::size_t n = 0; n <= 4; ++n)
        CHECK(FiniteDimAlgebra::build(auslander_bass_v_reduction(n))->dimension() == monotone_path_count(n));
    CHECK(monotone_path_count(2) == 9);
}

TEST_CASE("cyclic Nakayama dimension is n * length") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t level = 1; level <= 3; ++level)
            CHECK(FiniteDimAlgebra::build(hereditary_truncation(n, level))->dimension() == n * n * level);
}

TEST_CASE("structure constants are associative with orthogonal idempotents") {
    std::vector<AlgebraPresentation> ps = {hereditary_reduction(1), hereditary_reduction(2),
                                           hereditary_reduction(3), hereditary_truncation(2, 2),
                                           auslander_bass_v_reduction(2), triangular_example_reduction()};
    for (auto& p : ps) {
        auto a = FiniteDimAlgebra::build(p);
        check_associative(*a);
        check_idempotents(*a);
        std::size_t total = 0;
        for (std::size_t v = 0; v < a->num_vertices(); ++v) total += projective_module(a, v).total_dim();
        CHECK(total == a->dimension());
    }
}

TEST_CASE("non-monomial relations") {
    // Commutative square 1->2->4, 1->3->4 with ab = cd.
    AlgebraPresentation p{Field(), {}, {}, 3};
    p.quiver.vertices = {"1", "2", "3", "4"};
    p.quiver.arrows = {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
    p.relations = {{{1, {0, 1}}, {-1, {2, 3}}}};
    auto a = FiniteDimAlgebra::build(p);
    CHECK(a->dimension() == 9);
    std::vector<std::size_t> ab{0, 1}, cd{2, 3};
    CHECK(a->expand_path(0, ab) == a->expand_path(0, cd));
    check_associative(*a);
}

TEST_CASE("build_algebra errors") {
    auto bad = cyclic_two_radical_square_zero();
    bad.relations = {{{1, {0}}}};
    CHECK_THROWS_AS(FiniteDimAlgebra::build(bad), Error);
    bad.relations = {{{1, {0, 1}}, {1, {1, 0}}}};
    CHECK_THROWS_AS(FiniteDimAlgebra::build(bad), Error);  // not parallel
    bad.relations = {{{1, {0, 0}}}};
    CHECK_THROWS_AS(FiniteDimAlgebra::build(bad), Error);  // does not compose
    auto growing = cyclic_two_radical_square_zero();
    growing.relations = {};
    CHECK_THROWS_WITH_AS(FiniteDimAlgebra::build(growing), doctest::Contains("basis still growing"), Error);
}

TEST_CASE("projective and simple modules") {
    auto a2 = FiniteDimAlgebra::build(triangular_example_reduction());
    CHECK(projective_module(a2, 0).dims() == std::vector<std::size_t>{1, 1});
    CHECK(projective_module(a2, 1).dims() == std::vector<std::size_t>{0, 1});
    auto k = FiniteDimAlgebra::build(hereditary_reduction(1));
    CHECK(projective_module(k, 0).dims() == std::vector<std::size_t>{1});
    auto cyc = FiniteDimAlgebra::build(hereditary_reduction(2));
    CHECK(projective_module(cyc, 0).dims() == std::vector<std::size_t>{1, 1});
    CHECK(projective_module(cyc, 1).dims() == std::vector<std::size_t>{1, 1});
    for (auto& a : {a2, cyc}) {
        for (std::size_t v = 0; v < a->num_vertices(); ++v) {
            auto s = simple_module(a, v);
            CHECK(s.total_dim() == 1);
            CHECK(s.dim(v) == 1);
            CHECK(s.check_relations());
            CHECK(projective_module(a, v).check_relations());
        }
    }
    CHECK_THROWS_AS(projective_module(a2, 5), Error);
}

TEST_CASE("json round trip and diagnostics") {
    auto p = auslander_bass_v_reduction(2);
    auto j = presentation_to_json(p);
    auto q = presentation_from_json(j);
    CHECK(presentation_to_json(q) == j);
    CHECK(FiniteDimAlgebra::build(q)->dimension() == 9);

    auto broken = j;
    broken["relations"][2][0][1] = {"a1", "zz"};
    CHECK_THROWS_WITH_AS(presentation_from_json(broken), doctest::Contains("relation 2"), Error);
    broken = j;
    broken["relations"][1] = nlohmann::json::array({nlohmann::json::array({1, {"a0"}})});
    CHECK_THROWS_WITH_AS(FiniteDimAlgebra::build(presentation_from_json(broken)), doctest::Contains("relation 1"), Error);
}
