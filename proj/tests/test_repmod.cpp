#include <doctest.h>

#include "silt/builtins.hpp"
#include "silt/repmod.hpp"

using namespace silt;

namespace {

AlgebraPtr a2() { return FiniteDimAlgebra::build(triangular_example_reduction()); }

} // namespace

TEST_CASE("hom_basis examples") {
    auto a = a2();
    auto p1 = projective_module(a, 0), s1 = simple_module(a, 0), p2 = projective_module(a, 1);
    CHECK(hom_dim(p1, s1) == 1);
    CHECK(hom_dim(s1, p1) == 0);
    CHECK(hom_basis(p1, Rep::zero(a)).empty());
    CHECK(hom_dim(p2, p1) == 1);
    CHECK(hom_dim(p1, p2) == 0);
    for (const auto& m : {p1, s1, p2}) {
        auto basis = hom_basis(m, m);
        for (const auto& h : basis) CHECK(h.commutes());
        CHECK(basis.size() == 1);
        CHECK(basis[0].components == identity_map(m).components);
    }
}

TEST_CASE("is_isomorphic examples") {
    auto a = a2();
    auto p1 = projective_module(a, 0), s1 = simple_module(a, 0), s2 = simple_module(a, 1);
    CHECK(is_isomorphic(p1, p1));
    CHECK_FALSE(is_isomorphic(s1, s2));
    CHECK(is_isomorphic(projective_module(a, 1), s2));
    CHECK_FALSE(is_isomorphic(p1, s1));
}

TEST_CASE("top") {
    auto a = a2();
    CHECK(is_isomorphic(top(simple_module(a, 0)).top, simple_module(a, 0)));
    CHECK(top(Rep::zero(a)).top.is_zero());
    for (auto p : {hereditary_reduction(3), auslander_bass_v_reduction(2), hereditary_truncation(2, 2)}) {
        auto alg = FiniteDimAlgebra::build(p);
        for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
            auto t = top(projective_module(alg, v));
            CHECK(is_isomorphic(t.top, simple_module(alg, v)));
            CHECK(t.quotient.commutes());
        }
    }
}

TEST_CASE("projective cover") {
    auto a = a2();
    auto p1 = projective_module(a, 0);
    auto cp = projective_cover(p1);
    CHECK(cp.vertices == std::vector<std::size_t>{0});
    CHECK(is_isomorphic(cp.module, p1));
    auto cs = projective_cover(simple_module(a, 0));
    CHECK(cs.vertices == std::vector<std::size_t>{0});
    CHECK(cs.epi.commutes());
    auto cz = projective_cover(Rep::zero(a));
    CHECK(cz.vertices.empty());
    CHECK(cz.module.is_zero());

    auto alg = FiniteDimAlgebra::build(auslander_bass_v_reduction(2));
    std::vector<Rep> mods;
    for (std::size_t v = 0; v < 3; ++v) {
        mods.push_back(projective_module(alg, v));
        mods.push_back(simple_module(alg, v));
    }
    mods.push_back(direct_sum({mods[0], mods[3]}, alg));
    for (const auto& m : mods) {
        auto c = projective_cover(m);
        CHECK(c.epi.commutes());
        auto k = kernel(c.epi);
        CHECK(k.module.total_dim() + m.total_dim() == c.module.total_dim());
        CHECK(cokernel(c.epi).module.is_zero());
        CHECK(top(c.module).top.dims() == top(m).top.dims());
    }
}

TEST_CASE("minimal projective presentation") {
    auto a = a2();
    auto pp = min_projective_presentation(projective_module(a, 0));
    CHECK(pp.degree_minus1.empty());
    CHECK(pp.degree0 == std::vector<std::size_t>{0});
    auto ps = min_projective_presentation(simple_module(a, 0));
    CHECK(ps.degree_minus1 == std::vector<std::size_t>{1});
    CHECK(ps.degree0 == std::vector<std::size_t>{0});
    CHECK(ps.well_formed());
    auto pz = min_projective_presentation(Rep::zero(a));
    CHECK(pz.degree0.empty());
    CHECK(pz.degree_minus1.empty());

    for (auto p : {hereditary_reduction(3), auslander_bass_v_reduction(2)}) {
        auto alg = FiniteDimAlgebra::build(p);
        for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
            auto s = simple_module(alg, v);
            auto c = min_projective_presentation(s);
            CHECK(c.well_formed());
            CHECK(is_isomorphic(cokernel(c.differential()).module, s));
            for (std::size_t r = 0; r < c.degree0.size(); ++r)
                for (std::size_t k = 0; k < c.degree_minus1.size(); ++k)
                    if (c.degree0[r] == c.degree_minus1[k])
                        CHECK(alg->trivial_coefficient(c.d[r][k], c.degree0[r]) == 0);
        }
    }
}

TEST_CASE("kernel and cokernel") {
    auto a = a2();
    auto p1 = projective_module(a, 0);
    CHECK(cokernel(identity_map(p1)).module.is_zero());
    auto s1 = simple_module(a, 0);
    CHECK(is_isomorphic(cokernel(zero_map(p1, s1)).module, s1));
    auto incl = projective_map(a, {0}, {1}, {{a->expand_path(0, std::vector<std::size_t>{0})}});
    CHECK(incl.commutes());
    auto c = cokernel(incl);
    CHECK(c.module.dims() == std::vector<std::size_t>{1, 0});
    CHECK(is_isomorphic(c.module, s1));
    CHECK(kernel(incl).module.is_zero());
    CHECK(is_isomorphic(kernel(identity_map(p1)).module, Rep::zero(a)));
}

TEST_CASE("fac_contains") {
    auto a = a2();
    auto p1 = projective_module(a, 0), s1 = simple_module(a, 0);
    CHECK(fac_contains(p1, p1));
    CHECK(fac_contains(p1, Rep::zero(a)));
    CHECK_FALSE(fac_contains(s1, p1));
    CHECK(fac_contains(p1, s1));
}

TEST_CASE("indecomposability and summand counting") {
    auto a = FiniteDimAlgebra::build(hereditary_reduction(3));
    auto p0 = projective_module(a, 0), p1 = projective_module(a, 1), s0 = simple_module(a, 0);
    CHECK(is_indecomposable(p0));
    CHECK(is_indecomposable(s0));
    auto m = direct_sum({p0, p0, s0, p1}, a);
    CHECK_FALSE(is_indecomposable(m));
    CHECK(count_summands(m) == 3);
    CHECK(count_summands(Rep::zero(a)) == 0);
    auto s2 = simple_module(a, 2);
    CHECK(count_summands(direct_sum({p0, s2, p0, s0, p0, s2, p1, s0}, a)) == 4);
    std::vector<Rep> basis{p0, s0, p1, simple_module(a, 2)};
    CHECK(summand_multiplicities(m, basis) == std::vector<std::size_t>{2, 1, 1, 0});
    auto dec = decompose_against(m, basis);
    REQUIRE(dec);
    CHECK(*dec == std::vector<std::size_t>{2, 1, 1, 0});
    std::vector<Rep> partial{p0, s0};
    CHECK_FALSE(decompose_against(m, partial));
}
