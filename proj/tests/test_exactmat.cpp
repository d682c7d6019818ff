#include <doctest.h>

#include <random>

#include "silt/exactmat.hpp"
#include "silt/kernels.hpp"

using namespace silt;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng, int zero_bias = 0) {
    Matrix m(f, r, c);
    std::uniform_int_distribution<std::uint32_t> d(0, f.prime() - 1);
    std::uniform_int_distribution<int> z(0, 9);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = z(rng) < zero_bias ? 0 : d(rng);
    return m;
}

} // namespace

TEST_CASE("field arithmetic") {
    Field f(5);
    CHECK(f.reduce(-2) == 3);
    CHECK(f.mul(3, 4) == 2);
    CHECK(f.inv(2) == 3);
    CHECK(f.lift(4) == -1);
    CHECK_THROWS_AS(Field(9), Error);
    CHECK_THROWS_AS(Field(2), Error);
    CHECK(Field().prime() == 32003);
}

TEST_CASE("rref examples") {
    Field f5(5);
    auto empty = rref(Matrix(f5, 0, 0));
    CHECK(empty.form.rows() == 0);
    CHECK(empty.pivots.empty());

    auto id = rref(Matrix::identity(f5, 3));
    CHECK(id.form == Matrix::identity(f5, 3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    auto r = rref(Matrix(f5, {{2, 4}, {1, 2}}));
    CHECK(r.form == Matrix(f5, {{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rank examples") {
    Field f5(5);
    CHECK(rank(Matrix(f5, 4, 4)) == 0);
    CHECK(rank(Matrix::identity(f5, 6)) == 6);
    CHECK(rank(Matrix(f5, {{2, 4}, {1, 2}})) == 1);
}

TEST_CASE("solve_right examples") {
    Field f5(5);
    Matrix b(f5, {{1, 2, 3}, {4, 0, 1}});
    auto x = solve_right(Matrix::identity(f5, 2), b);
    REQUIRE(x);
    CHECK(*x == b);
    auto z = solve_right(Matrix(f5, 3, 2), Matrix(f5, 3, 1));
    REQUIRE(z);
    CHECK(z->is_zero());
    CHECK_FALSE(solve_right(Matrix(f5, {{1, 1}, {0, 0}}), Matrix(f5, {{1}, {1}})));
    CHECK_THROWS_AS(solve_right(Matrix(f5, 2, 2), Matrix(f5, 3, 1)), Error);
}

TEST_CASE("kernel_basis examples") {
    Field f5(5);
    CHECK(kernel_basis(Matrix::identity(f5, 3)).empty());
    auto z = kernel_basis(Matrix(f5, 2, 3));
    REQUIRE(z.size() == 3);
    CHECK(z[1] == Vec{0, 1, 0});
    auto k = kernel_basis(Matrix(f5, {{1, 2}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vec{3, 1});
}

TEST_CASE("random properties") {
    std::mt19937 rng(7);
    for (std::uint32_t p : {3u, 5u, 32003u, 2147483647u}) {
        Field f(p);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = rng() % 7, c = rng() % 7;
            Matrix m = random_matrix(f, r, c, rng, trial % 8);
            auto rr = rref(m);
            CHECK(rank(m) + kernel_basis(m).size() == c);
            CHECK(rref(rr.form).form == rr.form);
            for (const auto& v : kernel_basis(m)) {
                Vec img = m.apply(v);
                CHECK(std::all_of(img.begin(), img.end(), [](Scalar s) { return s == 0; }));
            }
            Matrix b = m * random_matrix(f, c, 2, rng);
            auto x = solve_right(m, b);
            REQUIRE(x);
            CHECK(m * *x == b);
        }
    }
}

TEST_CASE("integer determinant") {
    CHECK(integer_determinant({}) == 1);
    CHECK(integer_determinant({{1, 0}, {0, -1}}) == -1);
    CHECK(integer_determinant({{2, 1}, {1, 1}}) == 1);
    CHECK(integer_determinant({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == 2);
}

TEST_CASE("kernel variants agree with the scalar reference") {
    std::mt19937 rng(11);
    auto variants = kernels::available_kernels();
    REQUIRE(!variants.empty());
    CHECK(variants.front()->name == "scalar");
    for (std::uint32_t p : {3u, 7u, 32003u, 65521u, 1000003u, 67108859u, 2147483647u}) {
        Field f(p);
        std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
        for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 15u, 16u, 33u, 100u}) {
            Vec src(n), dst(n);
            for (auto& x : src) x = d(rng);
            for (auto& x : dst) x = d(rng);
            for (Scalar factor : {Scalar(0), Scalar(1), Scalar(p - 1), d(rng)}) {
                Vec ref = dst, refs = dst;
                kernels::scalar_kernels().axpy(ref.data(), src.data(), n, factor, f);
                kernels::scalar_kernels().scale(refs.data(), n, factor, f);
                for (const auto* k : variants) {
                    if (p > k->max_prime) continue;
                    Vec got = dst, gots = dst;
                    k->axpy(got.data(), src.data(), n, factor, f);
                    k->scale(gots.data(), n, factor, f);
                    CHECK_MESSAGE(got == ref, k->name, " axpy p=", p, " n=", n);
                    CHECK_MESSAGE(gots == refs, k->name, " scale p=", p, " n=", n);
                }
            }
        }
    }
}

TEST_CASE("selected kernel respects the prime limit") {
    CHECK(kernels::select_kernels(Field(2147483647u)).name == "scalar");
    const auto& k = kernels::select_kernels(Field());
    CHECK(Field().prime() <= k.max_prime);
}
