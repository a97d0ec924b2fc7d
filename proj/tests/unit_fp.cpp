#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modrep/fp.hpp"

using namespace modrep;
using fp::FpMatrix;

TEST_CASE("rref identity and zero") {
    auto id = FpMatrix::identity(5, 3);
    auto rr = fp::rref(id);
    CHECK(rr.rank == 3);
    CHECK(rr.reduced == id);

    auto z = FpMatrix::zero(3, 2, 4);
    auto rz = fp::rref(z);
    CHECK(rz.rank == 0);
    CHECK(rz.reduced == z);
}

TEST_CASE("rref proportional rows over F_3") {
    // second row = 2 * first row: rank 1 by hand row-reduction
    auto m = FpMatrix::from_rows(3, {{1, 2}, {2, 4}});
    auto rr = fp::rref(m);
    CHECK(rr.rank == 1);
    // idempotence
    auto rr2 = fp::rref(rr.reduced);
    CHECK(rr2.reduced == rr.reduced);
    CHECK(rr2.rank == rr.rank);
}

TEST_CASE("nullspace basics") {
    CHECK(fp::nullspace(FpMatrix::identity(7, 4)).cols() == 0);
    CHECK(fp::nullspace(FpMatrix::zero(3, 2, 3)).cols() == 3);

    // [[1,1,1]] over F_2: kernel is 2-dimensional; oracle: all 8 vectors
    auto m = FpMatrix::from_rows(2, {{1, 1, 1}});
    auto ker = fp::nullspace(m);
    CHECK(ker.cols() == 2);
    int in_kernel = 0;
    for (int mask = 0; mask < 8; ++mask) {
        int s = ((mask >> 0) & 1) + ((mask >> 1) & 1) + ((mask >> 2) & 1);
        if (s % 2 == 0) ++in_kernel;
    }
    CHECK(in_kernel == 4);  // 2-dim subspace of F_2^3
    CHECK((m * ker).is_zero());
}

TEST_CASE("solve basics") {
    auto id = FpMatrix::identity(5, 3);
    auto b = FpMatrix::from_rows(5, {{1}, {2}, {3}});
    auto x = fp::solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto z = FpMatrix::zero(5, 2, 2);
    auto nb = FpMatrix::from_rows(5, {{1}, {0}});
    CHECK_FALSE(fp::solve(z, nb).has_value());

    // 2x = 1 over F_5 -> x = 3
    auto a2 = FpMatrix::from_rows(5, {{2}});
    auto b2 = FpMatrix::from_rows(5, {{1}});
    auto x2 = fp::solve(a2, b2);
    REQUIRE(x2.has_value());
    CHECK(x2->at(0, 0) == 3);
}

TEST_CASE("kron") {
    auto i2 = FpMatrix::identity(5, 2);
    auto i3 = FpMatrix::identity(5, 3);
    CHECK(fp::kron(i2, i3) == FpMatrix::identity(5, 6));
    CHECK(fp::kron(i2, FpMatrix::zero(5, 3, 3)).is_zero());

    // permutation x permutation = permutation of the product on pairs
    auto pa = FpMatrix::from_rows(5, {{0, 1}, {1, 0}});
    auto pb = FpMatrix::from_rows(5, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    auto k = fp::kron(pa, pb);
    // k should be a permutation matrix (one 1 per row/column)
    for (std::size_t i = 0; i < 6; ++i) {
        int rowsum = 0, colsum = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            rowsum += k.at(i, j);
            colsum += k.at(j, i);
        }
        CHECK(rowsum == 1);
        CHECK(colsum == 1);
    }
    CHECK(k * k.transpose() == FpMatrix::identity(5, 6));
}

TEST_CASE("rank-nullity over random matrices") {
    std::mt19937_64 rng(42);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
            FpMatrix m(p, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<std::int64_t>(rng() % p));
            auto ker = fp::nullspace(m);
            CHECK(fp::rank(m) + ker.cols() == c);
            if (ker.cols()) CHECK((m * ker).is_zero());
        }
    }
}

TEST_CASE("solve consistency on random systems") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint32_t p = 3;
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        FpMatrix a(p, r, c), x0(p, c, 1);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a.set(i, j, static_cast<std::int64_t>(rng() % p));
        for (std::size_t j = 0; j < c; ++j) x0.set(j, 0, static_cast<std::int64_t>(rng() % p));
        auto b = a * x0;
        auto x = fp::solve(a, b);
        REQUIRE(x.has_value());
        CHECK((a * *x - b).is_zero());
    }
}

TEST_CASE("dimension cap raises typed error") {
    auto old = fp::dim_cap();
    fp::set_dim_cap(100);
    CHECK_THROWS_AS(FpMatrix(3, 20, 20), fp::CapExceeded);
    fp::set_dim_cap(old);
}

TEST_CASE("span basis insert and coordinates") {
    fp::SpanBasis span(3, 4);
    CHECK(span.insert({1, 2, 0, 1}));
    CHECK(span.insert({0, 1, 1, 0}));
    CHECK_FALSE(span.insert({1, 0, 1, 1}));  // 1*r1 - 2*r2? dependent combination
    CHECK(span.dim() == 2);
    auto c = span.coordinates({2, 0, 2, 2});  // 2*r1 + 2*r2
    CHECK(c.has_value());
    CHECK_FALSE(span.coordinates({0, 0, 0, 1}).has_value());
}
