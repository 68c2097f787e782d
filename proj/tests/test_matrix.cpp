#include "hopfring/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace hopfring;

namespace {

RatMatrix from_rows(int cols, const std::vector<std::vector<long>>& rows) {
    RatMatrix m(0, cols);
    for (const auto& r : rows) {
        std::vector<Rational> dense;
        for (long x : r) dense.emplace_back(x);
        m.append_row(sparse_from_dense(dense));
    }
    return m;
}

// Dense row-times-matrix product, used as an independent check that kernel
// vectors really annihilate the matrix.
std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.rows, Rational(0));
    for (int i = 0; i < m.rows; ++i)
        for (const auto& [c, val] : m.data[i]) out[i] += val * v[c];
    return out;
}

RatMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    RatMatrix m(0, cols);
    for (int i = 0; i < rows; ++i) {
        std::vector<std::pair<int, Rational>> entries;
        for (int c = 0; c < cols; ++c) {
            long v = static_cast<long>(rng() % 7) - 3;
            if (v != 0) entries.emplace_back(c, Rational(v));
        }
        m.append_row(sparse_normalize(std::move(entries)));
    }
    return m;
}

}  // namespace

TEST_CASE("sparse vector arithmetic") {
    SparseVec a = {{0, Rational(1)}, {2, Rational(3)}};
    SparseVec b = {{0, Rational(2)}, {1, Rational(1)}, {2, Rational(-3)}};
    SparseVec sum = sparse_axpy(a, Rational(1), b);
    CHECK(sum == SparseVec{{0, Rational(3)}, {1, Rational(1)}});
    CHECK(sparse_axpy(a, Rational(0), b) == a);
    CHECK(sparse_get(a, 2) == Rational(3));
    CHECK(sparse_get(a, 1) == Rational(0));
    CHECK(sparse_leading(a) == 0);
    CHECK(sparse_leading(SparseVec{}) == -1);

    SparseVec n = sparse_normalize({{3, Rational(1)}, {1, Rational(2)}, {3, Rational(-1)}});
    CHECK(n == SparseVec{{1, Rational(2)}});
}

TEST_CASE("rref on frozen examples") {
    SUBCASE("identity is fixed") {
        RatMatrix id = RatMatrix::identity(3);
        RrefResult r = rref(id);
        CHECK(r.mat == id);
        CHECK(r.pivots == std::vector<int>{0, 1, 2});
    }
    SUBCASE("proportional rows collapse") {
        RatMatrix m = from_rows(2, {{1, 2}, {2, 4}});
        RrefResult r = rref(m);
        CHECK(r.mat == from_rows(2, {{1, 2}}));
        CHECK(r.pivots == std::vector<int>{0});
    }
    SUBCASE("dependent third row") {
        // row2 = row0 + row1, so the rank is 2
        RatMatrix m = from_rows(3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 2}});
        RrefResult r = rref(m);
        CHECK(r.mat == from_rows(3, {{1, 0, 1}, {0, 1, 1}}));
        CHECK(r.pivots == std::vector<int>{0, 1});
    }
    SUBCASE("zero matrix") {
        RatMatrix m(4, 3);
        RrefResult r = rref(m);
        CHECK(r.mat.rows == 0);
        CHECK(r.pivots.empty());
    }
}

TEST_CASE("kernel basis on frozen examples") {
    SUBCASE("hyperplane sum = 0") {
        RatMatrix m = from_rows(3, {{1, 1, 1}});
        RatMatrix k = kernel_basis(m);
        CHECK(k == from_rows(3, {{-1, 1, 0}, {-1, 0, 1}}));
    }
    SUBCASE("rank-one 2x2") {
        RatMatrix m = from_rows(2, {{1, 2}, {2, 4}});
        RatMatrix k = kernel_basis(m);
        CHECK(k == from_rows(2, {{-2, 1}}));
    }
    SUBCASE("identity has trivial kernel") {
        CHECK(kernel_basis(RatMatrix::identity(4)).rows == 0);
    }
}

TEST_CASE("subspace membership") {
    RatMatrix space = rref(from_rows(3, {{1, 0, 1}, {0, 1, 1}})).mat;
    CHECK(subspace_contains(space, sparse_from_dense({Rational(1), Rational(-1), Rational(0)})));
    CHECK(!subspace_contains(space, sparse_from_dense({Rational(1), Rational(0), Rational(0)})));
    CHECK(subspace_contains(space, {}));
    CHECK_THROWS_AS(subspace_contains(space, SparseVec{{5, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("subspace sums and intersections") {
    RatMatrix a = from_rows(2, {{1, 0}});
    RatMatrix b = from_rows(2, {{0, 1}});
    CHECK(subspace_sum_dim(a, b) == 2);
    CHECK(subspace_intersect_dim(a, b) == 0);

    RatMatrix c = from_rows(2, {{1, 1}});
    RatMatrix d = from_rows(2, {{2, 2}});
    CHECK(subspace_sum_dim(c, d) == 1);
    CHECK(subspace_intersect_dim(c, d) == 1);
    CHECK(subspace_equal(c, d));
    CHECK(!subspace_equal(a, b));
}

TEST_CASE("span builder") {
    SpanBuilder span(2);
    CHECK(span.insert({{0, Rational(1)}, {1, Rational(1)}}));
    CHECK(!span.insert({{0, Rational(2)}, {1, Rational(2)}}));
    CHECK(span.dim() == 1);
    CHECK(span.insert({{1, Rational(1)}}));
    CHECK(span.dim() == 2);
    CHECK(span.contains({{0, Rational(7)}}));
    CHECK(span.matrix() == RatMatrix::identity(2));
}

TEST_CASE("randomized structural properties") {
    std::mt19937_64 rng(20240817u);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        RatMatrix m = random_matrix(rng, rows, cols);

        RrefResult r = rref(m);
        SUBCASE("") {}

        // rref is idempotent and canonical
        RrefResult r2 = rref(r.mat);
        CHECK(r2.mat == r.mat);
        CHECK(r2.pivots == r.pivots);

        // pivots strictly increase and carry unit entries
        for (size_t i = 0; i + 1 < r.pivots.size(); ++i) CHECK(r.pivots[i] < r.pivots[i + 1]);
        for (int i = 0; i < r.mat.rows; ++i) {
            CHECK(sparse_leading(r.mat.data[i]) == r.pivots[i]);
            CHECK(r.mat.data[i].front().second == Rational(1));
            for (int j = 0; j < r.mat.rows; ++j)
                if (j != i) CHECK(sparse_get(r.mat.data[j], r.pivots[i]) == Rational(0));
        }

        // rank + nullity = cols, and kernel rows annihilate m
        RatMatrix k = kernel_basis(m);
        CHECK(r.mat.rows + k.rows == cols);
        for (int i = 0; i < k.rows; ++i) {
            std::vector<Rational> prod = mat_vec(m, sparse_to_dense(k.data[i], cols));
            for (const auto& x : prod) CHECK(x == Rational(0));
        }

        // row rank equals column rank
        CHECK(rref(transpose(m)).mat.rows == r.mat.rows);

        // every original row lies in the rref span
        for (const auto& row : m.data) CHECK(subspace_contains(r.mat, row));
    }
}
