#include <doctest.h>

#include <vector>

#include "ghwforge/errors.hpp"
#include "ghwforge/matrix.hpp"
#include "ghwforge/rng.hpp"

using namespace ghwforge;

namespace {

Matrix random_matrix(SplitMix64& rng, const Field& f, int rows, int cols) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, static_cast<int>(rng.below(f.size())));
    return m;
}

// random invertible row operations applied to m
Matrix shuffled_rows(SplitMix64& rng, const Matrix& m) {
    const Field& f = m.field();
    Matrix out = m;
    for (int step = 0; step < 4 * m.rows(); ++step) {
        const int i = static_cast<int>(rng.below(m.rows()));
        const int j = static_cast<int>(rng.below(m.rows()));
        const int c = static_cast<int>(rng.below(f.size() - 1)) + 1;
        if (i == j) {
            for (int t = 0; t < m.cols(); ++t) out.set(i, t, f.mul(c, out.at(i, t)));
        } else {
            for (int t = 0; t < m.cols(); ++t)
                out.set(i, t, f.add(out.at(i, t), f.mul(c, out.at(j, t))));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("rref of the identity") {
    const Field f = Field::make(2, 1);
    const RrefResult r = rref(Matrix::identity(f, 3));
    CHECK(r.rank == 3);
    CHECK(r.pivot_cols == std::vector<int>{0, 1, 2});
    CHECK(r.reduced == Matrix::identity(f, 3));
}

TEST_CASE("rref of the zero matrix") {
    const Field f = Field::make(3, 1);
    const RrefResult r = rref(Matrix(f, 4, 5));
    CHECK(r.rank == 0);
    CHECK(r.pivot_cols.empty());
}

TEST_CASE("rref is idempotent and canonical under row operations") {
    SplitMix64 rng(11);
    for (auto [p, m] : {std::pair<long, int>{2, 1}, {3, 1}, {2, 2}}) {
        const Field f = Field::make(p, m);
        for (int trial = 0; trial < 30; ++trial) {
            const Matrix a = random_matrix(rng, f, 3, 5);
            const RrefResult ra = rref(a);
            CHECK(rref(ra.reduced).reduced == ra.reduced);
            const Matrix b = shuffled_rows(rng, a);
            CHECK(rref(b).reduced == ra.reduced);
        }
    }
}

TEST_CASE("rank equals rank of the transpose") {
    SplitMix64 rng(23);
    const Field f = Field::make(3, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix a = random_matrix(rng, f, 3 + trial % 3, 4 + trial % 4);
        CHECK(rank_of(a) == rank_of(a.transpose()));
    }
}

TEST_CASE("kernel basics") {
    const Field f2 = Field::make(2, 1);
    CHECK(kernel(Matrix::identity(f2, 3)).dim() == 0);

    const Matrix m = Matrix::from_rows(f2, {{1, 1}, {0, 0}});
    const Subspace k = kernel(m);
    CHECK(k.dim() == 1);
    CHECK(k.contains({1, 1}));
    CHECK_FALSE(k.contains({1, 0}));
}

TEST_CASE("kernel vectors annihilate the matrix and dim = cols - rank") {
    SplitMix64 rng(37);
    const Field f = Field::make(3, 1);
    for (int trial = 0; trial < 25; ++trial) {
        const Matrix m = random_matrix(rng, f, 4, 6);
        const Subspace k = kernel(m);
        CHECK(k.dim() == 6 - rank_of(m));
        for (int i = 0; i < k.dim(); ++i) {
            const std::vector<int> v = k.basis().row(i);
            for (int r = 0; r < m.rows(); ++r) {
                int acc = 0;
                for (int c = 0; c < m.cols(); ++c)
                    acc = f.add(acc, f.mul(m.at(r, c), v[c]));
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("subspace sum and membership basics") {
    const Field f = Field::make(2, 1);
    const Subspace a = Subspace::span_of(f, 3, {{1, 0, 0}});
    const Subspace b = Subspace::span_of(f, 3, {{0, 1, 0}});
    const Subspace zero(f, 3);
    CHECK(a.sum(zero) == a);
    CHECK(a.sum(b).dim() == 2);
    CHECK(a.sum(b).contains({1, 1, 0}));
    CHECK_FALSE(a.sum(b).contains({0, 0, 1}));
}

TEST_CASE("dimension formula dim(A+B) + dim(A n B) = dim A + dim B") {
    SplitMix64 rng(53);
    for (auto [p, m] : {std::pair<long, int>{2, 1}, {3, 1}, {2, 2}}) {
        const Field f = Field::make(p, m);
        for (int trial = 0; trial < 30; ++trial) {
            const Subspace a = Subspace::from_rows(random_matrix(rng, f, 2, 5));
            const Subspace b = Subspace::from_rows(random_matrix(rng, f, 3, 5));
            const Subspace s = a.sum(b), i = a.intersect(b);
            CHECK(s.dim() + i.dim() == a.dim() + b.dim());
            CHECK(a.contains_subspace(i));
            CHECK(b.contains_subspace(i));
            CHECK(s.contains_subspace(a));
        }
    }
}

TEST_CASE("projective representatives: one per class, sorted") {
    const Field f = Field::make(3, 1);
    const Subspace s = Subspace::span_of(f, 3, {{1, 0, 2}, {0, 1, 1}});
    const auto reps = s.projective_vectors();
    CHECK(reps.size() == 4);  // (q^2 - 1) / (q - 1)
    for (size_t i = 0; i + 1 < reps.size(); ++i) CHECK(reps[i] < reps[i + 1]);
    for (const auto& v : reps) {
        CHECK(s.contains(v));
        // first nonzero coordinate normalized to 1
        for (int x : v) {
            if (x == 0) continue;
            CHECK(x == 1);
            break;
        }
    }
}

TEST_CASE("ambient mismatch and shape errors") {
    const Field f2 = Field::make(2, 1), f3 = Field::make(3, 1);
    const Subspace a(f2, 3), b(f2, 4), c(f3, 3);
    CHECK_THROWS_AS(a.sum(b), AmbientMismatchError);
    CHECK_THROWS_AS(a.sum(c), AmbientMismatchError);
    CHECK_THROWS_AS(Matrix(f2, 2, 2).multiply(Matrix(f2, 3, 2)), ShapeMismatchError);
    CHECK_THROWS_AS(Matrix(f2, 2, 2).multiply(Matrix(f3, 2, 2)), FieldMismatchError);
    CHECK_THROWS_AS(Matrix(f2, 2, 2).columns({2}), BadIndexError);
}
