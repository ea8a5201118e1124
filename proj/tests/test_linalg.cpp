#include "infhom/linalg.hpp"

#include "classical.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace infhom;

namespace {

SparseMatrix random_matrix(std::mt19937& rng, Index rows, Index cols, int density_percent) {
    std::uniform_int_distribution<int> pct(0, 99);
    std::vector<Triplet> t;
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c)
            if (pct(rng) < density_percent) t.push_back({r, c, testing_support::random_scalar(rng, 2)});
    return SparseMatrix(rows, cols, std::move(t));
}

oracle::Dense dense(const SparseMatrix& m) {
    oracle::Dense d(m.rows(), std::vector<mpq_class>(m.cols(), 0));
    for (const auto& t : m.entries()) d[t.row][t.col] += t.value;
    return d;
}

}  // namespace

TEST(Scalar, ParsesIntegersAndFractions) {
    EXPECT_EQ(*parse_scalar("3"), Scalar(3));
    EXPECT_EQ(*parse_scalar("-2/4"), Scalar(-1, 2));
    EXPECT_EQ(*parse_scalar(" 7 / 3 "), Scalar(7, 3));
    EXPECT_EQ(*parse_scalar("+5"), Scalar(5));
    EXPECT_FALSE(parse_scalar("1/0"));
    EXPECT_FALSE(parse_scalar("0.5"));
    EXPECT_FALSE(parse_scalar("x"));
    EXPECT_EQ(to_string(Scalar(-3, 6)), "-1/2");
}

TEST(SparseVector, FromUnsortedMergesAndDropsZeros) {
    auto v = SparseVector::from_unsorted({{3, Scalar(1)}, {1, Scalar(2)}, {3, Scalar(-1)}, {0, Scalar(0)}});
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v.coeff(1), Scalar(2));
    EXPECT_EQ(v.coeff(3), Scalar(0));
}

TEST(SparseVector, Axpy) {
    auto x = SparseVector::from_unsorted({{0, Scalar(1)}, {2, Scalar(1)}});
    auto y = SparseVector::from_unsorted({{2, Scalar(1)}, {4, Scalar(3)}});
    auto z = axpy(x, Scalar(-1), y);
    EXPECT_EQ(z, SparseVector::from_unsorted({{0, Scalar(1)}, {4, Scalar(-3)}}));
}

TEST(SparseMatrix, ApplyAndTranspose) {
    SparseMatrix m(2, 3, {{0, 0, Scalar(1)}, {0, 2, Scalar(2)}, {1, 1, Scalar(-1)}});
    auto v = m.apply(SparseVector::from_unsorted({{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(1)}}));
    EXPECT_EQ(v, SparseVector::from_unsorted({{0, Scalar(3)}, {1, Scalar(-1)}}));
    EXPECT_EQ(m.transpose().transpose(), m);
    EXPECT_EQ(m.transpose().rows(), 3u);
}

TEST(Subspace, InsertReduceContains) {
    Subspace s(3);
    EXPECT_TRUE(s.insert(SparseVector::from_unsorted({{0, Scalar(1)}, {1, Scalar(1)}})));
    EXPECT_TRUE(s.insert(SparseVector::from_unsorted({{1, Scalar(1)}, {2, Scalar(1)}})));
    EXPECT_FALSE(s.insert(SparseVector::from_unsorted({{0, Scalar(1)}, {2, Scalar(-1)}})));
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_TRUE(s.contains(SparseVector::from_unsorted({{0, Scalar(2)}, {1, Scalar(2)}})));
    EXPECT_FALSE(s.contains(SparseVector::unit(2)) && s.contains(SparseVector::unit(0)));
}

TEST(Subspace, QuotientDimension) {
    auto u = Subspace::full(4);
    auto w = Subspace::span(4, {SparseVector::unit(0), SparseVector::unit(1)});
    EXPECT_EQ(quotient_dim(u, w), 2u);
    EXPECT_TRUE(u.contains(w));
}

TEST(Kernel, KnownMatrix) {
    // rows (1 1 0), (0 1 1): kernel spanned by (1,-1,1)
    SparseMatrix m(2, 3, {{0, 0, Scalar(1)}, {0, 1, Scalar(1)}, {1, 1, Scalar(1)}, {1, 2, Scalar(1)}});
    auto k = kernel_basis(m);
    ASSERT_EQ(k.dim(), 1u);
    EXPECT_TRUE(m.apply(k.basis()[0]).empty());
    EXPECT_EQ(rank(m), 2u);
}

TEST(CoordinateSolver, SolvesAndRejects) {
    std::vector<SparseVector> basis{SparseVector::from_unsorted({{0, Scalar(1)}, {1, Scalar(1)}}),
                                    SparseVector::from_unsorted({{1, Scalar(1)}})};
    CoordinateSolver s(3, basis);
    auto c = s.coordinates(SparseVector::from_unsorted({{0, Scalar(2)}, {1, Scalar(5)}}));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->coeff(0), Scalar(2));
    EXPECT_EQ(c->coeff(1), Scalar(3));
    EXPECT_FALSE(s.coordinates(SparseVector::unit(2)));
}

TEST(LinalgProperty, RankAgreesWithDenseOracle) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> size(1, 9);
        auto m = random_matrix(rng, size(rng), size(rng), 35);
        EXPECT_EQ(rank(m), oracle::rank(dense(m)));
        EXPECT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(LinalgProperty, RankNullityAndKernelVectors) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> size(1, 9);
        auto m = random_matrix(rng, size(rng), size(rng), 40);
        auto k = kernel_basis(m);
        EXPECT_EQ(k.dim() + rank(m), m.cols());
        for (const auto& v : k.basis()) EXPECT_TRUE(m.apply(v).empty());
        auto im = image_basis(m);
        EXPECT_EQ(im.dim(), rank(m));
        for (const auto& col : m.column_vectors()) EXPECT_TRUE(im.contains(col));
    }
}

TEST(LinalgProperty, SolverReconstructsCombinations) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<SparseVector> basis;
        Subspace independent(6);
        while (basis.size() < 4) {
            auto v = testing_support::random_vector(rng, 6);
            if (independent.insert(v)) basis.push_back(v);
        }
        CoordinateSolver s(6, basis);
        SparseVector target;
        std::vector<Scalar> coeffs;
        for (const auto& b : basis) {
            coeffs.push_back(testing_support::random_scalar(rng));
            target = axpy(target, coeffs.back(), b);
        }
        auto c = s.coordinates(target);
        ASSERT_TRUE(c);
        for (Index i = 0; i < basis.size(); ++i) EXPECT_EQ(c->coeff(i), coeffs[i]);
    }
}

TEST(LinalgProperty, EchelonFormIsCanonical) {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(rng, 5, 7, 40);
        auto k = kernel_basis(m);
        EXPECT_EQ(Subspace::span(k.ambient_dim(), k.basis()), k);
        // the same span from a shuffled, rescaled generating set
        auto gens = k.basis();
        std::reverse(gens.begin(), gens.end());
        for (auto& g : gens) g.scale(Scalar(trial % 3 + 2));
        if (gens.size() > 1) gens.push_back(axpy(gens[0], Scalar(1), gens[1]));
        EXPECT_EQ(Subspace::span(k.ambient_dim(), gens), k);
    }
}
