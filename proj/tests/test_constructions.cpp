#include "infhom/constructions.hpp"
#include "infhom/errors.hpp"

#include "classical.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace infhom;
using testing_support::load_ainfty;
using testing_support::load_document;

namespace {

std::uint32_t u(Index i) { return static_cast<std::uint32_t>(i); }

SparseVector random_matrix(std::mt19937& rng, std::size_t n, std::size_t base_dim) {
    return testing_support::random_vector(rng, n * n * base_dim);
}

/// Kernel of the multitrace on one block, against the span of the gl_n(K) moves.
void expect_multitrace_faithful(const AInftyAlgebra& base, std::size_t n, int max_t) {
    auto g = gl(base, n, false);
    const auto& sp = *g.lie.space;
    WeightCap cap{static_cast<std::size_t>(max_t) + 1, max_t + 1};
    std::vector<Coderivation> moves;
    for (const auto& x : g.scalar_subalgebra())
        moves.push_back(extend_coderivation(make_inner(g.lie, insertion(g.lie, x), cap).d, Flavor::symmetric));
    for (int t = 1; t <= max_t; ++t) {
        auto words = words_of_degree(sp, Flavor::symmetric, t, static_cast<std::size_t>(t));
        std::map<Word, Index> index;
        for (Index i = 0; i < words.size(); ++i) index[words[i]] = i;
        std::map<std::pair<Permutation, Word>, Index> keys;
        std::vector<SparseVector> images;
        for (const Word& w : words) {
            std::vector<std::pair<Index, Scalar>> terms;
            for (const auto& [k, c] : multitrace(Element::single(w), n, sp, g.base_dim())) {
                auto it = keys.emplace(k, keys.size()).first;
                terms.emplace_back(it->second, c);
            }
            images.push_back(SparseVector::from_unsorted(std::move(terms)));
        }
        const Index kernel_dim = words.size() - rank(SparseMatrix::from_columns(keys.size() + 1, images));
        Subspace moved(words.size());
        for (const auto& m : moves)
            for (const Word& w : words) {
                const Element e = m.apply(w);
                std::vector<std::pair<Index, Scalar>> terms;
                for (const auto& [v, c] : e.terms()) terms.emplace_back(index.at(v), c);
                auto vec = SparseVector::from_unsorted(std::move(terms));
                moved.insert(vec);
                EXPECT_TRUE(multitrace(e, n, sp, g.base_dim()).empty());
            }
        EXPECT_EQ(kernel_dim, moved.dim()) << g.lie.name << " degree " << t;
    }
}

}  // namespace

TEST(LieIfy, AssociativeGivesTheCommutator) {
    auto a = load_ainfty("upper2.alg");
    auto table = to_associative_table(load_document("upper2.alg"));
    auto l = lie_ify(a);
    for (Index x = 0; x < 3; ++x)
        for (Index y = 0; y < 3; ++y) {
            auto expected = axpy(table.multiply(x, y), Scalar(-1), table.multiply(y, x)).scaled(Scalar(-1));
            EXPECT_EQ(l.ell.value(Word{u(x), u(y)}), expected);
        }
}

TEST(LieIfy, AssociativeHasOnlyABinaryBracket) {
    for (const char* name : {"K.alg", "dual.alg", "upper2.alg"}) {
        auto l = lie_ify(load_ainfty(name));
        for (auto k : l.ell.arities()) EXPECT_EQ(k, 2u) << name;
    }
    EXPECT_EQ(lie_ify(load_ainfty("upper2.alg")).ell.arities(), std::set<std::size_t>{2});
}

TEST(LieIfy, OfTensorWithMatrixUnitsIsGl) {
    for (const char* name : {"dual.alg", "m3only.alg", "dga.alg"}) {
        auto a = load_ainfty(name);
        EXPECT_EQ(lie_ify(tensor_with_associative(a, matrix_units(2))).ell, gl(a, 2).lie.ell) << name;
    }
}

TEST(LieIfy, CommutativeGivesAbelian) {
    EXPECT_TRUE(lie_ify(load_ainfty("dual.alg")).ell.is_zero());
    EXPECT_TRUE(lie_ify(load_ainfty("K.alg")).ell.is_zero());
}

TEST(LieIfy, DgaKeepsTheDifferential) {
    auto a = load_ainfty("dga.alg");
    auto l = lie_ify(a);
    EXPECT_EQ(l.ell.component(1).values(), a.m.component(1).values());
    EXPECT_TRUE(passed(check_linfty(l, WeightCap{5, 100})));
}

TEST(LieIfy, HigherOperationsAreCertified) {
    auto a = load_ainfty("m3only.alg");
    auto l = lie_ify(a);
    EXPECT_TRUE(passed(check_linfty(l, WeightCap{5, 100})));
    // p is odd after suspension, so (p, p, p) vanishes symmetrically.
    EXPECT_TRUE(l.ell.is_zero());
    auto m2 = matrix_algebra(a, 2);
    auto l2 = lie_ify(m2);
    EXPECT_EQ(l2.ell.arities(), std::set<std::size_t>{3});
}

TEST(Tensor, WithTheGroundFieldIsTheSameStructure) {
    for (const char* name : {"dual.alg", "upper2.alg", "m3only.alg", "dga.alg"}) {
        auto a = load_ainfty(name);
        auto t = tensor_with_associative(a, matrix_units(1));
        EXPECT_EQ(t.m.values(), a.m.values()) << name;
        EXPECT_EQ(t.space->label(0), a.space->label(0) + ".E11");
    }
}

TEST(Tensor, GroundFieldTimesMatricesIsTheMatrixAlgebra) {
    auto t = tensor_with_associative(load_ainfty("K.alg"), matrix_units(3));
    auto m = from_associative(matrix_units(3));
    EXPECT_EQ(t.m.values(), m.m.values());
    // the unit E11 + E22 + E33 is not a basis element
    EXPECT_FALSE(t.unit.has_value());
    EXPECT_TRUE(tensor_with_associative(load_ainfty("K.alg"), matrix_units(1)).unit.has_value());
}

TEST(Tensor, MatricesOverAnM3OnlyAlgebraAreCertified) {
    auto a = matrix_algebra(load_ainfty("m3only.alg"), 2);
    EXPECT_EQ(a.m.arities(), std::set<std::size_t>{3});
    EXPECT_FALSE(a.m.is_zero());
    EXPECT_TRUE(passed(check_stasheff(a, WeightCap{5, 100})));
}

TEST(Tensor, RejectsGradedOrNonAssociativeFactors) {
    auto a = load_ainfty("K.alg");
    EXPECT_THROW(tensor_with_associative(a, to_associative_table(load_document("dga.alg"))), ValidationError);
    EXPECT_THROW(tensor_with_associative(a, to_associative_table(load_document("nonassoc.alg"))), AxiomViolation);
}

TEST(FindUnit, LocatesOrReportsNone) {
    auto unit = find_unit(matrix_units(2));
    ASSERT_TRUE(unit);
    EXPECT_EQ(*unit, SparseVector::from_unsorted({{0, Scalar(1)}, {3, Scalar(1)}}));
    EXPECT_FALSE(find_unit(to_associative_table(load_document("nonassoc.alg"))).has_value());
}

TEST(Gl, SizeOneIsTheLieIfiedBase) {
    for (const char* name : {"dual.alg", "upper2.alg"}) {
        auto a = load_ainfty(name);
        EXPECT_EQ(gl(a, 1).lie.ell.values(), lie_ify(a).ell.values()) << name;
    }
}

TEST(Gl, BracketIsMinusTheMatrixCommutator) {
    auto g = gl(load_ainfty("K.alg"), 3);
    auto o = oracle::gl(3);
    for (Index x = 0; x < 9; ++x)
        for (Index y = 0; y < 9; ++y) {
            std::vector<std::pair<Index, Scalar>> terms;
            for (Index k = 0; k < 9; ++k) terms.emplace_back(k, -o.c[x][y][k]);
            EXPECT_EQ(g.lie.ell.value(Word{u(x), u(y)}), SparseVector::from_unsorted(terms));
        }
    EXPECT_EQ(matrix_unit_label(3, 0, 1), "E12");
    EXPECT_EQ(matrix_unit_label(12, 10, 1), "E11_2");
}

TEST(Gl, ScalarSubalgebra) {
    auto g = gl(load_ainfty("dual.alg"), 2);
    auto h = g.scalar_subalgebra();
    ASSERT_EQ(h.size(), 4u);
    EXPECT_EQ(h[1], SparseVector::unit(g.index(0, 1, 0)));
    EXPECT_FALSE(subalgebra_witness(g.lie, h));
}

TEST(Morphisms, CornerInclusionIsStrict) {
    for (const char* name : {"K.alg", "dual.alg"}) {
        auto a = load_ainfty(name);
        for (std::size_t p = 1; p <= 2; ++p) {
            auto from = gl(a, p);
            auto to = gl(a, p + 1);
            EXPECT_FALSE(strict_morphism_witness(corner_inclusion(p, p + 1, from.base_dim()), from.lie, to.lie)) << name;
        }
    }
}

TEST(Morphisms, NonMorphismIsDetected) {
    auto a = load_ainfty("K.alg");
    auto g2 = gl(a, 2);
    SparseMatrix swap(4, 4, {{1, 0, Scalar(1)}, {0, 1, Scalar(1)}, {2, 2, Scalar(1)}, {3, 3, Scalar(1)}});
    EXPECT_TRUE(strict_morphism_witness(swap, g2.lie, g2.lie));
}

TEST(BlockSum, InterleavesTheEntries) {
    // a_11 -> c_11 and b_11 -> c_22 in gl_2.
    auto s = block_plus(SparseVector::unit(0), 1, SparseVector::unit(0), 1, 1);
    EXPECT_EQ(s, SparseVector::from_unsorted({{0, Scalar(1)}, {3, Scalar(1)}}));
    // a_12 -> c_13 and b_21 -> c_42 in gl_4.
    auto m = block_plus_map(2, 2, 1);
    EXPECT_EQ(m.rows(), 16u);
    EXPECT_EQ(m.apply(SparseVector::unit(1)), SparseVector::unit(2));
    EXPECT_EQ(m.apply(SparseVector::unit(4 + 2)), SparseVector::unit(13));
    EXPECT_EQ(block_plus_map(1, 3, 2).rows(), 36u * 2);
}

TEST(BlockSum, IsAStrictMorphismFromTheDirectSum) {
    auto a = load_ainfty("dual.alg");
    for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 2}}) {
        auto gp = gl(a, p);
        auto gq = gl(a, q);
        auto target = gl(a, 2 * std::max(p, q));
        EXPECT_FALSE(strict_morphism_witness(block_plus_map(p, q, 2), direct_sum(gp.lie, gq.lie), target.lie))
            << p << "," << q;
    }
}

TEST(TraceProperty, IsAdditiveOverBlockSums) {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t p = 1 + trial % 3, q = 1 + (trial / 3) % 3, d = 2;
        auto x = random_matrix(rng, p, d);
        auto y = random_matrix(rng, q, d);
        auto s = block_plus(x, p, y, q, d);
        EXPECT_EQ(trace(s, 2 * std::max(p, q), d), axpy(trace(x, p, d), Scalar(1), trace(y, q, d)));
        EXPECT_EQ(trace(block_plus(y, q, x, p, d), 2 * std::max(p, q), d), trace(s, 2 * std::max(p, q), d));
    }
}

TEST(TraceProperty, BlockSumIsAssociativeUpToCommutators) {
    std::mt19937 rng(53);
    const std::size_t d = 2;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t p = 1 + trial % 2, q = 1 + (trial / 2) % 2, r = 1 + (trial / 4) % 2;
        auto a = random_matrix(rng, p, d);
        auto b = random_matrix(rng, q, d);
        auto c = random_matrix(rng, r, d);
        const std::size_t pq = 2 * std::max(p, q), qr = 2 * std::max(q, r);
        auto left = block_plus(block_plus(a, p, b, q, d), pq, c, r, d);
        auto right = block_plus(a, p, block_plus(b, q, c, r, d), qr, d);
        const std::size_t nl = 2 * std::max(pq, r), nr = 2 * std::max(p, qr);
        EXPECT_EQ(trace(left, nl, d), trace(right, nr, d));
        // after the corner inclusion into a common size the difference is a commutator
        const std::size_t big = std::max(nl, nr);
        auto diff = axpy(corner_inclusion(nl, big, d).apply(left), Scalar(-1), corner_inclusion(nr, big, d).apply(right));
        EXPECT_TRUE(trace(diff, big, d).empty());
    }
}

TEST(TraceProperty, CommutatorSubspaceIsTheTracelessPart) {
    std::mt19937 rng(52);
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t d = 2;
        Subspace span = Subspace::span(n * n * d, commutator_generators(n, d));
        for (int trial = 0; trial < 20; ++trial) {
            auto x = random_matrix(rng, n, d);
            if (trial % 2 == 0) {
                // make it traceless by correcting the (0,0) entry
                auto t = trace(x, n, d);
                for (const auto& [a, c] : t.entries) x = axpy(x, -c, SparseVector::unit(a));
            }
            const bool traceless = trace(x, n, d).empty();
            EXPECT_EQ(in_commutator_subspace(x, n, d), traceless);
            EXPECT_EQ(span.contains(x), traceless);
        }
    }
    EXPECT_TRUE(in_commutator_subspace(SparseVector::unit(1), 2, 1));
    EXPECT_FALSE(in_commutator_subspace(SparseVector::unit(0), 2, 1));
}

TEST(Multitrace, KernelIsSpannedByTheCoinvariantMovesOverTheGroundField) {
    expect_multitrace_faithful(load_ainfty("K.alg"), 2, 2);
    expect_multitrace_faithful(load_ainfty("K.alg"), 3, 3);
}

TEST(Multitrace, KernelIsSpannedByTheCoinvariantMovesOverDualNumbers) {
    expect_multitrace_faithful(load_ainfty("dual.alg"), 2, 2);
}

TEST(PushForward, OfAWordUnderTheIdentity) {
    auto g = gl(load_ainfty("K.alg"), 2);
    Element e = Element::single(Word{0, 1});
    EXPECT_EQ(push_forward(SparseMatrix::identity(4), e, *g.lie.space), e);
}
