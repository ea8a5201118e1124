#include "infhom/lqt.hpp"
#include "infhom/errors.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace infhom;
using testing_support::load_ainfty;

namespace {

BettiTable exact_table(std::vector<Index> dims) {
    BettiTable t;
    t.exact.assign(dims.size(), true);
    t.dims = std::move(dims);
    return t;
}

void expect_all_match(const LQTReport& r) {
    for (const auto& d : r.degrees) {
        EXPECT_EQ(d.dims, Verdict::match) << "degree " << d.degree;
        EXPECT_EQ(d.primitives, Verdict::match) << "degree " << d.degree;
    }
}

}  // namespace

TEST(ExpandExterior, OddGeneratorsFromTheGroundField) {
    auto t = expand_exterior(exact_table({1, 0, 1, 0, 1}), 5);
    EXPECT_EQ(t.dims, (std::vector<Index>{1, 1, 0, 1, 1, 1}));
}

TEST(ExpandExterior, DualNumbers) {
    EXPECT_EQ(expand_exterior(exact_table({2, 0, 2}), 3).dims, (std::vector<Index>{1, 2, 1, 2}));
}

TEST(ExpandExterior, EvenGeneratorsArePolynomial) {
    EXPECT_EQ(expand_exterior(exact_table({0, 1, 0, 0, 0}), 5).dims, (std::vector<Index>{1, 0, 1, 0, 1, 0}));
}

TEST(ExpandExterior, ZeroAndInexactInputs) {
    EXPECT_EQ(expand_exterior(exact_table({0, 0, 0}), 3).dims, (std::vector<Index>{1, 0, 0, 0}));
    BettiTable t = exact_table({1, 0, 1});
    t.exact[1] = false;
    EXPECT_THROW(expand_exterior(t, 3), ValidationError);
}

TEST(CountSymmetricWords, MatchesEnumeration) {
    GradedSpace s({{"a", 0}, {"b", 1}, {"c", 0}, {"d", 2}});
    for (int t = 0; t <= 7; ++t)
        for (std::size_t w = 0; w <= 5; ++w)
            EXPECT_EQ(count_symmetric_words(s, t, w), words_of_degree(s, Flavor::symmetric, t, w).size()) << t << "," << w;
}

TEST(Hopf, GlThreeOfTheGroundField) {
    auto r = hopf_product_on_homology(load_ainfty("K.alg"), 3, WeightCap{5, 4});
    EXPECT_TRUE(r.commutative);
    EXPECT_TRUE(r.associative);
    EXPECT_TRUE(r.unital);
    EXPECT_GT(r.pairs_checked, 0u);
    EXPECT_GT(r.triples_checked, 0u);
    EXPECT_FALSE(r.table.empty());
}

TEST(Hopf, ProductOfPrimitivesIsNotPrimitive) {
    // x1 . x3 lives in degree 4, which the table reaches from n = 4 on.
    auto r = hopf_product_on_homology(load_ainfty("K.alg"), 4, WeightCap{5, 4});
    EXPECT_TRUE(r.commutative && r.associative && r.unital);
    EXPECT_GT(r.primitive_products_checked, 0u);
    EXPECT_EQ(r.primitive_products_primitive, 0u);
}

TEST(Hopf, GlTwoOfDualNumbers) {
    auto r = hopf_product_on_homology(load_ainfty("dual.alg"), 2, WeightCap{4, 3});
    EXPECT_TRUE(r.commutative && r.associative && r.unital);
    EXPECT_GT(r.pairs_checked, 0u);
}

TEST(Hopf, NeedsCoinvariants) {
    auto a = load_ainfty("K.alg");
    auto g = gl(a, 2);
    auto h = lie_homology(g.lie, WeightCap{3, 2});
    EXPECT_THROW(hopf_product_on_homology(g, h, homology_coproduct(h)), ValidationError);
}

TEST(VerifyLqt, GroundField) {
    LQTOptions o;
    o.sizes = {3, 4};
    o.max_degree = 4;
    auto r = verify_lqt(load_ainfty("K.alg"), o);
    expect_all_match(r);
    std::vector<Index> stable;
    for (const auto& d : r.degrees) stable.push_back(d.stable_dim.value_or(999));
    EXPECT_EQ(stable, (std::vector<Index>{1, 1, 0, 1, 1}));
    EXPECT_EQ(r.exterior.dims, stable);
    EXPECT_EQ(r.degrees[3].primitive_dim, std::optional<Index>(1));
    for (const auto& size : r.sizes)
        for (std::size_t k = 0; k < size.dims.size(); ++k) EXPECT_LE(size.primitive_dims[k], size.dims[k]);
    ASSERT_TRUE(r.sizes[0].hopf);
    EXPECT_TRUE(r.sizes[0].hopf->commutative);
}

TEST(VerifyLqt, DualNumbers) {
    LQTOptions o;
    o.sizes = {3, 4};
    o.max_degree = 3;
    o.hopf_checks = false;
    auto r = verify_lqt(load_ainfty("dual.alg"), o);
    expect_all_match(r);
    EXPECT_EQ(r.exterior.dims, (std::vector<Index>{1, 2, 1, 2}));
}

TEST(VerifyLqt, AcyclicDgaHasTrivialHomology) {
    LQTOptions o;
    o.sizes = {2, 3};
    o.max_degree = 3;
    auto r = verify_lqt(load_ainfty("dga.alg"), o);
    for (const auto& s : r.sizes) EXPECT_EQ(s.dims, (std::vector<Index>{1, 0, 0, 0}));
    expect_all_match(r);
}

TEST(VerifyLqt, SmallSizesAreUnstableAndCarryUnreducedDims) {
    LQTOptions o;
    o.sizes = {1, 2};
    o.max_degree = 3;
    auto r = verify_lqt(load_ainfty("K.alg"), o);
    EXPECT_EQ(r.degrees[3].dims, Verdict::unstable);
    EXPECT_EQ(r.degrees[0].dims, Verdict::match);
    for (const auto& s : r.sizes) {
        ASSERT_TRUE(s.unreduced_dims);
        EXPECT_EQ(*s.unreduced_dims, s.dims);
    }
}

TEST(VerifyLqt, ParallelRunIsIdentical) {
    LQTOptions o;
    o.sizes = {2, 3};
    o.max_degree = 3;
    auto one = to_json(verify_lqt(load_ainfty("dual.alg"), o)).dump();
    o.jobs = 3;
    auto many = to_json(verify_lqt(load_ainfty("dual.alg"), o)).dump();
    o.jobs = 1;
    EXPECT_EQ(one.find("\"jobs\""), std::string::npos);
    EXPECT_EQ(one, many);
}

TEST(VerifyLqt, BudgetAndUnitAreEnforced) {
    LQTOptions o;
    o.sizes = {3};
    o.max_degree = 3;
    o.block_budget = 10;
    EXPECT_THROW(verify_lqt(load_ainfty("K.alg"), o), ResourceExceeded);
    o.block_budget = 1000;
    EXPECT_THROW(verify_lqt(load_ainfty("upper2.alg"), o), ValidationError);
}

TEST(VerifyLqt, TextReport) {
    LQTOptions o;
    o.sizes = {1, 2};
    o.max_degree = 2;
    auto text = to_text(verify_lqt(load_ainfty("K.alg"), o));
    EXPECT_NE(text.find("MATCH"), std::string::npos);
    EXPECT_NE(text.find("HC_k-1"), std::string::npos);
}
