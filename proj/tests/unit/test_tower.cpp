#include <gtest/gtest.h>

#include "bott/errors.hpp"
#include "bott/tower.hpp"

using namespace bott;

namespace {

RawStage raw(long n, IntegerMatrix rows) { return RawStage{Integer(n), std::move(rows)}; }

} // namespace

TEST(ValidateTower, AcceptsHirzebruch) {
    const auto t = validate_tower(RawTower{{raw(1, IntegerMatrix(1)), raw(1, {{2}})}});
    EXPECT_EQ(t.height(), 2u);
    EXPECT_EQ(t, hirzebruch_tower(2));
    EXPECT_TRUE(t.is_bott());
    EXPECT_EQ(t.summand(2, 0), (IntegerVector{0, 0}));
    EXPECT_EQ(t.summand(2, 1), (IntegerVector{2, 0}));
}

TEST(ValidateTower, AcceptsCP2BundleOverCP1) {
    const auto t = validate_tower(RawTower{{raw(1, IntegerMatrix(1)), raw(2, {{1}, {3}})}});
    EXPECT_EQ(t.dims(), (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(t.complex_dim(), 3u);
    EXPECT_FALSE(t.is_bott());
}

TEST(ValidateTower, RejectsColumnsOnFirstStage) {
    try {
        validate_tower(RawTower{{raw(2, {{1, 1}})}});
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.where(), "stages[0].summands");
    }
    try {
        validate_tower(RawTower{{raw(1, {{1}})}});
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.where(), "stages[0].summands[0]");
    }
}

TEST(ValidateTower, RejectsBadDimensions) {
    EXPECT_THROW(validate_tower(RawTower{}), ValidationError);
    EXPECT_THROW(validate_tower(RawTower{{raw(0, {})}}), ValidationError);
    EXPECT_THROW(validate_tower(RawTower{{raw(-1, {})}}), ValidationError);
    EXPECT_THROW(validate_tower(RawTower{{raw(1, IntegerMatrix(1)), raw(1, {{1, 2}})}}), ValidationError);
}

TEST(NormalizeStage, SubtractsFirstRow) {
    EXPECT_EQ(normalize_stage({{2}, {3}, {5}}), (StageSpec{2, {{1}, {3}}}));
    EXPECT_EQ(normalize_stage({{0}, {7}}), (StageSpec{1, {{7}}}));
    EXPECT_EQ(normalize_stage({{1, 1}, {1, 1}}), (StageSpec{1, {{0, 0}}}));
    EXPECT_THROW(normalize_stage({{1}}), PreconditionError);
    EXPECT_THROW(normalize_stage({{1}, {1, 2}}), PreconditionError);
}

TEST(DualizeStage, NegatesWithFirstRowConvention) {
    EXPECT_EQ(dualize_stage(StageSpec{1, {{4}}}), (StageSpec{1, {{-4}}}));
    EXPECT_EQ(dualize_stage(StageSpec{1, {{0}}}), (StageSpec{1, {{0}}}));
    // {0, 1, 3} -> {0, -1, -3}; the trivial summand stays first.
    EXPECT_EQ(dualize_stage(StageSpec{2, {{1}, {3}}}), (StageSpec{2, {{-1}, {-3}}}));
    const StageSpec s{2, {{1, -2}, {0, 5}}};
    EXPECT_EQ(dualize_stage(dualize_stage(s)), s);
}

TEST(DualizeTowerStage, NegatesLaterColumns) {
    EXPECT_EQ(dualize_tower_stage(bott3_tower(1, 2, 3), 2), bott3_tower(-1, 2, -3));
    EXPECT_EQ(dualize_tower_stage(bott3_tower(1, 2, 3), 3), bott3_tower(1, -2, -3));
    EXPECT_EQ(dualize_tower_stage(bott3_tower(1, 2, 3), 1), bott3_tower(-1, -2, 3));
    EXPECT_THROW(dualize_tower_stage(bott3_tower(0, 0, 0), 4), std::out_of_range);
}

TEST(ProductTower, ZeroExponents) {
    const std::vector<std::size_t> ones{1, 1, 1};
    const auto t = product_tower(ones);
    EXPECT_EQ(t, bott3_tower(0, 0, 0));
    const std::vector<std::size_t> two{2};
    EXPECT_EQ(product_tower(two).dims(), two);
    const std::vector<std::size_t> mixed{1, 2};
    EXPECT_EQ(product_tower(mixed).stage(2).summand_exponents, (IntegerMatrix{{0}, {0}}));
    EXPECT_THROW(product_tower(std::vector<std::size_t>{}), PreconditionError);
}

TEST(TwoStageTower, Shape) {
    const auto t = two_stage_tower(3, {2, -1});
    EXPECT_EQ(t.dims(), (std::vector<std::size_t>{3, 2}));
    EXPECT_EQ(t.stage(2).summand_exponents, (IntegerMatrix{{2}, {-1}}));
}

TEST(LineBundleSum, Shape) {
    const LineBundleSum e({1, 2}, {{1, 0}, {-1, 0}});
    EXPECT_EQ(e.rank(), 2u);
    EXPECT_EQ(e.factors(), 2u);
    EXPECT_EQ(e.base_dim(), 3u);
    const auto d = e.drop_factor(1);
    EXPECT_EQ(d.base_dims(), (std::vector<std::size_t>{1}));
    EXPECT_EQ(d.exponents(), (IntegerMatrix{{1}, {-1}}));
    EXPECT_THROW(LineBundleSum({0}, {{1}}), ValidationError);
    EXPECT_THROW(LineBundleSum({1}, {}), ValidationError);
    EXPECT_THROW(LineBundleSum({1, 1}, {{1}}), ValidationError);
}
