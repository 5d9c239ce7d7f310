#include <gtest/gtest.h>

#include "bott/classify.hpp"
#include "bott/errors.hpp"

using namespace bott;
using Kind = ClassificationVerdict::Kind;

TEST(IsProduct, HirzebruchEven) {
    const auto r = is_product_cohomology(hirzebruch_tower(2));
    const auto* w = std::get_if<ProductWitness>(&r);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->twists, (IntegerMatrix{{0, 0}, {1, 0}}));
    EXPECT_EQ(w->generator_change(), (IntegerMatrix{{1, 0}, {1, 1}}));
}

TEST(IsProduct, HirzebruchOdd) {
    const auto r = is_product_cohomology(hirzebruch_tower(1));
    const auto* f = std::get_if<ProductFailure>(&r);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->stage, 2u);
    EXPECT_EQ(f->reason, ProductFailure::Reason::Divisibility);
    EXPECT_EQ(f->detail, "y1");
}

TEST(IsProduct, ThreeStage) {
    const auto r = is_product_cohomology(bott3_tower(2, 2, 0));
    const auto* w = std::get_if<ProductWitness>(&r);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->twists, (IntegerMatrix{{0, 0, 0}, {1, 0, 0}, {1, 0, 0}}));
    EXPECT_TRUE(std::holds_alternative<ProductFailure>(is_product_cohomology(bott3_tower(1, 0, 0))));
}

TEST(IsProduct, ChernResidue) {
    // CP^1 bundle over CP^2 with roots {0, 2x}: the shift by x leaves
    // (1 - x)(1 + x) = 1 - x^2 != 1.
    const auto r = is_product_cohomology(two_stage_tower(2, {2}));
    const auto* f = std::get_if<ProductFailure>(&r);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->reason, ProductFailure::Reason::ChernResidue);
    EXPECT_EQ(f->detail, "1 - y1^2");
}

TEST(Classify2, HirzebruchParity) {
    const auto v = classify_2stage(hirzebruch_tower(1), hirzebruch_tower(3));
    EXPECT_EQ(v.kind, Kind::Diffeomorphic);
    ASSERT_TRUE(v.two_stage);
    EXPECT_EQ(v.two_stage->epsilon, 1);
    EXPECT_EQ(v.two_stage->w, Integer(-1));
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->matrix(), (IntegerMatrix{{1, 0}, {-1, 1}}));

    const auto d = classify_2stage(hirzebruch_tower(1), hirzebruch_tower(2));
    EXPECT_EQ(d.kind, Kind::Distinct);
    EXPECT_FALSE(d.witness);
    ASSERT_TRUE(d.invariant);
    EXPECT_NE(d.invariant->first, d.invariant->second);
}

TEST(Classify2, HigherBase) {
    for (std::size_t n1 : {2u, 3u})
        for (int a = -3; a <= 3; ++a)
            for (int a2 = -3; a2 <= 3; ++a2) {
                const auto v = classify_2stage(two_stage_tower(n1, {a}), two_stage_tower(n1, {a2}));
                EXPECT_EQ(v.kind == Kind::Diffeomorphic, std::abs(a) == std::abs(a2)) << n1 << ' ' << a << ' ' << a2;
            }
}

TEST(Classify2, SwappedDimensions) {
    // Both cohomologically product: CP^2 bundle over CP^1 vs CP^1 bundle over CP^2.
    const auto p = classify_2stage(two_stage_tower(1, {1, 2}), two_stage_tower(2, {0}));
    EXPECT_EQ(p.kind, Kind::Diffeomorphic);
    ASSERT_TRUE(p.witness);
    EXPECT_TRUE(p.witness->map().is_isomorphism());

    const auto q = classify_2stage(two_stage_tower(1, {1, 0}), two_stage_tower(2, {0}));
    EXPECT_EQ(q.kind, Kind::Distinct);
    ASSERT_TRUE(q.invariant);
    EXPECT_EQ(q.invariant->name, "cohomologically product");
    EXPECT_EQ(q.invariant->first, "no");
    EXPECT_EQ(q.invariant->second, "yes");

    const auto r = classify_2stage(two_stage_tower(1, {1, 0}), two_stage_tower(2, {1}));
    EXPECT_EQ(r.kind, Kind::Distinct);
    ASSERT_TRUE(r.invariant);
    EXPECT_EQ(r.invariant->name, "nonzero degree-2 class with vanishing 2-th power");
    EXPECT_EQ(r.invariant->first, "yes");
    EXPECT_EQ(r.invariant->second, "no");
}

TEST(Classify2, DifferentDimensions) {
    const auto v = classify_2stage(hirzebruch_tower(0), two_stage_tower(2, {0}));
    EXPECT_EQ(v.kind, Kind::Distinct);
    ASSERT_TRUE(v.invariant);
    EXPECT_EQ(v.invariant->name, "graded ranks");
    EXPECT_EQ(v.invariant->first, "1,2,1,0");
    EXPECT_EQ(v.invariant->second, "1,2,2,1");
}

TEST(Classify2, RejectsOtherHeights) {
    EXPECT_THROW(classify_2stage(bott3_tower(0, 0, 0), hirzebruch_tower(0)), PreconditionError);
}

TEST(QProduct, Examples) {
    EXPECT_TRUE(q_product_b3(1, 2, 0));
    EXPECT_FALSE(q_product_b3(0, 1, 1));
    EXPECT_TRUE(q_product_b3(2, 1, 1));
}

TEST(IsoSearch, Identity) {
    const auto ring = BottRing::build(bott3_tower(1, -1, 2));
    const auto iso = iso_search(ring, ring, 1);
    ASSERT_TRUE(iso);
    EXPECT_TRUE(iso->map().is_isomorphism());
}

TEST(IsoSearch, FirstInLexOrder) {
    const auto h1 = BottRing::build(hirzebruch_tower(1));
    const auto h3 = BottRing::build(hirzebruch_tower(3));
    const auto iso = iso_search(h3, h1, 3);
    ASSERT_TRUE(iso);
    EXPECT_EQ(iso->matrix(), (IntegerMatrix{{-1, -2}, {1, 3}}));
    // Same answer regardless of the number of workers.
    for (unsigned workers : {1u, 2u, 5u})
        EXPECT_EQ(iso_search(h3, h1, 3, {workers})->matrix(), iso->matrix());
}

TEST(IsoSearch, ParityObstruction) {
    const auto h1 = BottRing::build(hirzebruch_tower(1));
    const auto h2 = BottRing::build(hirzebruch_tower(2));
    for (unsigned bound : {1u, 3u, 6u})
        EXPECT_FALSE(iso_search(h2, h1, bound));
}

TEST(IsoSearch, Preconditions) {
    const auto h = BottRing::build(hirzebruch_tower(0));
    const auto b = BottRing::build(bott3_tower(0, 0, 0));
    const auto c = BottRing::build(two_stage_tower(2, {0}));
    EXPECT_THROW(iso_search(h, b, 1), PreconditionError);
    EXPECT_THROW(iso_search(h, c, 1), PreconditionError);
    const auto big = BottRing::build(product_tower(std::vector<std::size_t>{1, 1, 1, 1, 1}));
    EXPECT_THROW(iso_search(big, big, 30), PreconditionError);
}

TEST(Classify3, Examples) {
    const auto v = classify_3stage(bott3_tower(1, 0, 0), bott3_tower(3, 0, 0), 3);
    EXPECT_EQ(v.kind, Kind::Diffeomorphic);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.bound, 3u);

    const auto t = classify_3stage(bott3_tower(1, 2, -3), bott3_tower(1, -2, 3), 3);
    EXPECT_EQ(t.kind, Kind::Diffeomorphic);

    const auto d = classify_3stage(bott3_tower(0, 0, 0), bott3_tower(0, 1, 1));
    EXPECT_EQ(d.kind, Kind::Distinct);
    ASSERT_TRUE(d.invariant);
    EXPECT_EQ(d.invariant->name, "p1 content");
    EXPECT_EQ(d.invariant->first, "0");
    EXPECT_EQ(d.invariant->second, "2");
}

TEST(Classify3, UnknownAtSmallBound) {
    const auto u = classify_3stage(bott3_tower(-2, -2, 1), bott3_tower(-2, 0, 1), 1);
    EXPECT_EQ(u.kind, Kind::Unknown);
    EXPECT_FALSE(u.witness);
    EXPECT_EQ(u.bound, 1u);
    EXPECT_EQ(classify_3stage(bott3_tower(-2, -2, 1), bott3_tower(-2, 0, 1), 4).kind, Kind::Diffeomorphic);
}

TEST(Classify3, RejectsNonBott) {
    const auto t = validate_tower(RawTower{{{1, IntegerMatrix(1)}, {1, {{0}}}, {2, {{0, 0}, {0, 0}}}}});
    EXPECT_THROW(classify_3stage(t, t), PreconditionError);
    EXPECT_THROW(classify_3stage(hirzebruch_tower(0), hirzebruch_tower(0)), PreconditionError);
}

TEST(InvariantBattery, Values) {
    const auto b = invariant_battery(bott3_tower(0, 1, 1));
    EXPECT_EQ(b.graded_ranks, (std::vector<std::size_t>{1, 3, 3, 1}));
    EXPECT_EQ(b.p1_content, Integer(2));
    const auto p = invariant_battery(bott3_tower(0, 0, 0));
    EXPECT_EQ(p.p1_content, Integer(0));
    // Over Z/2 a class squares to 2(...) = 0 on a product of CP^1s.
    EXPECT_EQ(p.square_zero_mod2, 7u);
}
