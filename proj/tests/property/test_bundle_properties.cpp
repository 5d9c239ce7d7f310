#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "bott/bundle.hpp"
#include "corpus.hpp"
#include "oracle.hpp"
#include "seed.hpp"

using namespace bott;

namespace {

// Total Chern class of the bundle, expanded and truncated by the oracle.
oracle::Poly chern_oracle(const LineBundleSum& e) {
    const auto ring = oracle::make_ring(product_tower(e.base_dims()));
    const std::size_t k = e.factors();
    oracle::Poly total = oracle::constant(k, Integer(1));
    for (const auto& row : e.exponents())
        total = oracle::ring_mul(ring, total, oracle::add(oracle::constant(k, Integer(1)), oracle::linear(row)));
    return total;
}

LineBundleSum permuted(const LineBundleSum& e, std::mt19937_64& rng) {
    std::vector<std::size_t> cols(e.factors());
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<std::size_t> dims;
    for (std::size_t j : cols)
        dims.push_back(e.base_dims()[j]);
    IntegerMatrix rows;
    for (const auto& r : e.exponents()) {
        IntegerVector row;
        for (std::size_t j : cols)
            row.push_back(r[j]);
        rows.push_back(std::move(row));
    }
    std::shuffle(rows.begin(), rows.end(), rng);
    return LineBundleSum(std::move(dims), std::move(rows));
}

} // namespace

TEST(BundleProperties, ChernMatchesOracle) {
    auto rng = bott_test::make_rng(31);
    const auto corpus = bott_test::bundle_corpus(rng);
    for (std::size_t i = 0; i < corpus.size(); i += 7)
        EXPECT_TRUE(oracle::same(chern_oracle(corpus[i]), total_chern_bundle(corpus[i])));
}

TEST(BundleProperties, TrivialBundleStructure) {
    auto rng = bott_test::make_rng(32);
    std::size_t sub_stable = 0, case_one = 0;
    for (const auto& e : bott_test::bundle_corpus(rng)) {
        if (!is_trivial(e))
            continue;
        const auto& a = e.exponents();
        const auto& dims = e.base_dims();
        for (std::size_t j = 0; j < e.factors(); ++j) {
            Integer sum = 0;
            for (const auto& row : a)
                sum += row[j];
            EXPECT_TRUE(sum.is_zero());
        }
        if (e.rank() >= e.base_dim())
            continue;
        ++sub_stable;
        const bool all_lines = std::all_of(dims.begin(), dims.end(), [](std::size_t n) { return n == 1; });
        for (std::size_t j = 0; j < e.factors(); ++j) {
            if (dims[j] >= 2) {
                ++case_one;
                for (const auto& row : a)
                    EXPECT_TRUE(row[j].is_zero());
            }
            for (std::size_t j2 = j + 1; all_lines && j2 < e.factors(); ++j2) {
                Integer dot = 0;
                for (const auto& row : a)
                    dot += row[j] * row[j2];
                EXPECT_TRUE(dot.is_zero());
            }
        }
        const auto r = find_zero_column(e);
        ASSERT_FALSE(r.trace.empty());
        EXPECT_EQ(r.column, r.trace.front().column);
        for (const auto& row : a)
            EXPECT_TRUE(row[r.column - 1].is_zero());
        // The reduction stops once the remaining base is covered.
        std::size_t remaining = e.base_dim();
        for (const auto& step : r.trace)
            remaining -= e.base_dims()[step.column - 1];
        EXPECT_TRUE(remaining <= e.rank() || r.trace.size() == e.factors());
    }
    EXPECT_GT(sub_stable, 0u);
    EXPECT_GT(case_one, 0u);
}

TEST(BundleProperties, SmallestZeroColumn) {
    auto rng = bott_test::make_rng(33);
    for (const auto& e : bott_test::bundle_corpus(rng)) {
        if (e.rank() >= e.base_dim() || !is_trivial(e))
            continue;
        const std::size_t c = find_zero_column(e).column;
        for (std::size_t j = 0; j + 1 < c; ++j) {
            const bool zero = std::all_of(e.exponents().begin(), e.exponents().end(),
                                          [j](const IntegerVector& r) { return r[j].is_zero(); });
            EXPECT_FALSE(zero);
        }
    }
}

TEST(BundleProperties, PermutationInvariance) {
    auto rng = bott_test::make_rng(34);
    const auto corpus = bott_test::bundle_corpus(rng);
    for (std::size_t i = 0; i < corpus.size(); i += 3) {
        const auto& e = corpus[i];
        const auto p = permuted(e, rng);
        EXPECT_EQ(is_trivial(p), is_trivial(e));
        std::vector<std::size_t> rows_only(e.factors());
        IntegerMatrix shuffled = e.exponents();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const LineBundleSum r(e.base_dims(), shuffled);
        EXPECT_TRUE(bundles_isomorphic(e, r));
        EXPECT_TRUE(bundles_isomorphic(r, e));
        EXPECT_TRUE(bundles_isomorphic(e, e));
    }
}

TEST(BundleProperties, TwistByTrivialAddsNothing) {
    auto rng = bott_test::make_rng(35);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int n = 0; n < 100; ++n) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        std::vector<std::size_t> dims(k);
        for (auto& d : dims)
            d = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        IntegerVector l(k);
        for (auto& v : l)
            v = entry(rng);
        IntegerVector neg(k);
        for (std::size_t j = 0; j < k; ++j)
            neg[j] = -l[j];
        // L + L^{-1} has c = 1 - c_1(L)^2, trivial exactly when c_1(L)^2 = 0.
        const LineBundleSum e(dims, {l, neg});
        const auto ring = product_ring(dims);
        const auto c1 = ring.linear(l);
        EXPECT_EQ(is_trivial(e), (c1 * c1).is_zero());
    }
}
