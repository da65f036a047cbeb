#include <gtest/gtest.h>

#include "hookforest/formulas.hpp"
#include "hookforest/partitions.hpp"
#include "test_util.hpp"

using namespace hookforest;
using namespace testutil;

using Maps = std::vector<PartitionMap>;

TEST(EnumeratePartitions, Examples) {
    EXPECT_EQ(enumerate_partitions(parse_forest("()"), Labeling({1}), 1), (Maps{{{1}}}));
    EXPECT_EQ(enumerate_partitions(parse_forest("()"), Labeling({-1}), 1), (Maps{{{0}}, {{1}}}));
    // Chain, root labeled 1 (positive) forces f(root) >= 1 and strictness pushes f(child) >= 2.
    EXPECT_TRUE(enumerate_partitions(chain_forest(2), Labeling({1, 2}), 1).empty());
    EXPECT_EQ(enumerate_partitions(chain_forest(2), Labeling({1, 2}), 3), (Maps{{{1, 2}}}));
    // Same edge with a negative root: only strictness on the edge.
    EXPECT_EQ(enumerate_partitions(chain_forest(2), Labeling({-1, 2}), 1), (Maps{{{0, 1}}}));
}

TEST(EnumeratePartitions, MatchesPredicate) {
    auto f = parse_forest("(()())");
    Labeling w({2, -3, 1});
    for (const auto& m : enumerate_partitions(f, w, 5)) {
        EXPECT_TRUE(is_type_b_partition(f, w, m));
        EXPECT_LE(m.weight(), 5u);
    }
}

TEST(PartitionSeries, Examples) {
    EXPECT_EQ(partition_lhs_series(parse_forest("()"), Labeling({1}), 3).poly(), qpoly({0, 1, 1, 1}));
    EXPECT_EQ(partition_lhs_series(parse_forest("()"), Labeling({-1}), 2).poly(), qpoly({1, 1, 1}));
    EXPECT_TRUE(partition_lhs_series(parse_forest("()()"), Labeling({1, 2}), 1).poly().is_zero());
}

TEST(PartitionShift, Examples) {
    EXPECT_EQ(partition_shift(parse_forest("()"), Labeling({1}), {{1}}), (PartitionMap{{0}}));
    EXPECT_EQ(partition_shift(parse_forest("()"), Labeling({-1}), {{3}}), (PartitionMap{{3}}));
    // Chain, root 1, child 2: both vertices are type B descents.
    EXPECT_EQ(partition_shift(chain_forest(2), Labeling({1, 2}), {{1, 2}}), (PartitionMap{{0, 0}}));
    EXPECT_THROW(partition_shift(chain_forest(2), Labeling({1, 2}), {{0, 1}}), std::invalid_argument);
}

TEST(SigmaCompatible, Conditions) {
    std::vector<std::uint32_t> v{2, 1};
    EXPECT_TRUE(sigma_compatible(SignedPermutation{2, 1}, v));
    std::vector<std::uint32_t> flat{1, 1};
    EXPECT_FALSE(sigma_compatible(SignedPermutation{2, 1}, flat));
    EXPECT_TRUE(sigma_compatible(SignedPermutation{1, 2}, flat));
    std::vector<std::uint32_t> zero{0};
    EXPECT_FALSE(sigma_compatible(SignedPermutation{1}, zero));
    EXPECT_TRUE(sigma_compatible(SignedPermutation{-1}, zero));
}

TEST(Dec1, Examples) {
    EXPECT_TRUE(check_decomposition_dec1(parse_forest("()"), Labeling({1}), 2).pass);
    EXPECT_TRUE(check_decomposition_dec1(parse_forest("()()"), Labeling({1, -2}), 2).pass);
    EXPECT_TRUE(check_decomposition_dec1(chain_forest(2), Labeling({2, -1}), 3).pass);
}

TEST(PartitionChecks, AllSmallLabelings) {
    for (std::size_t n = 0; n <= 2; ++n)
        for (const auto& f : enumerate_forests(n))
            for (const auto& w : enumerate_labelings(f, SignMode::signed_)) {
                const std::string tag = render_forest(f) + " " + render_labeling(w);
                EXPECT_EQ(partition_lhs_series(f, w, 8), rhs_partition_gf(f, w, 8)) << tag;
                EXPECT_TRUE(check_partition_shift(f, w, 8).pass) << tag;
                EXPECT_TRUE(check_partition_extension_series(f, w, 8).pass) << tag;
                EXPECT_TRUE(check_partition_relation(f, w).pass) << tag;
            }
}

TEST(Stanley, Specialization) {
    for (const char* s : {"()", "(())", "()()", "(()())"})
        EXPECT_TRUE(check_stanley_specialization(parse_forest(s), 8).pass) << s;
}
