#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hookforest/forest.hpp"
#include "hookforest/signed_permutation.hpp"
#include "test_util.hpp"

using namespace hookforest;
using namespace testutil;

TEST(ParseForest, SingleVertex) {
    auto f = parse_forest("()");
    EXPECT_EQ(f.size(), 1u);
    EXPECT_TRUE(f.is_root(0));
}

TEST(ParseForest, Chain) {
    auto f = parse_forest("(())");
    ASSERT_EQ(f.size(), 2u);
    EXPECT_TRUE(f.is_root(0));
    EXPECT_EQ(f.parent(1), 0u);
}

TEST(ParseForest, TreePlusIsolated) {
    auto f = parse_forest("(()())()");
    EXPECT_EQ(f.size(), 4u);
    EXPECT_EQ(f.hooks(), (std::vector<std::size_t>{3, 1, 1, 1}));
    EXPECT_EQ(f.roots(), (std::vector<Vertex>{0, 3}));
}

TEST(ParseForest, EmptyString) { EXPECT_TRUE(parse_forest("").empty()); }

TEST(ParseForest, RoundTrip) {
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& f : enumerate_forests(n)) EXPECT_EQ(parse_forest(render_forest(f)), f);
}

TEST(ParseForest, ErrorsCarryOffset) {
    try {
        parse_forest("(()");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 3u);
    }
    try {
        parse_forest("())(");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 2u);
    }
    EXPECT_THROW(parse_forest("(x)"), ParseError);
}

TEST(ParseParentArray, Basic) {
    EXPECT_EQ(parse_parent_array("[0,1,1,0]"), parse_forest("(()())()"));
    EXPECT_EQ(parse_forest_any("[0,1]"), parse_forest("(())"));
    EXPECT_EQ(parse_forest_any("(())"), parse_forest("(())"));
    EXPECT_THROW(parse_parent_array("[2,1]"), ParseError);
}

TEST(ForestCtor, RejectsNonPreorder) {
    EXPECT_THROW(Forest({1, kNoParent}), std::invalid_argument);
}

TEST(HookLengths, Examples) {
    EXPECT_EQ(hook_lengths(parse_forest("()")), (std::vector<std::size_t>{1}));
    EXPECT_EQ(hook_lengths(parse_forest("(())")), (std::vector<std::size_t>{2, 1}));
    EXPECT_EQ(hook_lengths(parse_forest("(()())")), (std::vector<std::size_t>{3, 1, 1}));
}

TEST(StrictAncestor, Examples) {
    auto chain = parse_forest("(())");
    EXPECT_TRUE(is_strict_ancestor(chain, 0, 1));
    EXPECT_FALSE(is_strict_ancestor(chain, 1, 0));
    EXPECT_FALSE(is_strict_ancestor(parse_forest("(()())()"), 0, 3));
    EXPECT_FALSE(is_strict_ancestor(chain, 0, 0));
    EXPECT_THROW(is_strict_ancestor(chain, 0, 2), std::out_of_range);
}

// Independent count: Dyck words of semilength n via ballot-sequence DP.
static std::size_t ballot_count(std::size_t n) {
    std::vector<std::vector<std::size_t>> ways(2 * n + 1, std::vector<std::size_t>(n + 2, 0));
    ways[0][0] = 1;
    for (std::size_t step = 0; step < 2 * n; ++step)
        for (std::size_t h = 0; h <= n; ++h) {
            if (!ways[step][h]) continue;
            ways[step + 1][h + 1] += ways[step][h];
            if (h > 0) ways[step + 1][h - 1] += ways[step][h];
        }
    return ways[2 * n][0];
}

TEST(EnumerateForests, Examples) {
    EXPECT_EQ(enumerate_forests(0).size(), 1u);
    auto two = enumerate_forests(2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(render_forest(two[0]), "(())");
    EXPECT_EQ(render_forest(two[1]), "()()");
    EXPECT_EQ(enumerate_forests(4).size(), 14u);
}

TEST(EnumerateForests, CatalanAndDistinct) {
    for (std::size_t n = 0; n <= 7; ++n) {
        auto all = enumerate_forests(n);
        EXPECT_EQ(all.size(), ballot_count(n)) << n;
        std::set<std::string> seen;
        for (const auto& f : all) seen.insert(render_forest(f));
        EXPECT_EQ(seen.size(), all.size());
    }
}

TEST(EnumerateLabelings, Examples) {
    auto one = enumerate_labelings(parse_forest("()"), SignMode::signed_);
    ASSERT_EQ(one.size(), 2u);
    EXPECT_EQ(one[0].values(), std::vector<int>{-1});
    EXPECT_EQ(one[1].values(), std::vector<int>{1});
    EXPECT_EQ(enumerate_labelings(parse_forest("(())"), SignMode::signed_).size(), 8u);
    auto even = enumerate_labelings(parse_forest("(())"), SignMode::even_signed);
    ASSERT_EQ(even.size(), 4u);
    for (const auto& w : even) EXPECT_EQ(w.negative_count() % 2, 0u);
}

TEST(EnumerateLabelings, CountsAndUniqueness) {
    for (std::size_t n = 0; n <= 5; ++n) {
        auto f = chain_forest(n);
        for (auto mode : {SignMode::ordinary, SignMode::signed_, SignMode::even_signed}) {
            auto all = enumerate_labelings(f, mode);
            long long expected = factorial(static_cast<int>(n));
            if (mode == SignMode::signed_) expected <<= n;
            if (mode == SignMode::even_signed && n >= 1) expected <<= (n - 1);
            EXPECT_EQ(static_cast<long long>(all.size()), expected);
            EXPECT_EQ(labeling_count(n, mode), all.size());
            std::set<Labeling> seen(all.begin(), all.end());
            EXPECT_EQ(seen.size(), all.size());
            for (const auto& w : all) EXPECT_TRUE(w.satisfies(mode));
        }
    }
}

TEST(Labeling, ParseAndValidate) {
    EXPECT_EQ(parse_labeling("-1,2").values(), (std::vector<int>{-1, 2}));
    EXPECT_EQ(render_labeling(parse_labeling("-1,2")), "-1,2");
    EXPECT_THROW(parse_labeling("1,1"), ParseError);
    EXPECT_THROW(parse_labeling("1,3"), ParseError);
    EXPECT_THROW(parse_labeling("1,a"), ParseError);
    EXPECT_THROW(Labeling({0}), std::invalid_argument);
}

TEST(LinearExtensions, Examples) {
    auto chain = parse_forest("(())");
    auto ext = linear_extensions(chain, Labeling({2, -1}));
    ASSERT_EQ(ext.size(), 1u);
    EXPECT_EQ(ext[0], (SignedPermutation{-1, 2}));

    auto cherry = linear_extensions(parse_forest("(()())"), Labeling({1, 2, 3}));
    EXPECT_EQ(cherry, (std::vector<SignedPermutation>{{2, 3, 1}, {3, 2, 1}}));

    auto anti = linear_extensions(parse_forest("()()"), Labeling({2, -1}));
    std::set<SignedPermutation> got(anti.begin(), anti.end());
    EXPECT_EQ(got, (std::set<SignedPermutation>{{2, -1}, {-1, 2}}));
}

TEST(LinearExtensions, ChainIsBottomUpWord) {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto f = chain_forest(n);
        for (const auto& w : enumerate_labelings(f, SignMode::signed_)) {
            auto ext = linear_extensions(f, w);
            ASSERT_EQ(ext.size(), 1u);
            EXPECT_EQ(ext[0], bottom_up_word(w));
        }
    }
}

// For each pi in S_n, the number of ordinary labelings w with pi in L(F, w) is n!/prod h.
TEST(LinearExtensions, LabelingCountPerPermutation) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& f : enumerate_forests(n)) {
            long long prod = 1;
            for (auto h : f.hooks()) prod *= static_cast<long long>(h);
            const long long expected = factorial(static_cast<int>(n)) / prod;
            std::map<SignedPermutation, long long> hits;
            for (const auto& w : enumerate_labelings(f, SignMode::ordinary))
                for (const auto& pi : linear_extensions(f, w)) ++hits[pi];
            ASSERT_EQ(static_cast<long long>(hits.size()), factorial(static_cast<int>(n)));
            for (const auto& [pi, count] : hits) EXPECT_EQ(count, expected) << render_forest(f);
        }
    }
}

TEST(DecreasingLabeling, Examples) {
    EXPECT_EQ(decreasing_labeling(parse_forest("()")).values(), std::vector<int>{1});
    EXPECT_EQ(decreasing_labeling(parse_forest("(())")).values(), (std::vector<int>{2, 1}));
    EXPECT_EQ(decreasing_labeling(parse_forest("(()())")).values(), (std::vector<int>{3, 1, 2}));
}

TEST(DecreasingLabeling, DecreasesTowardLeaves) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& f : enumerate_forests(n)) {
            auto w = decreasing_labeling(f);
            for (Vertex v = 0; v < n; ++v)
                if (!f.is_root(v)) EXPECT_GT(w[f.parent(v)], w[v]);
        }
}

TEST(SignMode, Names) {
    EXPECT_EQ(parse_sign_mode("signed"), SignMode::signed_);
    EXPECT_EQ(parse_sign_mode("even-signed"), SignMode::even_signed);
    EXPECT_EQ(parse_sign_mode("ordinary"), SignMode::ordinary);
    EXPECT_EQ(to_string(SignMode::even_signed), "even-signed");
    EXPECT_THROW(parse_sign_mode("odd"), std::invalid_argument);
}
