#include <gtest/gtest.h>

#include "hookforest/formulas.hpp"
#include "test_util.hpp"

using namespace hookforest;
using namespace testutil;

namespace {
const BiPoly T = BiPoly::t();
const BiPoly Q = BiPoly::q();
}  // namespace

TEST(HookMultiplicity, Values) {
    EXPECT_EQ(hook_multiplicity(parse_forest("")), 1);
    EXPECT_EQ(hook_multiplicity(parse_forest("(()())")), 2);
    EXPECT_EQ(hook_multiplicity(parse_forest("()()()")), 6);
    EXPECT_EQ(hook_multiplicity(chain_forest(5)), 1);
}

TEST(RhsBw, Examples) {
    EXPECT_EQ(rhs_bw(parse_forest("()")), BiPoly(1));
    EXPECT_EQ(rhs_bw(parse_forest("(()())")), qpoly({2, 2, 2}));
    EXPECT_EQ(rhs_bw(chain_forest(3)), q_factorial(3));
}

TEST(RhsInvB, Examples) {
    EXPECT_EQ(rhs_inv_b(parse_forest("()")), qpoly({1, 1}));
    EXPECT_EQ(rhs_inv_b(chain_forest(2)), qn(2) * qn(4));
    EXPECT_EQ(rhs_inv_b(parse_forest("(()())")), 2 * qn(6) * qn(2) * qn(2));
    EXPECT_EQ(rhs_fmaj(parse_forest("(()())")), rhs_inv_b(parse_forest("(()())")));
    EXPECT_EQ(rhs_rmaj(chain_forest(2)), rhs_inv_b(chain_forest(2)));
}

TEST(RhsInvD, Examples) {
    EXPECT_EQ(rhs_inv_d(parse_forest("")), BiPoly(1));
    EXPECT_EQ(rhs_inv_d(parse_forest("()")), BiPoly(1));
    EXPECT_EQ(rhs_inv_d(chain_forest(2)), qn(2) * qn(2));
    // e = 2, each factor (1 + q^0)[1] = 2: total 2/2 * 2 * 2 = 4, matching 4 even-signed labelings.
    EXPECT_EQ(rhs_inv_d(parse_forest("()()")), BiPoly(4));
}

TEST(RhsBivariateInv, Examples) {
    EXPECT_EQ(rhs_bivariate_inv(parse_forest("()")), 1 + T * Q);
    EXPECT_EQ(rhs_bivariate_inv(chain_forest(2)), (1 + T * Q * Q) * (1 + T * Q) * qn(2));
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& f : enumerate_forests(n)) EXPECT_EQ(eval_t(rhs_bivariate_inv(f), 0), rhs_bw(f));
}

TEST(RhsBivariateMajB, Examples) {
    EXPECT_EQ(rhs_bivariate_maj_b(parse_forest("()")), 1 + T * Q);
    EXPECT_EQ(rhs_bivariate_maj_b(parse_forest("")), BiPoly(1));
    EXPECT_EQ(rhs_bivariate_maj_b(chain_forest(2)), pow(1 + T * Q, 2) * qn(2));
}

TEST(RhsLinext, Examples) {
    EXPECT_EQ(rhs_linext(parse_forest("()"), Labeling({1})), Q);
    EXPECT_EQ(rhs_linext(chain_forest(2), Labeling({2, -1})), Q * Q);
    EXPECT_EQ(rhs_linext(parse_forest("()()"), Labeling({2, -1})), Q * qn(2));
}

TEST(RhsPartitionGf, Examples) {
    EXPECT_EQ(rhs_partition_gf(parse_forest("()"), Labeling({1}), 3).poly(), qpoly({0, 1, 1, 1}));
    EXPECT_EQ(rhs_partition_gf(parse_forest("()"), Labeling({-1}), 2).poly(), qpoly({1, 1, 1}));
    // chain, child 1 and root 2: Des_B = {root}, maj_B = 2; q^2 / ((1-q)(1-q^2)).
    EXPECT_EQ(rhs_partition_gf(chain_forest(2), Labeling({2, 1}), 4).poly(), qpoly({0, 0, 1, 1, 2}));
    EXPECT_TRUE(rhs_partition_gf(parse_forest("()()"), Labeling({1, 2}), 1).poly().is_zero());
}

TEST(RhsForestPartitionGf, Chain) {
    EXPECT_EQ(rhs_forest_partition_gf(chain_forest(2), 4).poly(), qpoly({1, 1, 2, 2, 3}));
}

TEST(RhsReiner, Examples) {
    EXPECT_EQ(rhs_reiner(0), BiPoly(1));
    EXPECT_EQ(rhs_reiner(1), 1 + T * Q);
    EXPECT_EQ(rhs_reiner(2), pow(1 + T * Q, 2) * qn(2));
    EXPECT_EQ(rhs_maj_b_perm(3), rhs_reiner(3));
}

TEST(RhsLength, Examples) {
    EXPECT_EQ(rhs_len_b(1), qn(2));
    EXPECT_EQ(rhs_len_d(1), BiPoly(1));
    EXPECT_EQ(rhs_len_b(2), qn(2) * qn(4));
    EXPECT_EQ(rhs_len_d(2), qn(2) * qn(2));
    EXPECT_EQ(rhs_len_b(3), qn(2) * qn(4) * qn(6));
}

TEST(RhsInvB, ProductFormAgreesWithSubstitution) {
    // prod [2h] = prod [h]_{q^2} (1+q)
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& f : enumerate_forests(n)) {
            BiPoly alt = BiPoly(hook_multiplicity(f).convert_to<long long>());
            for (auto h : f.hooks()) alt *= subst_q_squared(q_number(static_cast<long long>(h))) * qn(2);
            EXPECT_EQ(rhs_inv_b(f), alt);
        }
}

TEST(TheoremIds, NamesRoundTrip) {
    for (TheoremId id : kAllTheorems) EXPECT_EQ(parse_theorem(theorem_name(id)), id);
    EXPECT_THROW(parse_theorem("thm-nope"), std::invalid_argument);
}
