#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hookforest/forest.hpp"
#include "hookforest/signed_permutation.hpp"

namespace hookforest {

using StatValue = std::int64_t;

// Permutation statistics. Comparisons use the natural integer order unless noted.

StatValue inv(const SignedPermutation& sigma);
/// Sum of descent positions i in [1, n-1], no sentinel.
StatValue maj(const SignedPermutation& sigma);
/// Number of negative entries.
StatValue n1(const SignedPermutation& sigma);
/// Unordered pairs of distinct positions {i, j} with sigma_i + sigma_j < 0.
StatValue n2(const SignedPermutation& sigma);
/// Coxeter length in B_n: inv + n1 + n2.
StatValue len_b(const SignedPermutation& sigma);
/// Coxeter length in D_n: inv + n2.
StatValue len_d(const SignedPermutation& sigma);
/// The same length written as inv - (sum of negative entries) - n1.
StatValue len_d_negative_sum_form(const SignedPermutation& sigma);
/// Flag major index, 2 maj + n1.
StatValue fmaj(const SignedPermutation& sigma);
/// Negative major index, maj + n1 + n2.
StatValue nmaj(const SignedPermutation& sigma);
/// Descents in the order 1 < ... < n < -n < ... < -1, sentinel sigma_{n+1} = n.
StatValue maj_r(const SignedPermutation& sigma);
/// Descents in the natural order with sentinel sigma_{n+1} = 0.
StatValue maj_b(const SignedPermutation& sigma);
/// Number of positive entries.
StatValue p(const SignedPermutation& sigma);
/// R-major index, 2 maj_B - p.
StatValue rmaj(const SignedPermutation& sigma);
StatValue dmaj(const SignedPermutation& sigma);

/// -(sum of the negative entries).
StatValue negative_entry_sum(const SignedPermutation& sigma);

// Forest statistics on (F, w).

/// Pairs (ancestor u, strict descendant v) with w(u) < w(v).
StatValue inv_forest(const Forest& forest, const Labeling& w);
/// Non-root vertices whose label exceeds the parent's label.
std::vector<Vertex> descents_forest(const Forest& forest, const Labeling& w);
StatValue maj_forest(const Forest& forest, const Labeling& w);
StatValue n1_forest(const Forest& forest, const Labeling& w);
/// Pairs (strict descendant, ancestor) whose labels sum to a negative number.
StatValue n2_forest(const Forest& forest, const Labeling& w);
StatValue inv_b_forest(const Forest& forest, const Labeling& w);
/// inv + n2; throws std::invalid_argument on an odd number of negative labels.
StatValue inv_d_forest(const Forest& forest, const Labeling& w);
StatValue fmaj_forest(const Forest& forest, const Labeling& w);
/// Descents plus roots carrying a positive label.
std::vector<Vertex> descents_b_forest(const Forest& forest, const Labeling& w);
StatValue maj_b_forest(const Forest& forest, const Labeling& w);
StatValue p_forest(const Forest& forest, const Labeling& w);
StatValue rmaj_forest(const Forest& forest, const Labeling& w);
StatValue nmaj_forest(const Forest& forest, const Labeling& w);
/// maj + n2. Defined for any labeling; D-type checks restrict to even-signed.
StatValue dmaj_forest(const Forest& forest, const Labeling& w);

// ---------------------------------------------------------------------------

enum class StatId {
    // permutation level
    inv, maj, n1, n2, len_b, len_d, fmaj, nmaj, maj_r, maj_b, p, rmaj, dmaj,
    // forest level
    inv_f, maj_f, n1_f, n2_f, inv_b_f, inv_d_f, fmaj_f, maj_b_f, p_f, rmaj_f, nmaj_f, dmaj_f,
};

inline constexpr StatId kAllStats[] = {
    StatId::inv,    StatId::maj,    StatId::n1,      StatId::n2,      StatId::len_b,   StatId::len_d,
    StatId::fmaj,   StatId::nmaj,   StatId::maj_r,   StatId::maj_b,   StatId::p,       StatId::rmaj,
    StatId::dmaj,   StatId::inv_f,  StatId::maj_f,   StatId::n1_f,    StatId::n2_f,    StatId::inv_b_f,
    StatId::inv_d_f, StatId::fmaj_f, StatId::maj_b_f, StatId::p_f,    StatId::rmaj_f,  StatId::nmaj_f,
    StatId::dmaj_f,
};

/// Kebab-case name shared with the CLI, e.g. "inv-b", "rmaj-f".
std::string_view stat_name(StatId id);
/// Throws std::invalid_argument for an unknown name.
StatId parse_stat(std::string_view name);

bool is_forest_stat(StatId id);

/// Permutation-level counterpart of a forest statistic (they agree on chains).
std::optional<StatId> permutation_counterpart(StatId forest_stat);

/// Evaluates a permutation-level statistic.
StatValue evaluate(StatId id, const SignedPermutation& sigma);
/// Evaluates a forest-level statistic.
StatValue evaluate(StatId id, const Forest& forest, const Labeling& w);

}  // namespace hookforest
