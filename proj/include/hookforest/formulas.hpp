#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "hookforest/forest.hpp"
#include "hookforest/qpoly.hpp"

namespace hookforest {

// Closed-form sides of the hook length identities. e(F) = n! / prod h_u.

/// n! / prod h_u, checked to divide exactly.
Coeff hook_multiplicity(const Forest& forest);

/// e(F) prod [h_u].
BiPoly rhs_bw(const Forest& forest);
/// e(F) prod [2 h_u].
BiPoly rhs_inv_b(const Forest& forest);
/// e(F)/2 prod (1 + q^{h_u - 1}) [h_u]; the constant 1 for the empty forest.
BiPoly rhs_inv_d(const Forest& forest);
/// e(F) prod (1 + t q^{h_u}) [h_u].
BiPoly rhs_bivariate_inv(const Forest& forest);
/// e(F) prod (1 + t q^{h_u - 1}) [h_u]: generating function of t^{n1} q^{inv + n2}.
BiPoly rhs_bivariate_inv_d(const Forest& forest);
BiPoly rhs_fmaj(const Forest& forest);
/// e(F) (1 + t q)^n prod [h_u].
BiPoly rhs_bivariate_maj_b(const Forest& forest);
BiPoly rhs_rmaj(const Forest& forest);
/// q^{maj_B(F,w)} [n]! / prod [h_u].
BiPoly rhs_linext(const Forest& forest, const Labeling& w);
/// q^{maj_B(F,w)} / prod (1 - q^{h_u}), to q-degree `degree`.
Series rhs_partition_gf(const Forest& forest, const Labeling& w, std::uint32_t degree);
/// 1 / prod (1 - q^{h_u}), to q-degree `degree`.
Series rhs_forest_partition_gf(const Forest& forest, std::uint32_t degree);

/// (1 + t q)^n [n]!.
BiPoly rhs_reiner(std::size_t n);
BiPoly rhs_maj_b_perm(std::size_t n);
/// [2][4]...[2n].
BiPoly rhs_len_b(std::size_t n);
/// [2][4]...[2n-2][n]; 1 for n = 0.
BiPoly rhs_len_d(std::size_t n);

enum class TheoremId {
    inv_b, inv_d, fmaj, rmaj, bivariate_inv, bivariate_maj_b, bw, le1, partition_gf, reiner, len_b, len_d,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::bw,   TheoremId::inv_b,         TheoremId::inv_d,           TheoremId::fmaj,
    TheoremId::rmaj, TheoremId::bivariate_inv, TheoremId::bivariate_maj_b, TheoremId::le1,
    TheoremId::partition_gf, TheoremId::reiner, TheoremId::len_b,          TheoremId::len_d,
};

/// "thm-inv-b", "lem-partition-gf", "eq-reiner", ...
std::string_view theorem_name(TheoremId id);
/// Throws std::invalid_argument for an unknown id.
TheoremId parse_theorem(std::string_view name);

/// Closed form for a theorem keyed by forest alone. Labeling-indexed
/// identities (thm-le1, lem-partition-gf) return the sum over all signed
/// labelings of their per-labeling right-hand sides; lem-partition-gf is
/// truncated at `degree`.
BiPoly rhs_for(TheoremId id, const Forest& forest, std::uint32_t degree = 10);

}  // namespace hookforest
