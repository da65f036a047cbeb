#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hookforest/formulas.hpp"
#include "hookforest/forest.hpp"
#include "hookforest/qpoly.hpp"
#include "hookforest/stats.hpp"

namespace hookforest {

/// Outcome of one identity or property check. `forest` holds the forest
/// string, or "n=K" for checks indexed by group rank only.
struct CheckReport {
    std::string theorem;
    std::string forest;
    BiPoly lhs;
    BiPoly rhs;
    bool pass = false;
    std::optional<std::string> witness;

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Report comparing two polynomials; on mismatch the witness names the
/// first differing coefficient in (t, q) order.
CheckReport compare_polys(std::string theorem, std::string forest, BiPoly lhs, BiPoly rhs);

/// Description of the first coefficient where a and b differ, if any.
std::optional<std::string> first_difference(const BiPoly& a, const BiPoly& b);

using ForestStat = std::function<StatValue(const Forest&, const Labeling&)>;

/// Sum over labelings of the mode of t^{aux} q^{stat}.
BiPoly distribution(const Forest& forest, SignMode mode, const ForestStat& stat, const ForestStat& aux = {});

/// Throws std::invalid_argument if a statistic is not forest-level or is
/// undefined on the mode (inv-d on signed labelings).
BiPoly distribution(const Forest& forest, StatId stat, SignMode mode, std::optional<StatId> aux = std::nullopt);

/// Sum over S_n / B_n / D_n (by mode) of t^{aux} q^{stat} for permutation statistics.
BiPoly permutation_distribution(std::size_t n, StatId stat, SignMode mode, std::optional<StatId> aux = std::nullopt);

/// Brute-force distribution against the closed form. thm-le1 and
/// lem-partition-gf run per signed labeling (the latter to q-degree `degree`).
CheckReport check_theorem(const Forest& forest, TheoremId id, std::uint32_t degree = 10);

/// Sum over each signed labeling of q^{maj_B} on its linear extensions.
BiPoly linext_distribution(const Forest& forest, const Labeling& w);

/// t = -1 evaluation of the signed t^{n1} q^{inv + n2} distribution vanishes.
CheckReport check_even_odd(const Forest& forest);

/// fmaj(F, tau w) = 2 maj(F, w) + n1(tau) over ordinary w and increasing tau,
/// with (w, tau) -> tau w a bijection onto the signed labelings.
CheckReport check_fmaj_coset_identity(const Forest& forest);

struct Counterexample {
    Forest forest;
    BiPoly first;
    BiPoly second;
};

/// First forest (by size, then enumeration order) on which the two
/// statistics are not equidistributed over the mode's labelings.
std::optional<Counterexample> counterexample_search(StatId stat_a, StatId stat_b, SignMode mode,
                                                    std::size_t max_n, std::size_t jobs = 1);

/// check_theorem over every forest of size 0..max_n, in canonical order.
/// With fail_fast the result stops at the first failing report.
std::vector<CheckReport> sweep(TheoremId id, std::size_t max_n, std::size_t jobs = 1, bool fail_fast = false,
                               std::uint32_t degree = 10);

}  // namespace hookforest
