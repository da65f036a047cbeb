#include "hookforest/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hookforest/parallel.hpp"
#include "hookforest/partitions.hpp"
#include "hookforest/signed_permutation.hpp"

namespace hookforest {

std::optional<std::string> first_difference(const BiPoly& a, const BiPoly& b) {
    std::set<Monomial> keys;
    for (const auto& [m, c] : a.terms()) keys.insert(m);
    for (const auto& [m, c] : b.terms()) keys.insert(m);
    for (const Monomial& m : keys) {
        const Coeff ca = a.coeff(m.t_exp, m.q_exp);
        const Coeff cb = b.coeff(m.t_exp, m.q_exp);
        if (ca != cb) {
            return "coefficient of t^" + std::to_string(m.t_exp) + " q^" + std::to_string(m.q_exp) + ": " +
                   ca.str() + " vs " + cb.str();
        }
    }
    return std::nullopt;
}

CheckReport compare_polys(std::string theorem, std::string forest, BiPoly lhs, BiPoly rhs) {
    CheckReport report{std::move(theorem), std::move(forest), std::move(lhs), std::move(rhs), false, std::nullopt};
    report.witness = first_difference(report.lhs, report.rhs);
    report.pass = !report.witness;
    return report;
}

BiPoly distribution(const Forest& forest, SignMode mode, const ForestStat& stat, const ForestStat& aux) {
    MonomialTally tally;
    for_each_labeling(forest.size(), mode, [&](const Labeling& w) {
        tally.add(aux ? aux(forest, w) : 0, stat(forest, w));
    });
    return tally.to_poly();
}

namespace {

void require_forest_stat(StatId id, SignMode mode) {
    if (!is_forest_stat(id)) {
        throw std::invalid_argument(std::string(stat_name(id)) + " is not a forest statistic");
    }
    if (id == StatId::inv_d_f && mode == SignMode::signed_) {
        throw std::invalid_argument("inv-d is only defined on even-signed labelings");
    }
}

void require_permutation_stat(StatId id, SignMode mode) {
    if (is_forest_stat(id)) {
        throw std::invalid_argument(std::string(stat_name(id)) + " is not a permutation statistic");
    }
    if (id == StatId::len_d && mode == SignMode::signed_) {
        throw std::invalid_argument("len-d is only defined on even-signed permutations");
    }
}

}  // namespace

BiPoly distribution(const Forest& forest, StatId stat, SignMode mode, std::optional<StatId> aux) {
    require_forest_stat(stat, mode);
    if (aux) require_forest_stat(*aux, mode);
    ForestStat q_stat = [stat](const Forest& f, const Labeling& w) { return evaluate(stat, f, w); };
    ForestStat t_stat;
    if (aux) t_stat = [a = *aux](const Forest& f, const Labeling& w) { return evaluate(a, f, w); };
    return distribution(forest, mode, q_stat, t_stat);
}

BiPoly permutation_distribution(std::size_t n, StatId stat, SignMode mode, std::optional<StatId> aux) {
    require_permutation_stat(stat, mode);
    if (aux) require_permutation_stat(*aux, mode);
    MonomialTally tally;
    for_each_signed_permutation(n, mode, [&](const SignedPermutation& sigma) {
        tally.add(aux ? evaluate(*aux, sigma) : 0, evaluate(stat, sigma));
    });
    return tally.to_poly();
}

BiPoly linext_distribution(const Forest& forest, const Labeling& w) {
    MonomialTally tally;
    for (const auto& sigma : linear_extensions(forest, w)) tally.add(0, maj_b(sigma));
    return tally.to_poly();
}

namespace {

std::string rank_subject(std::size_t n) { return "n=" + std::to_string(n); }

CheckReport check_per_labeling(const Forest& forest, TheoremId id, std::uint32_t degree) {
    const std::string name(theorem_name(id));
    const std::string text = render_forest(forest);
    BiPoly lhs_total;
    BiPoly rhs_total;
    std::optional<std::string> witness;
    for_each_labeling(forest.size(), SignMode::signed_, [&](const Labeling& w) {
        BiPoly lhs;
        BiPoly rhs;
        if (id == TheoremId::le1) {
            lhs = linext_distribution(forest, w);
            rhs = rhs_linext(forest, w);
        } else {
            lhs = partition_lhs_series(forest, w, degree).poly();
            rhs = rhs_partition_gf(forest, w, degree).poly();
        }
        if (!witness) {
            if (auto diff = first_difference(lhs, rhs)) {
                witness = "labeling " + render_labeling(w) + ": " + *diff;
            }
        }
        lhs_total += lhs;
        rhs_total += rhs;
    });
    CheckReport report{name, text, std::move(lhs_total), std::move(rhs_total), !witness, witness};
    return report;
}

}  // namespace

CheckReport check_theorem(const Forest& forest, TheoremId id, std::uint32_t degree) {
    const std::string name(theorem_name(id));
    const std::string text = render_forest(forest);
    const std::size_t n = forest.size();
    switch (id) {
        case TheoremId::bw: {
            auto report = compare_polys(name, text, distribution(forest, StatId::maj_f, SignMode::ordinary),
                                        rhs_bw(forest));
            if (report.pass) {
                const BiPoly inv_side = distribution(forest, StatId::inv_f, SignMode::ordinary);
                if (auto diff = first_difference(inv_side, report.rhs)) {
                    report.pass = false;
                    report.witness = "inversion distribution, " + *diff;
                }
            }
            return report;
        }
        case TheoremId::inv_b:
            return compare_polys(name, text, distribution(forest, StatId::inv_b_f, SignMode::signed_),
                                 rhs_inv_b(forest));
        case TheoremId::inv_d:
            return compare_polys(name, text, distribution(forest, StatId::inv_d_f, SignMode::even_signed),
                                 rhs_inv_d(forest));
        case TheoremId::fmaj:
            return compare_polys(name, text, distribution(forest, StatId::fmaj_f, SignMode::signed_),
                                 rhs_fmaj(forest));
        case TheoremId::rmaj:
            return compare_polys(name, text, distribution(forest, StatId::rmaj_f, SignMode::signed_),
                                 rhs_rmaj(forest));
        case TheoremId::bivariate_inv:
            return compare_polys(name, text,
                                 distribution(forest, StatId::inv_b_f, SignMode::signed_, StatId::n1_f),
                                 rhs_bivariate_inv(forest));
        case TheoremId::bivariate_maj_b:
            return compare_polys(name, text,
                                 distribution(forest, StatId::maj_b_f, SignMode::signed_, StatId::p_f),
                                 rhs_bivariate_maj_b(forest));
        case TheoremId::le1:
        case TheoremId::partition_gf:
            return check_per_labeling(forest, id, degree);
        case TheoremId::reiner: {
            auto report = compare_polys(name, rank_subject(n),
                                        permutation_distribution(n, StatId::maj_r, SignMode::signed_, StatId::n1),
                                        rhs_reiner(n));
            if (report.pass) {
                const BiPoly positive_side =
                    permutation_distribution(n, StatId::maj_b, SignMode::signed_, StatId::p);
                if (auto diff = first_difference(positive_side, report.rhs)) {
                    report.pass = false;
                    report.witness = "(p, maj_B) distribution, " + *diff;
                }
            }
            return report;
        }
        case TheoremId::len_b:
            return compare_polys(name, rank_subject(n), permutation_distribution(n, StatId::len_b, SignMode::signed_),
                                 rhs_len_b(n));
        case TheoremId::len_d:
            return compare_polys(name, rank_subject(n),
                                 permutation_distribution(n, StatId::len_d, SignMode::even_signed), rhs_len_d(n));
    }
    throw std::invalid_argument("unknown theorem id");
}

CheckReport check_even_odd(const Forest& forest) {
    const BiPoly d = distribution(
        forest, SignMode::signed_,
        [](const Forest& f, const Labeling& w) { return inv_forest(f, w) + n2_forest(f, w); },
        [](const Forest& f, const Labeling& w) { return n1_forest(f, w); });
    BiPoly even;
    BiPoly odd;
    for (const auto& [m, c] : d.terms()) (m.t_exp % 2 == 0 ? even : odd).add_term(0, m.q_exp, c);
    auto report = compare_polys("eq-even-odd", render_forest(forest), even, odd);
    if (report.pass && !eval_t(d, -1).is_zero()) {
        report.pass = false;
        report.witness = "t = -1 evaluation is nonzero";
    }
    if (report.pass) {
        if (auto diff = first_difference(d, rhs_bivariate_inv_d(forest))) {
            report.pass = false;
            report.witness = "D(t,q) differs from its hook product, " + *diff;
        }
    }
    return report;
}

CheckReport check_fmaj_coset_identity(const Forest& forest) {
    const std::size_t n = forest.size();
    const Labeling w0 = decreasing_labeling(forest);
    MonomialTally lhs;
    MonomialTally rhs;
    std::set<Labeling> images;
    std::optional<std::string> witness;
    auto fail = [&](std::string why) {
        if (!witness) witness = std::move(why);
    };

    std::vector<SignedPermutation> increasing;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> values(n);
        for (std::size_t i = 0; i < n; ++i) values[i] = (mask >> i & 1u) ? -static_cast<int>(i + 1) : static_cast<int>(i + 1);
        std::sort(values.begin(), values.end());
        increasing.emplace_back(std::move(values));
    }

    for_each_labeling(n, SignMode::ordinary, [&](const Labeling& w) {
        const auto descents = descents_forest(forest, w);
        const StatValue base = 2 * maj_forest(forest, w);
        for (const auto& tau : increasing) {
            std::vector<int> composed(n);
            std::vector<int> pulled_back(n);
            for (Vertex v = 0; v < n; ++v) {
                composed[v] = tau.apply(w[v]);
                pulled_back[v] = tau.apply(w0[v]);
            }
            const Labeling tau_w(std::move(composed));
            const Labeling tau_f(std::move(pulled_back));
            const std::string where = "w=" + render_labeling(w) + " tau=" + render_word(tau);
            if (descents_forest(forest, tau_w) != descents) fail(where + ": descent sets differ");
            if (n1_forest(forest, tau_w) != n1_forest(forest, tau_f)) fail(where + ": n1 differs");
            const StatValue actual = fmaj_forest(forest, tau_w);
            const StatValue predicted = base + n1_forest(forest, tau_f);
            if (actual != predicted) fail(where + ": fmaj " + std::to_string(actual) + " vs " + std::to_string(predicted));
            lhs.add(0, actual);
            rhs.add(0, predicted);
            if (!images.insert(tau_w).second) fail(where + ": tau w repeats a labeling");
        }
    });
    if (images.size() != labeling_count(n, SignMode::signed_)) fail("tau w does not cover every signed labeling");
    CheckReport report{"eq-fmaj-coset", render_forest(forest), lhs.to_poly(), rhs.to_poly(), !witness, witness};
    return report;
}

namespace {

struct ComparedPair {
    BiPoly first;
    BiPoly second;
};

}  // namespace

std::optional<Counterexample> counterexample_search(StatId stat_a, StatId stat_b, SignMode mode,
                                                    std::size_t max_n, std::size_t jobs) {
    require_forest_stat(stat_a, mode);
    require_forest_stat(stat_b, mode);
    for (std::size_t n = 0; n <= max_n; ++n) {
        const auto forests = enumerate_forests(n);
        // All forests of this size are evaluated; the first in canonical order wins.
        const auto pairs = parallel_map(forests.size(), jobs, [&](std::size_t i) {
            return ComparedPair{distribution(forests[i], stat_a, mode), distribution(forests[i], stat_b, mode)};
        });
        for (std::size_t i = 0; i < forests.size(); ++i) {
            if (pairs[i].first != pairs[i].second) return Counterexample{forests[i], pairs[i].first, pairs[i].second};
        }
    }
    return std::nullopt;
}

std::vector<CheckReport> sweep(TheoremId id, std::size_t max_n, std::size_t jobs, bool fail_fast,
                               std::uint32_t degree) {
    std::vector<CheckReport> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        const auto forests = enumerate_forests(n);
        auto reports = parallel_map(forests.size(), jobs,
                                    [&](std::size_t i) { return check_theorem(forests[i], id, degree); });
        for (auto& r : reports) {
            const bool failed = !r.pass;
            out.push_back(std::move(r));
            if (failed && fail_fast) return out;
        }
    }
    return out;
}

}  // namespace hookforest
