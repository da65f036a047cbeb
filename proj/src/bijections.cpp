#include "hookforest/bijections.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "hookforest/formulas.hpp"
#include "hookforest/stats.hpp"

namespace hookforest {

SignedPermutation psi_bijection(const SignedPermutation& sigma) {
    const std::size_t n = sigma.size();
    std::vector<int> tau(n);
    for (const bool positive : {true, false}) {
        std::vector<std::size_t> positions;
        for (std::size_t i = 0; i < n; ++i)
            if ((sigma[i] > 0) == positive) positions.push_back(i);
        // Positions i_1..i_k ordered so that sigma increases along them.
        std::sort(positions.begin(), positions.end(), [&](std::size_t a, std::size_t b) { return sigma[a] < sigma[b]; });
        const std::size_t k = positions.size();
        for (std::size_t s = 0; s < k; ++s) tau[positions[s]] = -sigma[positions[k - 1 - s]];
    }
    return SignedPermutation(std::move(tau));
}

Labeling mirror_bijection(const Forest& forest, const Labeling& w) {
    const int n = static_cast<int>(forest.size());
    std::vector<int> out(w.size());
    for (Vertex v = 0; v < w.size(); ++v) {
        const int magnitude = n + 1 - std::abs(w[v]);
        out[v] = w[v] > 0 ? -magnitude : magnitude;
    }
    return Labeling(std::move(out));
}

std::pair<SignedPermutation, SignedPermutation> coset_decompose(const SignedPermutation& sigma) {
    std::vector<int> sorted = sigma.values();
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> pi(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), sigma[i]);
        pi[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return {SignedPermutation(std::move(sorted)), SignedPermutation(std::move(pi))};
}

SignedPermutation coset_compose(const SignedPermutation& tau, const SignedPermutation& pi) {
    std::vector<int> sigma(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) sigma[i] = tau.apply(pi[i]);
    return SignedPermutation(std::move(sigma));
}

CheckReport check_psi(std::size_t n) {
    MonomialTally source;
    MonomialTally image;
    std::set<SignedPermutation> seen;
    std::optional<std::string> witness;
    for_each_signed_permutation(n, SignMode::signed_, [&](const SignedPermutation& sigma) {
        const auto tau = psi_bijection(sigma);
        source.add(p(sigma), maj_b(sigma));
        image.add(n1(tau), maj_r(tau));
        if (witness) return;
        const std::string where = render_word(sigma) + " -> " + render_word(tau);
        if (maj_b(sigma) != maj_r(tau)) witness = where + ": maj_B != maj_R";
        else if (p(sigma) != n1(tau)) witness = where + ": p != n1";
        else if (psi_bijection(tau) != sigma) witness = where + ": not an involution";
        else if (!seen.insert(tau).second) witness = where + ": image repeats";
    });
    auto report = compare_polys("bij-psi", "n=" + std::to_string(n), source.to_poly(), image.to_poly());
    if (witness) {
        report.pass = false;
        report.witness = witness;
    } else if (report.pass) {
        if (auto diff = first_difference(report.lhs, rhs_reiner(n))) {
            report.pass = false;
            report.witness = "differs from (1+tq)^n [n]!, " + *diff;
        }
    }
    return report;
}

CheckReport check_mirror(const Forest& forest) {
    MonomialTally source;
    MonomialTally image;
    std::set<Labeling> seen;
    std::optional<std::string> witness;
    for_each_labeling(forest.size(), SignMode::signed_, [&](const Labeling& w) {
        const Labeling mirrored = mirror_bijection(forest, w);
        source.add(0, rmaj_forest(forest, w));
        image.add(0, fmaj_forest(forest, mirrored));
        if (witness) return;
        const std::string where = render_labeling(w) + " -> " + render_labeling(mirrored);
        if (mirror_bijection(forest, mirrored) != w) witness = where + ": not an involution";
        else if (rmaj_forest(forest, w) != fmaj_forest(forest, mirrored)) witness = where + ": rmaj != fmaj";
        else if (maj_b_forest(forest, w) != maj_forest(forest, mirrored) + p_forest(forest, w))
            witness = where + ": maj_B != maj' + p";
        else if (p_forest(forest, w) != n1_forest(forest, mirrored)) witness = where + ": p != n1'";
        else if (!seen.insert(mirrored).second) witness = where + ": image repeats";
    });
    auto report = compare_polys("bij-mirror", render_forest(forest), source.to_poly(), image.to_poly());
    if (witness) {
        report.pass = false;
        report.witness = witness;
    }
    return report;
}

CheckReport check_coset_decomposition(std::size_t n) {
    std::set<std::pair<SignedPermutation, SignedPermutation>> seen;
    std::optional<std::string> witness;
    MonomialTally lhs;
    MonomialTally rhs;
    for_each_signed_permutation(n, SignMode::signed_, [&](const SignedPermutation& sigma) {
        auto [tau, pi] = coset_decompose(sigma);
        lhs.add(n1(sigma), len_b(sigma));
        rhs.add(n1(tau), len_b(tau) + inv(pi));
        if (witness) return;
        const std::string where = render_word(sigma);
        if (!std::is_sorted(tau.values().begin(), tau.values().end())) witness = where + ": tau is not increasing";
        else if (n1(pi) != 0) witness = where + ": pi is not in S_n";
        else if (coset_compose(tau, pi) != sigma) witness = where + ": tau pi != sigma";
        else if (len_b(sigma) != len_b(tau) + inv(pi)) witness = where + ": length is not additive";
        else if (!seen.emplace(tau, pi).second) witness = where + ": decomposition repeats";
    });
    auto report = compare_polys("eq-coset", "n=" + std::to_string(n), lhs.to_poly(), rhs.to_poly());
    if (witness) {
        report.pass = false;
        report.witness = witness;
    }
    return report;
}

}  // namespace hookforest
