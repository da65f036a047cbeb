#pragma once

#include <cstddef>
#include <utility>

#include "hookforest/forest.hpp"
#include "hookforest/signed_permutation.hpp"
#include "hookforest/verify.hpp"

namespace hookforest {

/// Reverses and negates the positive entries among their own positions,
/// and likewise the negative entries. Carries (p, maj_B) to (n1, maj_R).
/// An involution on B_n.
SignedPermutation psi_bijection(const SignedPermutation& sigma);

/// w'(u) = -sign(w(u)) (n + 1 - |w(u)|). Carries rmaj to fmaj. An involution.
Labeling mirror_bijection(const Forest& forest, const Labeling& w);

/// sigma = tau pi with tau increasing and pi in S_n: tau is the sorted word
/// and tau_{pi_i} = sigma_i.
std::pair<SignedPermutation, SignedPermutation> coset_decompose(const SignedPermutation& sigma);

/// Inverse of coset_decompose: sigma_i = tau_{pi_i}.
SignedPermutation coset_compose(const SignedPermutation& tau, const SignedPermutation& pi);

/// psi over B_n: statistic transfer, involution, bijectivity, and both sides
/// equal to (1 + tq)^n [n]!.
CheckReport check_psi(std::size_t n);

/// Mirror map over B_n(F): involution, rmaj(w) = fmaj(w'),
/// maj_B(w) = maj(w') + p(w), p(w) = n1(w').
CheckReport check_mirror(const Forest& forest);

/// Coset decomposition over B_n is unique and reassembles sigma.
CheckReport check_coset_decomposition(std::size_t n);

}  // namespace hookforest
