#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hookforest/forest.hpp"
#include "hookforest/qpoly.hpp"
#include "hookforest/signed_permutation.hpp"
#include "hookforest/verify.hpp"

namespace hookforest {

/// A map f: V(F) -> N, indexed by vertex.
struct PartitionMap {
    std::vector<std::uint32_t> f;

    [[nodiscard]] std::uint64_t weight() const;
    friend auto operator<=>(const PartitionMap&, const PartitionMap&) = default;
};

/// Type B (F, w)-partition:
///   (1) f(x) <= f(y) whenever x is an ancestor of y;
///   (2) f(x) <  f(y) whenever x is an ancestor of y and w(x) < w(y);
///   (3) f(u) >= 1 for every root u with w(u) > 0.
bool is_type_b_partition(const Forest& forest, const Labeling& w, const PartitionMap& f);

/// Condition (1) only.
bool is_forest_partition(const Forest& forest, const PartitionMap& f);

/// Every type B (F, w)-partition with |f| <= degree, lexicographic in f.
std::vector<PartitionMap> enumerate_partitions(const Forest& forest, const Labeling& w, std::uint32_t degree);

/// Every F-partition with |f| <= degree.
std::vector<PartitionMap> enumerate_forest_partitions(const Forest& forest, std::uint32_t degree);

/// Sum of q^{|f|} over type B partitions, to q-degree `degree`.
Series partition_lhs_series(const Forest& forest, const Labeling& w, std::uint32_t degree);

/// Subtracts 1 on the principal ideal below each u in Des_B(F, w); the
/// image is an F-partition with |f| = maj_B(F, w) + |image|.
/// Throws std::invalid_argument if a value would go negative.
PartitionMap partition_shift(const Forest& forest, const Labeling& w, const PartitionMap& f);

/// values[i] is f(sigma_{i+1}): weakly decreasing, strict at descents
/// sigma_i > sigma_{i+1}, last value >= 1 when sigma_n > 0.
bool sigma_compatible(const SignedPermutation& sigma, std::span<const std::uint32_t> values);

/// Every map with |f| <= degree is sigma-compatible for exactly one linear
/// extension when it is a type B partition, and for none otherwise.
CheckReport check_decomposition_dec1(const Forest& forest, const Labeling& w, std::uint32_t degree);

/// partition_shift is a weight-shifting bijection from type B partitions
/// (|f| <= degree) onto F-partitions with |g| <= degree - maj_B.
CheckReport check_partition_shift(const Forest& forest, const Labeling& w, std::uint32_t degree);

/// Partition series equals (sum over extensions of q^{maj_B}) / prod_{k<=n}(1 - q^k), truncated.
CheckReport check_partition_extension_series(const Forest& forest, const Labeling& w, std::uint32_t degree);

/// Cross-multiplied form of the two partition counts, checked as an exact polynomial identity:
/// (sum over extensions of q^{maj_B}) prod_u (1 - q^{h_u}) = q^{maj_B(F,w)} prod_{k<=n} (1 - q^k).
CheckReport check_partition_relation(const Forest& forest, const Labeling& w);

/// F-partition series is 1/prod(1 - q^{h_u}); every all-negative labeling
/// satisfies the extension decomposition; those without type B descents
/// reproduce the plain F-partition series.
CheckReport check_stanley_specialization(const Forest& forest, std::uint32_t degree);

}  // namespace hookforest
