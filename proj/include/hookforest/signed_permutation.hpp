#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hookforest/forest.hpp"

namespace hookforest {

/// One-line word sigma_1..sigma_n with |sigma| a permutation of 1..n.
class SignedPermutation {
public:
    SignedPermutation() = default;
    /// Throws std::invalid_argument on a malformed word.
    explicit SignedPermutation(std::vector<int> values);
    SignedPermutation(std::initializer_list<int> values)
        : SignedPermutation(std::vector<int>(values)) {}

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    /// 0-based access: at(0) is sigma_1.
    [[nodiscard]] int operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] const std::vector<int>& values() const { return values_; }

    /// sigma as a map on +-[1,n]: image of j (j != 0).
    [[nodiscard]] int apply(int j) const;

    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> values_;
};

std::string render_word(const SignedPermutation& sigma);

/// Visits B_n (or S_n / D_n by mode) in lexicographic order.
void for_each_signed_permutation(std::size_t n, SignMode mode,
                                 const std::function<void(const SignedPermutation&)>& visit);

/// Linear extensions of (F, w): label words along every vertex order that
/// lists each vertex after its whole proper subtree. Sorted lexicographically.
std::vector<SignedPermutation> linear_extensions(const Forest& forest, const Labeling& w);

/// Vertex orders underlying linear_extensions, same order as the words.
std::vector<std::vector<Vertex>> linear_extension_orders(const Forest& forest, const Labeling& w);

}  // namespace hookforest
