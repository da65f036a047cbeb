#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hookforest {

/// Thrown on malformed forest text; offset is the byte position of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    [[nodiscard]] std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

using Vertex = std::size_t;
inline constexpr Vertex kNoParent = static_cast<Vertex>(-1);

/**
 * A plane forest. Vertices are numbered 0..n-1 in depth-first preorder
 * (root, then its subtrees left to right; trees left to right), so the
 * proper subtree of v is exactly the index range (v, v + hook(v)).
 *
 * As a poset the roots are maximal: u <_F v iff u is in the proper subtree of v.
 */
class Forest {
public:
    Forest() = default;

    /// Builds from a preorder parent vector; throws std::invalid_argument
    /// if the vector is not in preorder form.
    explicit Forest(std::vector<Vertex> parent);

    [[nodiscard]] std::size_t size() const { return parent_.size(); }
    [[nodiscard]] bool empty() const { return parent_.empty(); }

    [[nodiscard]] Vertex parent(Vertex v) const { return parent_.at(v); }
    [[nodiscard]] bool is_root(Vertex v) const { return parent_.at(v) == kNoParent; }
    [[nodiscard]] const std::vector<Vertex>& children(Vertex v) const { return children_.at(v); }
    [[nodiscard]] const std::vector<Vertex>& roots() const { return roots_; }
    [[nodiscard]] const std::vector<Vertex>& parents() const { return parent_; }

    /// Size of the subtree rooted at v.
    [[nodiscard]] std::size_t hook(Vertex v) const { return hooks_.at(v); }
    [[nodiscard]] const std::vector<std::size_t>& hooks() const { return hooks_; }

    friend bool operator==(const Forest& a, const Forest& b) { return a.parent_ == b.parent_; }

private:
    std::vector<Vertex> parent_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<Vertex> roots_;
    std::vector<std::size_t> hooks_;
};

/// Parses a concatenation of balanced-paren trees, e.g. "(()())()".
Forest parse_forest(std::string_view text);

/// Parses a 1-based parent array such as "[0,1,1,0]" (0 marks a root).
/// Children keep their array order; the result is renumbered into preorder.
Forest parse_parent_array(std::string_view text);

/// Accepts either the paren form or the bracketed parent-array form.
Forest parse_forest_any(std::string_view text);

std::string render_forest(const Forest& forest);

/// h_u for every vertex.
std::vector<std::size_t> hook_lengths(const Forest& forest);

/// True iff b lies in the proper subtree of a (b <_F a).
bool is_strict_ancestor(const Forest& forest, Vertex a, Vertex b);

/// Every plane forest on n vertices, in lexicographic order of the paren
/// string ('(' < ')').
std::vector<Forest> enumerate_forests(std::size_t n);

Forest chain_forest(std::size_t n);
Forest antichain_forest(std::size_t n);

// ---------------------------------------------------------------------------
// Labelings

enum class SignMode { ordinary, signed_, even_signed };

std::string_view to_string(SignMode mode);
SignMode parse_sign_mode(std::string_view text);

/// Values w(v) indexed by vertex. |w| is a permutation of 1..n.
class Labeling {
public:
    Labeling() = default;
    /// Throws std::invalid_argument unless |values| is a permutation of 1..n.
    explicit Labeling(std::vector<int> values);

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] int operator[](Vertex v) const { return values_[v]; }
    [[nodiscard]] const std::vector<int>& values() const { return values_; }

    [[nodiscard]] std::size_t negative_count() const;
    [[nodiscard]] bool satisfies(SignMode mode) const;

    friend auto operator<=>(const Labeling&, const Labeling&) = default;

private:
    std::vector<int> values_;
};

/// Parses "-1,2,3" (values in vertex order).
Labeling parse_labeling(std::string_view text);
std::string render_labeling(const Labeling& w);

std::size_t labeling_count(std::size_t n, SignMode mode);

/// Visits every labeling of an n-vertex forest for the mode, in
/// lexicographic order of the value vector.
void for_each_labeling(std::size_t n, SignMode mode, const std::function<void(const Labeling&)>& visit);

std::vector<Labeling> enumerate_labelings(const Forest& forest, SignMode mode);

/// Canonical decreasing labeling: values 1..n in postorder, so every
/// ancestor carries a larger value than its descendants. "(()())" -> (3,1,2).
Labeling decreasing_labeling(const Forest& forest);

}  // namespace hookforest
