#include "hookforest/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hookforest {

SignedPermutation::SignedPermutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int x : values_) {
        const auto a = static_cast<std::size_t>(std::abs(x));
        if (x == 0 || a > values_.size() || seen[a]) {
            throw std::invalid_argument("not a signed permutation");
        }
        seen[a] = true;
    }
}

int SignedPermutation::apply(int j) const {
    if (j == 0 || static_cast<std::size_t>(std::abs(j)) > values_.size()) {
        throw std::out_of_range("signed permutation argument out of range");
    }
    return j > 0 ? values_[j - 1] : -values_[-j - 1];
}

std::string render_word(const SignedPermutation& sigma) {
    std::string out = "(";
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sigma[i]);
    }
    return out + ")";
}

void for_each_signed_permutation(std::size_t n, SignMode mode,
                                 const std::function<void(const SignedPermutation&)>& visit) {
    for_each_labeling(n, mode, [&](const Labeling& w) { visit(SignedPermutation(w.values())); });
}

std::vector<std::vector<Vertex>> linear_extension_orders(const Forest& forest, const Labeling& w) {
    const std::size_t n = forest.size();
    if (w.size() != n) throw std::invalid_argument("labeling size does not match forest");
    std::vector<std::vector<Vertex>> orders;
    std::vector<Vertex> order;
    // pending[v] = children of v not yet placed; v is available once it hits 0.
    std::vector<std::size_t> pending(n);
    std::vector<bool> placed(n, false);
    for (Vertex v = 0; v < n; ++v) pending[v] = forest.children(v).size();

    std::function<void()> extend = [&] {
        if (order.size() == n) {
            orders.push_back(order);
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v] || pending[v] != 0) continue;
            placed[v] = true;
            order.push_back(v);
            if (!forest.is_root(v)) --pending[forest.parent(v)];
            extend();
            if (!forest.is_root(v)) ++pending[forest.parent(v)];
            order.pop_back();
            placed[v] = false;
        }
    };
    extend();

    auto word_of = [&](const std::vector<Vertex>& ord) {
        std::vector<int> word;
        word.reserve(n);
        for (Vertex v : ord) word.push_back(w[v]);
        return word;
    };
    std::sort(orders.begin(), orders.end(),
              [&](const auto& a, const auto& b) { return word_of(a) < word_of(b); });
    return orders;
}

std::vector<SignedPermutation> linear_extensions(const Forest& forest, const Labeling& w) {
    std::vector<SignedPermutation> out;
    for (const auto& order : linear_extension_orders(forest, w)) {
        std::vector<int> word;
        word.reserve(order.size());
        for (Vertex v : order) word.push_back(w[v]);
        out.emplace_back(std::move(word));
    }
    return out;
}

}  // namespace hookforest
