#include "hookforest/forest.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace hookforest {

Forest::Forest(std::vector<Vertex> parent) : parent_(std::move(parent)) {
    const std::size_t n = parent_.size();
    children_.assign(n, {});
    hooks_.assign(n, 1);
    for (Vertex v = 0; v < n; ++v) {
        const Vertex p = parent_[v];
        if (p == kNoParent) {
            roots_.push_back(v);
        } else if (p >= v) {
            throw std::invalid_argument("parent vector is not in preorder");
        } else {
            children_[p].push_back(v);
        }
    }
    for (Vertex v = n; v-- > 0;) {
        if (parent_[v] != kNoParent) hooks_[parent_[v]] += hooks_[v];
    }
    // Preorder: every child starts right after the previous sibling's subtree.
    for (Vertex v = 0; v < n; ++v) {
        Vertex next = v + 1;
        for (Vertex c : children_[v]) {
            if (c != next) throw std::invalid_argument("parent vector is not in preorder");
            next = c + hooks_[c];
        }
    }
    Vertex next = 0;
    for (Vertex r : roots_) {
        if (r != next) throw std::invalid_argument("parent vector is not in preorder");
        next = r + hooks_[r];
    }
}

Forest parse_forest(std::string_view text) {
    std::vector<Vertex> parent;
    std::vector<Vertex> open;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(') {
            parent.push_back(open.empty() ? kNoParent : open.back());
            open.push_back(parent.size() - 1);
        } else if (c == ')') {
            if (open.empty()) throw ParseError("unbalanced ')'", i);
            open.pop_back();
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    if (!open.empty()) throw ParseError("unclosed '('", text.size());
    return Forest(std::move(parent));
}

Forest parse_parent_array(std::string_view text) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
    ++pos;
    std::vector<std::size_t> raw;
    skip_space();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            skip_space();
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw ParseError("expected parent index", pos);
            raw.push_back(std::stoul(std::string(text.substr(start, pos - start))));
            skip_space();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                break;
            }
            throw ParseError("expected ',' or ']'", pos);
        }
    }
    skip_space();
    if (pos != text.size()) throw ParseError("trailing characters", pos);

    const std::size_t n = raw.size();
    std::vector<std::vector<std::size_t>> kids(n);
    std::vector<std::size_t> tops;
    for (std::size_t v = 0; v < n; ++v) {
        if (raw[v] == 0) {
            tops.push_back(v);
        } else if (raw[v] > n || raw[v] == v + 1) {
            throw ParseError("parent index out of range", 0);
        } else {
            kids[raw[v] - 1].push_back(v);
        }
    }
    // Preorder walk; a cycle leaves vertices unreached.
    std::vector<Vertex> parent;
    std::vector<std::pair<std::size_t, Vertex>> stack;
    for (auto it = tops.rbegin(); it != tops.rend(); ++it) stack.emplace_back(*it, kNoParent);
    while (!stack.empty()) {
        auto [v, p] = stack.back();
        stack.pop_back();
        const Vertex id = parent.size();
        parent.push_back(p);
        for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) stack.emplace_back(*it, id);
    }
    if (parent.size() != n) throw ParseError("parent array contains a cycle", 0);
    return Forest(std::move(parent));
}

Forest parse_forest_any(std::string_view text) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string_view::npos && text[first] == '[') return parse_parent_array(text);
    return parse_forest(text);
}

std::string render_forest(const Forest& forest) {
    std::string out;
    out.reserve(2 * forest.size());
    std::vector<Vertex> open;
    for (Vertex v = 0; v < forest.size(); ++v) {
        while (!open.empty() && open.back() != forest.parent(v)) {
            out += ')';
            open.pop_back();
        }
        out += '(';
        open.push_back(v);
    }
    out.append(open.size(), ')');
    return out;
}

std::vector<std::size_t> hook_lengths(const Forest& forest) { return forest.hooks(); }

bool is_strict_ancestor(const Forest& forest, Vertex a, Vertex b) {
    if (a >= forest.size() || b >= forest.size()) throw std::out_of_range("vertex index out of range");
    return a < b && b < a + forest.hook(a);
}

std::vector<Forest> enumerate_forests(std::size_t n) {
    std::vector<Forest> out;
    std::vector<Vertex> parent;
    std::vector<Vertex> open;
    // Emitting '(' before ')' at each step walks the paren strings in lex order.
    std::function<void()> extend = [&] {
        if (parent.size() == n && open.empty()) {
            out.emplace_back(parent);
            return;
        }
        if (parent.size() < n) {
            parent.push_back(open.empty() ? kNoParent : open.back());
            open.push_back(parent.size() - 1);
            extend();
            open.pop_back();
            parent.pop_back();
        }
        if (!open.empty()) {
            const Vertex top = open.back();
            open.pop_back();
            extend();
            open.push_back(top);
        }
    };
    extend();
    return out;
}

Forest chain_forest(std::size_t n) {
    std::vector<Vertex> parent(n);
    for (Vertex v = 0; v < n; ++v) parent[v] = v == 0 ? kNoParent : v - 1;
    return Forest(std::move(parent));
}

Forest antichain_forest(std::size_t n) { return Forest(std::vector<Vertex>(n, kNoParent)); }

std::string_view to_string(SignMode mode) {
    switch (mode) {
        case SignMode::ordinary: return "ordinary";
        case SignMode::signed_: return "signed";
        case SignMode::even_signed: return "even-signed";
    }
    return "?";
}

SignMode parse_sign_mode(std::string_view text) {
    if (text == "ordinary") return SignMode::ordinary;
    if (text == "signed") return SignMode::signed_;
    if (text == "even-signed" || text == "even") return SignMode::even_signed;
    throw std::invalid_argument("unknown sign mode: " + std::string(text));
}

Labeling::Labeling(std::vector<int> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int x : values_) {
        const auto a = static_cast<std::size_t>(std::abs(x));
        if (x == 0 || a > values_.size() || seen[a]) {
            throw std::invalid_argument("labeling is not a signed permutation of 1..n");
        }
        seen[a] = true;
    }
}

std::size_t Labeling::negative_count() const {
    return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](int x) { return x < 0; }));
}

bool Labeling::satisfies(SignMode mode) const {
    switch (mode) {
        case SignMode::ordinary: return negative_count() == 0;
        case SignMode::signed_: return true;
        case SignMode::even_signed: return negative_count() % 2 == 0;
    }
    return false;
}

Labeling parse_labeling(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    if (text.empty()) return Labeling{};
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string token(text.substr(pos, comma - pos));
        token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                    token.end());
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ParseError("malformed label '" + token + "'", pos);
        }
        if (used != token.size()) throw ParseError("malformed label '" + token + "'", pos);
        values.push_back(value);
        pos = comma + 1;
    }
    try {
        return Labeling(std::move(values));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string render_labeling(const Labeling& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

std::size_t labeling_count(std::size_t n, SignMode mode) {
    std::size_t count = 1;
    for (std::size_t k = 2; k <= n; ++k) count *= k;
    if (mode == SignMode::ordinary) return count;
    count <<= n;
    if (mode == SignMode::even_signed && n > 0) count /= 2;
    return count;
}

void for_each_labeling(std::size_t n, SignMode mode, const std::function<void(const Labeling&)>& visit) {
    std::vector<int> values(n);
    std::vector<bool> used(n + 1, false);
    // Candidates in increasing integer order: -n..-1 then 1..n.
    std::vector<int> candidates;
    if (mode != SignMode::ordinary) {
        for (int k = static_cast<int>(n); k >= 1; --k) candidates.push_back(-k);
    }
    for (int k = 1; k <= static_cast<int>(n); ++k) candidates.push_back(k);

    Labeling scratch;
    std::function<void(std::size_t, std::size_t)> place = [&](std::size_t pos, std::size_t negatives) {
        if (pos == n) {
            if (mode == SignMode::even_signed && negatives % 2 != 0) return;
            scratch = Labeling(values);
            visit(scratch);
            return;
        }
        for (int c : candidates) {
            const auto a = static_cast<std::size_t>(std::abs(c));
            if (used[a]) continue;
            used[a] = true;
            values[pos] = c;
            place(pos + 1, negatives + (c < 0 ? 1 : 0));
            used[a] = false;
        }
    };
    place(0, 0);
}

std::vector<Labeling> enumerate_labelings(const Forest& forest, SignMode mode) {
    std::vector<Labeling> out;
    out.reserve(labeling_count(forest.size(), mode));
    for_each_labeling(forest.size(), mode, [&](const Labeling& w) { out.push_back(w); });
    return out;
}

Labeling decreasing_labeling(const Forest& forest) {
    const std::size_t n = forest.size();
    std::vector<int> values(n);
    int next = 1;
    std::function<void(Vertex)> post = [&](Vertex v) {
        for (Vertex c : forest.children(v)) post(c);
        values[v] = next++;
    };
    for (Vertex r : forest.roots()) post(r);
    return Labeling(std::move(values));
}

}  // namespace hookforest
