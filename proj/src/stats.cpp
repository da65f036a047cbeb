#include "hookforest/stats.hpp"

#include <stdexcept>
#include <string>

namespace hookforest {

namespace {

// Rank in the order 1 < 2 < ... < n < -n < ... < -1.
int reiner_rank(int x, int n) { return x > 0 ? x : 2 * n + 1 + x; }

}  // namespace

StatValue inv(const SignedPermutation& sigma) {
    StatValue count = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) ++count;
    return count;
}

StatValue maj(const SignedPermutation& sigma) {
    StatValue sum = 0;
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i] > sigma[i + 1]) sum += static_cast<StatValue>(i + 1);
    return sum;
}

StatValue n1(const SignedPermutation& sigma) {
    StatValue count = 0;
    for (int x : sigma.values())
        if (x < 0) ++count;
    return count;
}

StatValue n2(const SignedPermutation& sigma) {
    StatValue count = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] + sigma[j] < 0) ++count;
    return count;
}

StatValue len_b(const SignedPermutation& sigma) { return inv(sigma) + n1(sigma) + n2(sigma); }

StatValue len_d(const SignedPermutation& sigma) { return inv(sigma) + n2(sigma); }

StatValue negative_entry_sum(const SignedPermutation& sigma) {
    StatValue sum = 0;
    for (int x : sigma.values())
        if (x < 0) sum -= x;
    return sum;
}

StatValue len_d_negative_sum_form(const SignedPermutation& sigma) {
    return inv(sigma) + negative_entry_sum(sigma) - n1(sigma);
}

StatValue fmaj(const SignedPermutation& sigma) { return 2 * maj(sigma) + n1(sigma); }

StatValue nmaj(const SignedPermutation& sigma) { return maj(sigma) + n1(sigma) + n2(sigma); }

StatValue maj_r(const SignedPermutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    StatValue sum = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const int next = i + 1 < sigma.size() ? sigma[i + 1] : n;
        if (reiner_rank(sigma[i], n) > reiner_rank(next, n)) sum += static_cast<StatValue>(i + 1);
    }
    return sum;
}

StatValue maj_b(const SignedPermutation& sigma) {
    StatValue sum = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const int next = i + 1 < sigma.size() ? sigma[i + 1] : 0;
        if (sigma[i] > next) sum += static_cast<StatValue>(i + 1);
    }
    return sum;
}

StatValue p(const SignedPermutation& sigma) { return static_cast<StatValue>(sigma.size()) - n1(sigma); }

StatValue rmaj(const SignedPermutation& sigma) { return 2 * maj_b(sigma) - p(sigma); }

StatValue dmaj(const SignedPermutation& sigma) { return maj(sigma) + n2(sigma); }

// Forest level. Proper subtree of u is the preorder range (u, u + h_u).

StatValue inv_forest(const Forest& forest, const Labeling& w) {
    StatValue count = 0;
    for (Vertex u = 0; u < forest.size(); ++u)
        for (Vertex v = u + 1; v < u + forest.hook(u); ++v)
            if (w[u] < w[v]) ++count;
    return count;
}

std::vector<Vertex> descents_forest(const Forest& forest, const Labeling& w) {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < forest.size(); ++u)
        if (!forest.is_root(u) && w[u] > w[forest.parent(u)]) out.push_back(u);
    return out;
}

StatValue maj_forest(const Forest& forest, const Labeling& w) {
    StatValue sum = 0;
    for (Vertex u : descents_forest(forest, w)) sum += static_cast<StatValue>(forest.hook(u));
    return sum;
}

StatValue n1_forest(const Forest&, const Labeling& w) { return static_cast<StatValue>(w.negative_count()); }

StatValue n2_forest(const Forest& forest, const Labeling& w) {
    StatValue count = 0;
    for (Vertex v = 0; v < forest.size(); ++v)
        for (Vertex u = v + 1; u < v + forest.hook(v); ++u)
            if (w[u] + w[v] < 0) ++count;
    return count;
}

StatValue inv_b_forest(const Forest& forest, const Labeling& w) {
    return inv_forest(forest, w) + n1_forest(forest, w) + n2_forest(forest, w);
}

StatValue inv_d_forest(const Forest& forest, const Labeling& w) {
    if (w.negative_count() % 2 != 0) throw std::invalid_argument("inv_D requires an even-signed labeling");
    return inv_forest(forest, w) + n2_forest(forest, w);
}

StatValue fmaj_forest(const Forest& forest, const Labeling& w) {
    return 2 * maj_forest(forest, w) + n1_forest(forest, w);
}

std::vector<Vertex> descents_b_forest(const Forest& forest, const Labeling& w) {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < forest.size(); ++u) {
        const bool descent = forest.is_root(u) ? w[u] > 0 : w[u] > w[forest.parent(u)];
        if (descent) out.push_back(u);
    }
    return out;
}

StatValue maj_b_forest(const Forest& forest, const Labeling& w) {
    StatValue sum = 0;
    for (Vertex u : descents_b_forest(forest, w)) sum += static_cast<StatValue>(forest.hook(u));
    return sum;
}

StatValue p_forest(const Forest& forest, const Labeling& w) {
    return static_cast<StatValue>(forest.size() - w.negative_count());
}

StatValue rmaj_forest(const Forest& forest, const Labeling& w) {
    return 2 * maj_b_forest(forest, w) - p_forest(forest, w);
}

StatValue nmaj_forest(const Forest& forest, const Labeling& w) {
    return maj_forest(forest, w) + n1_forest(forest, w) + n2_forest(forest, w);
}

StatValue dmaj_forest(const Forest& forest, const Labeling& w) {
    return maj_forest(forest, w) + n2_forest(forest, w);
}

// ---------------------------------------------------------------------------

std::string_view stat_name(StatId id) {
    switch (id) {
        case StatId::inv: return "inv";
        case StatId::maj: return "maj";
        case StatId::n1: return "n1";
        case StatId::n2: return "n2";
        case StatId::len_b: return "len-b";
        case StatId::len_d: return "len-d";
        case StatId::fmaj: return "fmaj";
        case StatId::nmaj: return "nmaj";
        case StatId::maj_r: return "maj-r";
        case StatId::maj_b: return "maj-b";
        case StatId::p: return "p";
        case StatId::rmaj: return "rmaj";
        case StatId::dmaj: return "dmaj";
        case StatId::inv_f: return "inv-f";
        case StatId::maj_f: return "maj-f";
        case StatId::n1_f: return "n1-f";
        case StatId::n2_f: return "n2-f";
        case StatId::inv_b_f: return "inv-b";
        case StatId::inv_d_f: return "inv-d";
        case StatId::fmaj_f: return "fmaj-f";
        case StatId::maj_b_f: return "maj-b-f";
        case StatId::p_f: return "p-f";
        case StatId::rmaj_f: return "rmaj-f";
        case StatId::nmaj_f: return "nmaj-f";
        case StatId::dmaj_f: return "dmaj-f";
    }
    return "?";
}

StatId parse_stat(std::string_view name) {
    for (StatId id : kAllStats)
        if (stat_name(id) == name) return id;
    // Forest-level aliases.
    if (name == "inv-b-f") return StatId::inv_b_f;
    if (name == "inv-d-f") return StatId::inv_d_f;
    throw std::invalid_argument("unknown statistic: " + std::string(name));
}

bool is_forest_stat(StatId id) { return id >= StatId::inv_f; }

std::optional<StatId> permutation_counterpart(StatId id) {
    switch (id) {
        case StatId::inv_f: return StatId::inv;
        case StatId::maj_f: return StatId::maj;
        case StatId::n1_f: return StatId::n1;
        case StatId::n2_f: return StatId::n2;
        case StatId::inv_b_f: return StatId::len_b;
        case StatId::inv_d_f: return StatId::len_d;
        case StatId::fmaj_f: return StatId::fmaj;
        case StatId::maj_b_f: return StatId::maj_b;
        case StatId::p_f: return StatId::p;
        case StatId::rmaj_f: return StatId::rmaj;
        case StatId::nmaj_f: return StatId::nmaj;
        case StatId::dmaj_f: return StatId::dmaj;
        default: return std::nullopt;
    }
}

StatValue evaluate(StatId id, const SignedPermutation& s) {
    switch (id) {
        case StatId::inv: return inv(s);
        case StatId::maj: return maj(s);
        case StatId::n1: return n1(s);
        case StatId::n2: return n2(s);
        case StatId::len_b: return len_b(s);
        case StatId::len_d: return len_d(s);
        case StatId::fmaj: return fmaj(s);
        case StatId::nmaj: return nmaj(s);
        case StatId::maj_r: return maj_r(s);
        case StatId::maj_b: return maj_b(s);
        case StatId::p: return p(s);
        case StatId::rmaj: return rmaj(s);
        case StatId::dmaj: return dmaj(s);
        default: break;
    }
    throw std::invalid_argument(std::string(stat_name(id)) + " is not a permutation statistic");
}

StatValue evaluate(StatId id, const Forest& f, const Labeling& w) {
    switch (id) {
        case StatId::inv_f: return inv_forest(f, w);
        case StatId::maj_f: return maj_forest(f, w);
        case StatId::n1_f: return n1_forest(f, w);
        case StatId::n2_f: return n2_forest(f, w);
        case StatId::inv_b_f: return inv_b_forest(f, w);
        case StatId::inv_d_f: return inv_d_forest(f, w);
        case StatId::fmaj_f: return fmaj_forest(f, w);
        case StatId::maj_b_f: return maj_b_forest(f, w);
        case StatId::p_f: return p_forest(f, w);
        case StatId::rmaj_f: return rmaj_forest(f, w);
        case StatId::nmaj_f: return nmaj_forest(f, w);
        case StatId::dmaj_f: return dmaj_forest(f, w);
        default: break;
    }
    throw std::invalid_argument(std::string(stat_name(id)) + " is not a forest statistic");
}

}  // namespace hookforest
