#include "hookforest/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "hookforest/formulas.hpp"
#include "hookforest/stats.hpp"

namespace hookforest {

std::uint64_t PartitionMap::weight() const {
    std::uint64_t sum = 0;
    for (auto x : f) sum += x;
    return sum;
}

bool is_forest_partition(const Forest& forest, const PartitionMap& f) {
    if (f.f.size() != forest.size()) return false;
    for (Vertex x = 0; x < forest.size(); ++x)
        for (Vertex y = x + 1; y < x + forest.hook(x); ++y)
            if (f.f[x] > f.f[y]) return false;
    return true;
}

bool is_type_b_partition(const Forest& forest, const Labeling& w, const PartitionMap& f) {
    if (!is_forest_partition(forest, f)) return false;
    for (Vertex x = 0; x < forest.size(); ++x) {
        for (Vertex y = x + 1; y < x + forest.hook(x); ++y)
            if (w[x] < w[y] && f.f[x] >= f.f[y]) return false;
        if (forest.is_root(x) && w[x] > 0 && f.f[x] < 1) return false;
    }
    return true;
}

namespace {

// Visits every f in {0..degree}^n with |f| <= degree, lexicographically.
void for_each_bounded_map(std::size_t n, std::uint32_t degree, const std::function<void(const PartitionMap&)>& visit) {
    PartitionMap f{std::vector<std::uint32_t>(n, 0)};
    std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t pos, std::uint32_t budget) {
        if (pos == n) {
            visit(f);
            return;
        }
        for (std::uint32_t value = 0; value <= budget; ++value) {
            f.f[pos] = value;
            fill(pos + 1, budget - value);
        }
        f.f[pos] = 0;
    };
    fill(0, degree);
}

BiPoly weight_series(const std::vector<PartitionMap>& maps) {
    MonomialTally tally;
    for (const auto& f : maps) tally.add(0, static_cast<std::int64_t>(f.weight()));
    return tally.to_poly();
}

}  // namespace

std::vector<PartitionMap> enumerate_partitions(const Forest& forest, const Labeling& w, std::uint32_t degree) {
    std::vector<PartitionMap> out;
    for_each_bounded_map(forest.size(), degree, [&](const PartitionMap& f) {
        if (is_type_b_partition(forest, w, f)) out.push_back(f);
    });
    return out;
}

std::vector<PartitionMap> enumerate_forest_partitions(const Forest& forest, std::uint32_t degree) {
    std::vector<PartitionMap> out;
    for_each_bounded_map(forest.size(), degree, [&](const PartitionMap& f) {
        if (is_forest_partition(forest, f)) out.push_back(f);
    });
    return out;
}

Series partition_lhs_series(const Forest& forest, const Labeling& w, std::uint32_t degree) {
    return Series(weight_series(enumerate_partitions(forest, w, degree)), degree);
}

PartitionMap partition_shift(const Forest& forest, const Labeling& w, const PartitionMap& f) {
    PartitionMap out = f;
    for (Vertex u : descents_b_forest(forest, w)) {
        for (Vertex x = u; x < u + forest.hook(u); ++x) {
            if (out.f[x] == 0) throw std::invalid_argument("partition_shift: input is not a type B partition");
            --out.f[x];
        }
    }
    return out;
}

bool sigma_compatible(const SignedPermutation& sigma, std::span<const std::uint32_t> values) {
    const std::size_t n = sigma.size();
    if (values.size() != n) return false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (values[i] < values[i + 1]) return false;
        if (sigma[i] > sigma[i + 1] && values[i] == values[i + 1]) return false;
    }
    if (n > 0 && sigma[n - 1] > 0 && values[n - 1] < 1) return false;
    return true;
}

CheckReport check_decomposition_dec1(const Forest& forest, const Labeling& w, std::uint32_t degree) {
    const auto orders = linear_extension_orders(forest, w);
    std::vector<SignedPermutation> words;
    for (const auto& order : orders) {
        std::vector<int> word;
        for (Vertex v : order) word.push_back(w[v]);
        words.emplace_back(std::move(word));
    }

    MonomialTally lhs;
    MonomialTally rhs;
    std::optional<std::string> witness;
    std::vector<std::uint32_t> along(forest.size());
    for_each_bounded_map(forest.size(), degree, [&](const PartitionMap& f) {
        const bool member = is_type_b_partition(forest, w, f);
        std::size_t compatible = 0;
        for (std::size_t k = 0; k < orders.size(); ++k) {
            for (std::size_t i = 0; i < orders[k].size(); ++i) along[i] = f.f[orders[k][i]];
            if (sigma_compatible(words[k], along)) {
                ++compatible;
                rhs.add(0, static_cast<std::int64_t>(f.weight()));
            }
        }
        if (member) lhs.add(0, static_cast<std::int64_t>(f.weight()));
        if (compatible != (member ? 1u : 0u) && !witness) {
            std::string text;
            for (auto x : f.f) text += (text.empty() ? "" : ",") + std::to_string(x);
            witness = "f=(" + text + ") compatible with " + std::to_string(compatible) + " extensions, member=" +
                      (member ? "yes" : "no");
        }
    });
    return CheckReport{"lem-dec1", render_forest(forest) + " w=" + render_labeling(w), lhs.to_poly(), rhs.to_poly(),
                       !witness, witness};
}

CheckReport check_partition_shift(const Forest& forest, const Labeling& w, std::uint32_t degree) {
    const auto major = static_cast<std::uint64_t>(maj_b_forest(forest, w));
    const auto members = enumerate_partitions(forest, w, degree);
    std::optional<std::string> witness;
    std::set<PartitionMap> images;
    MonomialTally lhs;
    MonomialTally rhs;
    for (const auto& f : members) {
        lhs.add(0, static_cast<std::int64_t>(f.weight()));
        PartitionMap g;
        try {
            g = partition_shift(forest, w, f);
        } catch (const std::invalid_argument& e) {
            if (!witness) witness = e.what();
            continue;
        }
        if (!is_forest_partition(forest, g) && !witness) witness = "image is not an F-partition";
        if (f.weight() != major + g.weight() && !witness) witness = "|f| != maj_B + |image|";
        if (!images.insert(g).second && !witness) witness = "partition_shift is not injective";
    }
    if (major <= degree) {
        const auto targets = enumerate_forest_partitions(forest, static_cast<std::uint32_t>(degree - major));
        for (const auto& g : targets) rhs.add(0, static_cast<std::int64_t>(g.weight() + major));
        const std::set<PartitionMap> target_set(targets.begin(), targets.end());
        if (target_set != images && !witness) witness = "image differs from the F-partitions of bounded weight";
    } else if (!images.empty() && !witness) {
        witness = "partitions exist below maj_B";
    }
    return CheckReport{"lem-partition-shift", render_forest(forest) + " w=" + render_labeling(w), lhs.to_poly(),
                       rhs.to_poly(), !witness, witness};
}

namespace {

BiPoly extension_major_sum(const Forest& forest, const Labeling& w) { return linext_distribution(forest, w); }

}  // namespace

CheckReport check_partition_extension_series(const Forest& forest, const Labeling& w, std::uint32_t degree) {
    Series rhs(extension_major_sum(forest, w), degree);
    for (std::size_t k = 1; k <= forest.size(); ++k) rhs = rhs * geometric_series(static_cast<long long>(k), degree);
    return compare_polys("lem-abf", render_forest(forest) + " w=" + render_labeling(w),
                         partition_lhs_series(forest, w, degree).poly(), rhs.poly());
}

CheckReport check_partition_relation(const Forest& forest, const Labeling& w) {
    BiPoly lhs = extension_major_sum(forest, w);
    for (std::size_t h : forest.hooks()) lhs *= BiPoly(1) - BiPoly::q_power(static_cast<std::uint32_t>(h));
    BiPoly rhs = BiPoly::q_power(static_cast<std::uint32_t>(maj_b_forest(forest, w)));
    for (std::size_t k = 1; k <= forest.size(); ++k) rhs *= BiPoly(1) - BiPoly::q_power(static_cast<std::uint32_t>(k));
    return compare_polys("eq-relation", render_forest(forest) + " w=" + render_labeling(w), std::move(lhs),
                         std::move(rhs));
}

CheckReport check_stanley_specialization(const Forest& forest, std::uint32_t degree) {
    const std::string text = render_forest(forest);
    const BiPoly plain = weight_series(enumerate_forest_partitions(forest, degree));
    auto report = compare_polys("eq-stanley", text, plain, rhs_forest_partition_gf(forest, degree).poly());
    if (!report.pass) return report;

    const std::size_t n = forest.size();
    std::vector<int> magnitudes(n);
    for (std::size_t i = 0; i < n; ++i) magnitudes[i] = static_cast<int>(i + 1);
    std::size_t without_descents = 0;
    do {
        std::vector<int> values(n);
        for (std::size_t i = 0; i < n; ++i) values[i] = -magnitudes[i];
        const Labeling w(std::move(values));
        const auto dec = check_decomposition_dec1(forest, w, degree);
        if (!dec.pass) {
            report.pass = false;
            report.witness = "all-negative labeling " + render_labeling(w) + ": " + dec.witness.value_or("");
            return report;
        }
        if (descents_b_forest(forest, w).empty()) {
            ++without_descents;
            const auto series = partition_lhs_series(forest, w, degree).poly();
            if (auto diff = first_difference(series, report.rhs)) {
                report.pass = false;
                report.witness = "all-negative labeling " + render_labeling(w) + ": " + *diff;
                return report;
            }
        }
    } while (std::next_permutation(magnitudes.begin(), magnitudes.end()));
    if (without_descents == 0) {
        report.pass = false;
        report.witness = "no all-negative labeling without descents";
    }
    return report;
}

}  // namespace hookforest
