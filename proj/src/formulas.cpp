#include "hookforest/formulas.hpp"

#include <stdexcept>
#include <string>

#include "hookforest/stats.hpp"

namespace hookforest {

Coeff hook_multiplicity(const Forest& forest) {
    Coeff factorial = 1;
    Coeff hooks = 1;
    for (std::size_t k = 2; k <= forest.size(); ++k) factorial *= static_cast<unsigned>(k);
    for (std::size_t h : forest.hooks()) hooks *= static_cast<unsigned>(h);
    if (factorial % hooks != 0) throw std::logic_error("n! is not divisible by the hook product");
    return factorial / hooks;
}

namespace {

template <typename Factor>
BiPoly hook_product(const Forest& forest, Factor factor) {
    BiPoly out = BiPoly(1).scaled(hook_multiplicity(forest));
    for (std::size_t h : forest.hooks()) out *= factor(static_cast<std::uint32_t>(h));
    return out;
}

}  // namespace

BiPoly rhs_bw(const Forest& forest) {
    return hook_product(forest, [](std::uint32_t h) { return q_number(h); });
}

BiPoly rhs_inv_b(const Forest& forest) {
    return hook_product(forest, [](std::uint32_t h) { return q_number(2 * h); });
}

BiPoly rhs_inv_d(const Forest& forest) {
    if (forest.empty()) return 1;
    const BiPoly doubled =
        hook_product(forest, [](std::uint32_t h) { return (BiPoly(1) + BiPoly::q_power(h - 1)) * q_number(h); });
    BiPoly out;
    for (const auto& [m, c] : doubled.terms()) {
        if (c % 2 != 0) throw std::logic_error("type D hook product has an odd coefficient");
        out.add_term(m.t_exp, m.q_exp, c / 2);
    }
    return out;
}

BiPoly rhs_bivariate_inv(const Forest& forest) {
    return hook_product(forest,
                        [](std::uint32_t h) { return (BiPoly(1) + BiPoly::monomial(1, h)) * q_number(h); });
}

BiPoly rhs_bivariate_inv_d(const Forest& forest) {
    return hook_product(forest,
                        [](std::uint32_t h) { return (BiPoly(1) + BiPoly::monomial(1, h - 1)) * q_number(h); });
}

BiPoly rhs_fmaj(const Forest& forest) { return rhs_inv_b(forest); }

BiPoly rhs_bivariate_maj_b(const Forest& forest) {
    return rhs_bw(forest) * pow(BiPoly(1) + BiPoly::monomial(1, 1), static_cast<unsigned>(forest.size()));
}

BiPoly rhs_rmaj(const Forest& forest) { return rhs_inv_b(forest); }

BiPoly rhs_linext(const Forest& forest, const Labeling& w) {
    BiPoly hooks = 1;
    for (std::size_t h : forest.hooks()) hooks *= q_number(static_cast<long long>(h));
    const BiPoly quotient = divide_exact(q_factorial(static_cast<long long>(forest.size())), hooks);
    return BiPoly::q_power(static_cast<std::uint32_t>(maj_b_forest(forest, w))) * quotient;
}

Series rhs_forest_partition_gf(const Forest& forest, std::uint32_t degree) {
    Series out(1, degree);
    for (std::size_t h : forest.hooks()) out = out * geometric_series(static_cast<long long>(h), degree);
    return out;
}

Series rhs_partition_gf(const Forest& forest, const Labeling& w, std::uint32_t degree) {
    const Series shift(BiPoly::q_power(static_cast<std::uint32_t>(maj_b_forest(forest, w))), degree);
    return shift * rhs_forest_partition_gf(forest, degree);
}

BiPoly rhs_reiner(std::size_t n) {
    return pow(BiPoly(1) + BiPoly::monomial(1, 1), static_cast<unsigned>(n)) * q_factorial(static_cast<long long>(n));
}

BiPoly rhs_maj_b_perm(std::size_t n) { return rhs_reiner(n); }

BiPoly rhs_len_b(std::size_t n) {
    BiPoly out = 1;
    for (std::size_t k = 1; k <= n; ++k) out *= q_number(static_cast<long long>(2 * k));
    return out;
}

BiPoly rhs_len_d(std::size_t n) {
    if (n == 0) return 1;
    BiPoly out = q_number(static_cast<long long>(n));
    for (std::size_t k = 1; k < n; ++k) out *= q_number(static_cast<long long>(2 * k));
    return out;
}

std::string_view theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::inv_b: return "thm-inv-b";
        case TheoremId::inv_d: return "thm-inv-d";
        case TheoremId::fmaj: return "thm-fmaj";
        case TheoremId::rmaj: return "thm-rmaj";
        case TheoremId::bivariate_inv: return "thm-bivariate-inv";
        case TheoremId::bivariate_maj_b: return "thm-bivariate-majB";
        case TheoremId::bw: return "thm-bw";
        case TheoremId::le1: return "thm-le1";
        case TheoremId::partition_gf: return "lem-partition-gf";
        case TheoremId::reiner: return "eq-reiner";
        case TheoremId::len_b: return "len-b";
        case TheoremId::len_d: return "len-d";
    }
    return "?";
}

TheoremId parse_theorem(std::string_view name) {
    for (TheoremId id : kAllTheorems)
        if (theorem_name(id) == name) return id;
    throw std::invalid_argument("unknown theorem id: " + std::string(name));
}

BiPoly rhs_for(TheoremId id, const Forest& forest, std::uint32_t degree) {
    switch (id) {
        case TheoremId::bw: return rhs_bw(forest);
        case TheoremId::inv_b: return rhs_inv_b(forest);
        case TheoremId::inv_d: return rhs_inv_d(forest);
        case TheoremId::fmaj: return rhs_fmaj(forest);
        case TheoremId::rmaj: return rhs_rmaj(forest);
        case TheoremId::bivariate_inv: return rhs_bivariate_inv(forest);
        case TheoremId::bivariate_maj_b: return rhs_bivariate_maj_b(forest);
        case TheoremId::le1: {
            BiPoly sum;
            for_each_labeling(forest.size(), SignMode::signed_,
                              [&](const Labeling& w) { sum += rhs_linext(forest, w); });
            return sum;
        }
        case TheoremId::partition_gf: {
            BiPoly sum;
            for_each_labeling(forest.size(), SignMode::signed_,
                              [&](const Labeling& w) { sum += rhs_partition_gf(forest, w, degree).poly(); });
            return sum;
        }
        case TheoremId::reiner: return rhs_reiner(forest.size());
        case TheoremId::len_b: return rhs_len_b(forest.size());
        case TheoremId::len_d: return rhs_len_d(forest.size());
    }
    throw std::invalid_argument("unknown theorem id");
}

}  // namespace hookforest
