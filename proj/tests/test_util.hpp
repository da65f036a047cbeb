#pragma once

#include <cstdlib>
#include <initializer_list>
#include <vector>

#include "hookforest/forest.hpp"
#include "hookforest/qpoly.hpp"
#include "hookforest/signed_permutation.hpp"

namespace testutil {

using namespace hookforest;

// Coefficient list c0 + c1 q + c2 q^2 + ...
inline BiPoly qpoly(std::initializer_list<long long> coeffs) {
    BiPoly out;
    std::uint32_t k = 0;
    for (long long c : coeffs) out.add_term(0, k++, c);
    return out;
}

inline BiPoly qn(long long m) { return q_number(m); }

// Labels of a chain read from the bottom vertex up.
inline SignedPermutation bottom_up_word(const Labeling& w) {
    return SignedPermutation(std::vector<int>(w.values().rbegin(), w.values().rend()));
}

// Relabel so absolute values become 1..k, keeping signs and relative order of |values|.
inline std::vector<int> standardize(const std::vector<int>& values) {
    std::vector<int> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        int rank = 1;
        for (int v : values)
            if (std::abs(v) < std::abs(values[i])) ++rank;
        out[i] = values[i] < 0 ? -rank : rank;
    }
    return out;
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace testutil
