#pragma once

#include <algorithm>
#include <map>

#include "schurkit/errors.hpp"

namespace schurkit {

template <class Count>
std::vector<std::uint64_t> invariants_from_counts(std::uint64_t order, Count c) {
    std::vector<std::uint64_t> cyclic;
    for (std::uint64_t q : prime_divisors(order)) {
        int a = 0;
        for (std::uint64_t m = order; m % q == 0; m /= q) ++a;
        auto logq = [&](std::uint64_t v) {
            int s = 0;
            while (v % q == 0) {
                v /= q;
                ++s;
            }
            if (v != 1) throw InternalError("element count is not a prime power");
            return s;
        };
        std::vector<int> s(a + 2, 0);
        for (int k = 1; k <= a + 1; ++k) s[k] = logq(c(q, k));
        for (int k = 1; k <= a; ++k) {
            int at_least_k = s[k] - s[k - 1];
            int at_least_k1 = s[k + 1] - s[k];
            std::uint64_t qk = 1;
            for (int t = 0; t < k; ++t) qk *= q;
            for (int t = 0; t < at_least_k - at_least_k1; ++t) cyclic.push_back(qk);
        }
    }
    return normalize_invariants(cyclic);
}

}  // namespace schurkit
