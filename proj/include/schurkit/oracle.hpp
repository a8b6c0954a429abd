#pragma once

#include <cstdint>
#include <optional>

#include "schurkit/collector.hpp"

namespace schurkit {

// Cross-checks that share no code with the nu(G) construction.

// |G (x) G| from the defining presentation: |G|^2 symbols t(g,h) subject to
//   t(g g1, h) = t(^g g1, ^g h) t(g, h),  t(g, h h1) = t(g, h) t(^h g, ^h h1),
// enumerated over the trivial subgroup. Empty when the budget runs out.
// Throws ResourceError for |G| > 32.
std::optional<std::uint64_t> tensor_order_by_definition(const PcGroup& g, std::uint32_t budget);

// |G (x) G| for abelian G = Z_d1 + ... + Z_dk: the product of gcd(di, dj) over all i, j.
std::uint64_t abelian_tensor_order(const std::vector<std::uint64_t>& invariants);

// Associativity of the element multiplication table on every triple, or on
// the given number of seeded samples when |G|^3 exceeds the limit.
struct AssociativityResult {
    bool associative = true;
    bool exhaustive = true;
    std::uint64_t triples = 0;
};
AssociativityResult check_associativity(const PcGroup& g, std::uint64_t exhaustive_limit = 8'000'000,
                                        std::uint64_t samples = 100'000, std::uint64_t seed = 1);

}  // namespace schurkit
