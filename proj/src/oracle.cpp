#include "schurkit/oracle.hpp"

#include <numeric>
#include <random>

#include "schurkit/coset_enum.hpp"
#include "schurkit/errors.hpp"

namespace schurkit {

std::optional<std::uint64_t> tensor_order_by_definition(const PcGroup& g, std::uint32_t budget) {
    if (g.order() > 32) throw ResourceError("defining presentation limited to |G| <= 32");
    const int n = static_cast<int>(g.size());
    auto t = [n](int a, int b) { return a * n + b; };
    FpPresentation fp;
    fp.ngens = n * n;
    for (int i = 0; i < fp.ngens; ++i) fp.generator_labels.push_back("t" + std::to_string(i));
    for (int a = 0; a < n; ++a)
        for (int a1 = 0; a1 < n; ++a1)
            for (int b = 0; b < n; ++b) {
                Word left{{t(g.mul(a, a1), b), 1}, {t(a, b), -1}, {t(g.conj(a, a1), g.conj(a, b)), -1}};
                Word right{{t(a, g.mul(a1, b)), 1}, {t(g.conj(a1, a), g.conj(a1, b)), -1}, {t(a, a1), -1}};
                fp.relators.push_back(free_reduce(left));
                fp.relators.push_back(free_reduce(right));
            }
    EnumOptions opts;
    opts.budget = budget;
    const EnumResult r = enumerate_cosets(fp, {}, opts);
    if (!r.complete) return std::nullopt;
    return r.table.cosets;
}

std::uint64_t abelian_tensor_order(const std::vector<std::uint64_t>& invariants) {
    std::uint64_t order = 1;
    for (std::uint64_t a : invariants)
        for (std::uint64_t b : invariants) order *= std::gcd(a, b);
    return order;
}

AssociativityResult check_associativity(const PcGroup& g, std::uint64_t exhaustive_limit, std::uint64_t samples,
                                        std::uint64_t seed) {
    AssociativityResult res;
    const std::uint64_t n = g.order();
    const std::uint64_t total = n * n * n;
    res.exhaustive = total <= exhaustive_limit;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    const std::uint64_t count = res.exhaustive ? total : samples;
    for (std::uint64_t k = 0; k < count && res.associative; ++k) {
        PcGroup::Index a, b, c;
        if (res.exhaustive) {
            a = PcGroup::Index(k / (n * n));
            b = PcGroup::Index(k / n % n);
            c = PcGroup::Index(k % n);
        } else {
            a = PcGroup::Index(pick(rng));
            b = PcGroup::Index(pick(rng));
            c = PcGroup::Index(pick(rng));
        }
        ++res.triples;
        res.associative = g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
    }
    return res;
}

}  // namespace schurkit
