#include "schurkit/hall_basis.hpp"

#include "schurkit/errors.hpp"

namespace schurkit {

HallBasis hall_basis(int rank, int max_class) {
    if (rank < 1 || max_class < 1) throw ValidationError("Hall basis needs rank >= 1 and class >= 1");
    HallBasis h;
    h.rank = rank;
    h.max_class = max_class;
    h.weight_begin.assign(max_class + 2, 0);
    h.weight_begin[1] = 0;
    for (int i = 0; i < rank; ++i) h.elements.push_back({1, i, -1, -1});
    h.weight_begin[2] = h.elements.size();
    for (int w = 2; w <= max_class; ++w) {
        const std::size_t end_prev = h.elements.size();
        for (std::size_t u = 0; u < end_prev; ++u) {
            const BasicCommutator& bu = h.elements[u];
            for (std::size_t v = 0; v < u; ++v) {
                const BasicCommutator& bv = h.elements[v];
                if (bu.weight + bv.weight != w) continue;
                if (bu.generator < 0 && static_cast<std::size_t>(bu.right) > v) continue;
                h.elements.push_back({w, -1, static_cast<int>(u), static_cast<int>(v)});
            }
        }
        h.weight_begin[w + 1] = h.elements.size();
    }
    return h;
}

std::string HallBasis::label(std::size_t i, const std::vector<std::string>& names) const {
    const BasicCommutator& b = elements[i];
    if (b.generator >= 0) {
        if (static_cast<std::size_t>(b.generator) < names.size()) return names[b.generator];
        return "x" + std::to_string(b.generator + 1);
    }
    return "[" + label(b.left, names) + "," + label(b.right, names) + "]";
}

std::uint64_t witt_count(int rank, int weight) {
    if (weight < 1) return 0;
    auto mobius = [](int n) {
        int m = 1;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                m = -m;
            }
        if (n > 1) m = -m;
        return m;
    };
    auto ipow = [](std::int64_t b, int e) {
        std::int64_t r = 1;
        while (e--) r *= b;
        return r;
    };
    std::int64_t s = 0;
    for (int d = 1; d <= weight; ++d)
        if (weight % d == 0) s += mobius(d) * ipow(rank, weight / d);
    return static_cast<std::uint64_t>(s / weight);
}

}  // namespace schurkit
