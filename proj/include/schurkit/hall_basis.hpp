#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace schurkit {

// A basic commutator: a generator (weight 1) or [left, right] of earlier elements.
struct BasicCommutator {
    int weight = 1;
    int generator = -1;
    int left = -1;
    int right = -1;
};

// Hall basis of the free nilpotent group of the given rank and class, ordered
// by weight and lexicographically on (left, right) within a weight. [u, v]
// is basic when u > v and, if u = [u1, u2], u2 <= v.
struct HallBasis {
    int rank = 0;
    int max_class = 0;
    std::vector<BasicCommutator> elements;
    std::vector<std::size_t> weight_begin;  // size max_class + 2

    std::size_t size() const { return elements.size(); }
    std::size_t count(int weight) const { return weight_begin[weight + 1] - weight_begin[weight]; }
    // "x1", "[x2,x1]", ... with the supplied generator names
    std::string label(std::size_t i, const std::vector<std::string>& names = {}) const;
};

HallBasis hall_basis(int rank, int max_class);

// Number of basic commutators of weight n on r generators: (1/n) sum_{d|n} mu(d) r^{n/d}
std::uint64_t witt_count(int rank, int weight);

}  // namespace schurkit
