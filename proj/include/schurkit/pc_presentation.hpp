#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurkit/word.hpp"

namespace schurkit {

// Power-conjugate presentation of a finite polycyclic group.
//   g_i^{r_i}       = power_relations[i]          (a word in g_{i+1..n-1})
//   g_i g_j g_i^-1  = conjugate_relations[i][j]   (i < j, a word in g_{i+1..n-1})
// Left-conjugation convention throughout.
struct PcPresentation {
    int ngens = 0;
    std::vector<int> relative_orders;
    std::vector<Word> power_relations;
    std::vector<std::vector<Word>> conjugate_relations;
    std::optional<int> prime;

    PcPresentation() = default;
    // Trivial relations: direct product of cyclic groups of the given orders.
    explicit PcPresentation(std::vector<int> orders);

    const Word& conjugate(int i, int j) const { return conjugate_relations[i][j]; }
    void set_power(int i, Word w) { power_relations[i] = std::move(w); }
    void set_conjugate(int i, int j, Word w) { conjugate_relations[i][j] = std::move(w); }
    // Throws ValidationError if the product overflows 64 bits.
    std::uint64_t order() const;

    bool operator==(const PcPresentation&) const = default;
};

// p if every relative order is a power of the same prime p.
std::optional<int> infer_prime(const std::vector<int>& orders);

// Index ranges, exponent ranges and the pc shape of every relation.
void validate(const PcPresentation& pcp);

PcPresentation parse_pc_presentation(std::string_view text);
PcPresentation read_pc_file(const std::string& path);
std::string serialize(const PcPresentation& pcp);

// Finite presentation; relators are words equal to the identity.
struct FpPresentation {
    int ngens = 0;
    std::vector<Word> relators;
    std::vector<std::string> generator_labels;

    void validate() const;
};

}  // namespace schurkit
