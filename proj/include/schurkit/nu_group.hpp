#pragma once

#include <string>
#include <vector>

#include "schurkit/collector.hpp"
#include "schurkit/coset_enum.hpp"
#include "schurkit/pc_presentation.hpp"

namespace schurkit {

struct NuOptions {
    // Add [x_g, y_g] for the generators and their pairwise products, giving
    // nu(G) / nabla(G).
    bool exterior = false;
    // Instantiate the action relations over all triples of group elements
    // instead of pc generators (cross-check for tiny groups).
    bool full_relations = false;
};

// nu(G) on generators x_1..x_n (the group G) and y_1..y_n (its copy G^phi).
struct NuPresentation {
    FpPresentation fp;
    int base_ngens = 0;
    std::vector<std::string> provenance;  // one per relator
    bool exterior = false;

    int x(int i) const { return i; }
    int y(int i) const { return base_ngens + i; }
    // Subgroup generators of the copy G^phi.
    std::vector<Word> copy_generators() const;
};

// Word for g in the x letters (copy = false) or y letters (copy = true).
Word lift(const PcGroup& g, PcGroup::Index e, bool copy);
// [x_a, y_b]
Word tensor_word(const PcGroup& g, PcGroup::Index a, PcGroup::Index b);

// The action relations in left-conjugation form:
//   x_k [x_a, y_b] x_k^-1 = [x_{k a k^-1}, y_{k b k^-1}] = y_k [x_a, y_b] y_k^-1
// as two relators, for the conjugator k.
std::vector<Word> action_relators(const PcGroup& g, PcGroup::Index k, PcGroup::Index a, PcGroup::Index b);

NuPresentation build_nu(const PcGroup& g, const NuOptions& opts = {});

// Regular representation of nu(G): enumeration over the trivial subgroup.
EnumResult enumerate_nu(const NuPresentation& nu, std::uint32_t budget);

}  // namespace schurkit
