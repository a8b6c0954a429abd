#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "schurkit/collector.hpp"

namespace schurkit {

// A subgroup of an indexable PcGroup, held as a membership set.
class Subgroup {
  public:
    using Index = PcGroup::Index;

    std::vector<Index> gens;
    std::vector<Index> elements;  // ascending
    std::vector<bool> member;

    std::uint64_t order() const { return elements.size(); }
    bool contains(Index x) const { return member[x]; }
    bool is_trivial() const { return elements.size() == 1; }
    bool operator==(const Subgroup& o) const { return member == o.member; }

    std::vector<GroupElement> generators(const PcGroup& g) const;
};

Subgroup trivial_subgroup(const PcGroup& g);
Subgroup whole_group(const PcGroup& g);
Subgroup generate(const PcGroup& g, std::span<const Subgroup::Index> gens);
// <h, more>
Subgroup extend(const PcGroup& g, const Subgroup& h, std::span<const Subgroup::Index> more);
Subgroup normal_closure(const PcGroup& g, std::span<const Subgroup::Index> gens);
Subgroup normal_closure(const PcGroup& g, const Subgroup& h);
Subgroup join(const PcGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup intersection(const PcGroup& g, const Subgroup& a, const Subgroup& b);
// [A, B] for normal subgroups A and B
Subgroup commutator_subgroup(const PcGroup& g, const Subgroup& a, const Subgroup& b);
// <h^k : h in H>
Subgroup power_subgroup(const PcGroup& g, const Subgroup& h, std::int64_t k);
Subgroup centralizer(const PcGroup& g, const Subgroup& h);
Subgroup center(const PcGroup& g);

bool is_normal(const PcGroup& g, const Subgroup& h);
bool is_abelian(const PcGroup& g, const Subgroup& h);
bool is_cyclic(const PcGroup& g, const Subgroup& h);
bool is_subset(const Subgroup& a, const Subgroup& b);
std::uint64_t exponent(const PcGroup& g, const Subgroup& h);
// smallest k >= 1 with x^k in N
std::uint64_t order_modulo(const PcGroup& g, Subgroup::Index x, const Subgroup& n);
// e(H/N) for N normal in H
std::uint64_t quotient_exponent(const PcGroup& g, const Subgroup& h, const Subgroup& n);

// A pc presentation of H from the series H meet <g_i, ..., g_n>.
PcPresentation induced_presentation(const PcGroup& g, const Subgroup& h);

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace schurkit
