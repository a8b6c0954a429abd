#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schurkit/collector.hpp"
#include "schurkit/subgroup.hpp"

namespace schurkit {

enum class Truth { no, yes, unknown };
std::string to_string(Truth t);
inline Truth truth(bool b) { return b ? Truth::yes : Truth::no; }

struct StructureOptions {
    std::uint64_t normal_search_limit = 1024;   // enumerate normal subgroups up to this order
    std::size_t normal_search_cap = 20000;      // give up after this many normal subgroups
    std::uint64_t metacyclic_limit = 4096;
    std::uint64_t frattini_search_limit = 256;  // non-nilpotent groups: maximal-subgroup search
};

struct StructureReport {
    std::uint64_t group_id = 0;  // PcGroup::id() of the analyzed group
    std::uint64_t order = 1;
    std::optional<int> prime;
    std::uint64_t exponent = 1;
    std::optional<int> nilpotency_class;  // empty when not nilpotent
    int derived_length = 0;
    std::vector<Subgroup> lower_central;   // gamma_1 = G, gamma_2, ... down to the terminal term
    std::vector<Subgroup> upper_central;   // Z_0 = 1, Z_1, ... up to the hypercenter
    std::vector<Subgroup> derived_series;  // G, G', G'', ... down to the terminal term
    Subgroup center;
    Subgroup commutator;
    std::uint64_t center_exponent = 1;
    std::uint64_t central_quotient_exponent = 1;
    std::optional<Subgroup> frattini;
    std::optional<Subgroup> agemo;          // G^p, p-groups only
    std::vector<std::uint64_t> abelianization;  // invariant factors of G/G'
    std::optional<int> generator_rank;      // d(G) for p-groups

    Truth metacyclic = Truth::unknown;
    Truth commutator_cyclic = Truth::unknown;
    Truth frattini_abelian = Truth::unknown;
    Truth frattini_cyclic = Truth::unknown;
    Truth frattini_powerful = Truth::unknown;
    Truth commutator_powerful = Truth::unknown;
    Truth gamma_p_plus_1_powerful = Truth::unknown;
    Truth center_in_frattini = Truth::unknown;

    // Complete list of normal subgroups, when the search finished.
    Truth normal_search_complete = Truth::unknown;
    std::vector<Subgroup> normal_subgroups;
    std::vector<Subgroup> abelian_normal;

    bool is_abelian() const { return commutator.is_trivial(); }
    bool is_p_group() const { return prime.has_value(); }
};

StructureReport structure(const PcGroup& g, const StructureOptions& opts = {});

// Largest n with x in gamma_n(G); empty for the identity.
std::optional<int> weight(const StructureReport& s, PcGroup::Index x);

// H' <= H^p for odd p; unknown for p = 2 or non-p-groups.
Truth is_powerful(const PcGroup& g, const Subgroup& h, std::optional<int> p);
Subgroup derived_subgroup(const PcGroup& g, const Subgroup& h);

// Normal subgroups by joins of normal closures of elements; empty when the cap is hit.
std::optional<std::vector<Subgroup>> normal_subgroups(const PcGroup& g, std::size_t cap);

// Intersection of the kernels of all homomorphisms G -> C_q for q dividing |G|.
Subgroup frattini_by_homomorphisms(const PcGroup& g);

// A consistent pc presentation of G/N for a normal subgroup N.
PcPresentation quotient(const PcGroup& g, const Subgroup& n);

// Invariant factors of a finite abelian group of the given order from
// c(q, k) = #{x : x^{q^k} = 1}.
template <class Count>
std::vector<std::uint64_t> invariants_from_counts(std::uint64_t order, Count c);
// Invariant factors d_1 | d_2 | ... (all > 1) of a direct sum of cyclic groups.
std::vector<std::uint64_t> normalize_invariants(const std::vector<std::uint64_t>& cyclic_orders);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace schurkit

#include "schurkit/detail/invariants.hpp"
