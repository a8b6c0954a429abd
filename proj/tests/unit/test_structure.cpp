#include "doctest.h"
#include "schurkit/catalog.hpp"
#include "schurkit/structure.hpp"

using namespace schurkit;

namespace {

StructureReport of(const std::string& spec) { return structure(PcGroup(catalog_group(spec))); }

std::vector<std::uint64_t> orders(const std::vector<Subgroup>& s) {
    std::vector<std::uint64_t> o;
    for (const auto& h : s) o.push_back(h.order());
    return o;
}

}  // namespace

TEST_CASE("dihedral of order 8") {
    const auto s = of("dihedral:8");
    CHECK(s.order == 8);
    CHECK(s.prime == 2);
    CHECK(s.exponent == 4);
    CHECK(s.nilpotency_class == 2);
    CHECK(s.derived_length == 2);
    CHECK(s.center.order() == 2);
    CHECK(s.center_exponent == 2);
    CHECK(s.central_quotient_exponent == 2);
    CHECK(s.commutator.order() == 2);
    CHECK(s.abelianization == std::vector<std::uint64_t>{2, 2});
    CHECK(s.frattini->order() == 2);
    CHECK(s.agemo->order() == 2);
    CHECK(s.generator_rank == 2);
    CHECK(s.metacyclic == Truth::yes);
    CHECK(s.commutator_cyclic == Truth::yes);
    CHECK(s.frattini_abelian == Truth::yes);
    CHECK(s.frattini_cyclic == Truth::yes);
    CHECK(s.center_in_frattini == Truth::yes);
    CHECK(s.normal_search_complete == Truth::yes);
    // 1, Z, three subgroups of order 4, G
    CHECK(s.normal_subgroups.size() == 6);
    CHECK(s.abelian_normal.size() == 5);
}

TEST_CASE("Heisenberg group mod 3") {
    const PcGroup g(catalog_group("heisenberg_mod:3"));
    const auto s = structure(g);
    CHECK(s.exponent == 3);
    CHECK(s.nilpotency_class == 2);
    CHECK(orders(s.lower_central) == std::vector<std::uint64_t>{27, 3, 1});
    CHECK(orders(s.upper_central) == std::vector<std::uint64_t>{1, 3, 27});
    CHECK(s.center.order() == 3);
    CHECK(s.commutator == s.center);
    CHECK(*s.frattini == s.center);
    CHECK(s.metacyclic == Truth::no);
    // every subgroup containing Z is normal: 1, Z, four of order 9, G
    CHECK(s.normal_subgroups.size() == 7);
    CHECK(weight(s, g.generator_index(2)) == 2);
    CHECK(weight(s, g.generator_index(0)) == 1);
    CHECK(weight(s, 0) == std::nullopt);
    // Heis/Z is elementary abelian of order 9
    const PcGroup q(quotient(g, s.center));
    const auto sq = structure(q);
    CHECK(sq.order == 9);
    CHECK(sq.is_abelian());
    CHECK(sq.exponent == 3);
}

TEST_CASE("central quotient of D8 is the Klein four-group") {
    const PcGroup g(catalog_group("dihedral:8"));
    const auto s = structure(g);
    const auto q = structure(PcGroup(quotient(g, s.center)));
    CHECK(q.order == 4);
    CHECK(q.is_abelian());
    CHECK(q.abelianization == std::vector<std::uint64_t>{2, 2});
}

TEST_CASE("quaternion group") {
    const auto s = of("quaternion:8");
    CHECK(s.exponent == 4);
    CHECK(s.center.order() == 2);
    CHECK(s.normal_subgroups.size() == 6);
    CHECK(s.commutator_cyclic == Truth::yes);
    CHECK(s.metacyclic == Truth::yes);
}

TEST_CASE("non-nilpotent groups") {
    const auto s = of("dihedral:6");
    CHECK_FALSE(s.nilpotency_class.has_value());
    CHECK_FALSE(s.prime.has_value());
    CHECK(s.derived_length == 2);
    CHECK(s.center.is_trivial());
    CHECK(s.central_quotient_exponent == 6);
    CHECK(s.normal_subgroups.size() == 3);
    CHECK(s.abelianization == std::vector<std::uint64_t>{2});
    CHECK(s.frattini->is_trivial());
}

TEST_CASE("abelian groups") {
    const auto c8 = of("cyclic:8");
    CHECK(c8.nilpotency_class == 1);
    CHECK(c8.is_abelian());
    CHECK(c8.derived_length == 1);
    CHECK(c8.abelianization == std::vector<std::uint64_t>{8});
    const auto e8 = of("abelian:2,2,2");
    // subgroups of F_2^3: 1 + 7 + 7 + 1
    CHECK(e8.normal_subgroups.size() == 16);
    CHECK(e8.generator_rank == 3);
    CHECK(of("abelian:9,3").abelianization == std::vector<std::uint64_t>{3, 9});
    CHECK(of("cyclic:12").abelianization == std::vector<std::uint64_t>{12});
}

TEST_CASE("maximal class and wreath products") {
    CHECK(of("maximal_class_3:4").nilpotency_class == 3);
    CHECK(of("maximal_class_3:5").nilpotency_class == 4);
    CHECK(of("dihedral:16").nilpotency_class == 3);
    const auto w = of("wreath_cp_cp:3");
    CHECK(w.nilpotency_class == 3);
    CHECK(w.exponent == 9);
    CHECK(of("extraspecial_minus:3").exponent == 9);
    CHECK(of("extraspecial_plus:3,2").center.order() == 3);
}

TEST_CASE("invariant factor helpers") {
    CHECK(normalize_invariants({2, 3}) == std::vector<std::uint64_t>{6});
    CHECK(normalize_invariants({4, 2, 1}) == std::vector<std::uint64_t>{2, 4});
    CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
}
