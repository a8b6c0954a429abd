#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "schurkit/catalog.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/nu_group.hpp"
#include "schurkit/oracle.hpp"
#include "schurkit/structure.hpp"
#include "schurkit/tensor.hpp"

using namespace schurkit;

namespace {

TensorSquareResult square(const std::string& spec, TierMode tier = TierMode::tensor, bool extended = false) {
    TensorOptions o;
    o.tier = tier;
    o.extended = extended;
    return tensor_square(PcGroup(catalog_group(spec)), o);
}

// elementary divisors (prime powers) of a direct sum of cyclic groups
std::multiset<std::uint64_t> elementary(const std::vector<std::uint64_t>& cyclic) {
    std::multiset<std::uint64_t> out;
    for (std::uint64_t d : cyclic)
        for (std::uint64_t p = 2; d > 1; ++p) {
            std::uint64_t q = 1;
            while (d % p == 0) {
                d /= p;
                q *= p;
            }
            if (q > 1) out.insert(q);
        }
    return out;
}

// M(Z_d1 + ... + Z_dk) = sum over i < j of Z_gcd(di, dj)
std::multiset<std::uint64_t> abelian_multiplier(const std::vector<std::uint64_t>& d) {
    std::vector<std::uint64_t> parts;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) parts.push_back(std::gcd(d[i], d[j]));
    return elementary(parts);
}

}  // namespace

TEST_CASE("nu of small groups by regular enumeration") {
    // |nu(G)| = |G|^2 |G (x) G|: C2 (x) C2 = Z2, V4 (x) V4 = Z2^4
    const PcGroup c2(catalog_group("cyclic:2"));
    const auto r2 = enumerate_nu(build_nu(c2), 100000);
    REQUIRE(r2.complete);
    CHECK(r2.table.cosets == 8);
    const PcGroup v4(catalog_group("abelian:2,2"));
    const auto r4 = enumerate_nu(build_nu(v4), 100000);
    REQUIRE(r4.complete);
    CHECK(r4.table.cosets == 256);
    CHECK_FALSE(enumerate_nu(build_nu(v4), 3).complete);
    CHECK_THROWS_AS(enumerate_nu(build_nu(v4), 0), ValidationError);
}

TEST_CASE("nu presentation shape") {
    const PcGroup g(catalog_group("dihedral:8"));
    const auto nu = build_nu(g);
    CHECK(nu.fp.ngens == 2 * g.ngens());
    CHECK(nu.copy_generators().size() == std::size_t(g.ngens()));
    CHECK(nu.provenance.size() == nu.fp.relators.size());
    CHECK(nu.y(0) == g.ngens());
}

TEST_CASE("agreement with the defining presentation") {
    for (const char* spec : {"cyclic:4", "cyclic:6", "abelian:2,2", "abelian:4,2", "dihedral:6", "dihedral:8",
                             "quaternion:8", "abelian:3,3"}) {
        const PcGroup g(catalog_group(spec));
        const auto def = tensor_order_by_definition(g, 2'000'000);
        const auto r = square(spec);
        CAPTURE(spec);
        REQUIRE(def.has_value());
        REQUIRE(r.tensor_order.has_value());
        CHECK(*r.tensor_order == *def);
        CHECK(r.nu_order == g.order() * g.order() * *r.tensor_order);
    }
}

TEST_CASE("known tensor squares and multipliers") {
    struct Known {
        const char* spec;
        std::uint64_t tensor, multiplier;
    };
    for (const Known& k : {Known{"dihedral:8", 32, 2}, Known{"quaternion:8", 64, 1}, Known{"dihedral:6", 6, 1},
                           Known{"heisenberg_mod:3", 729, 9}, Known{"cyclic:6", 6, 1}}) {
        const auto r = square(k.spec);
        CAPTURE(k.spec);
        CHECK(r.tensor_order == k.tensor);
        CHECK(r.multiplier_order == k.multiplier);
        CHECK(r.checks_passed());
    }
    CHECK(square("heisenberg_mod:3").multiplier_invariants == std::vector<std::uint64_t>{3, 3});
    CHECK(square("dihedral:16").multiplier_invariants == std::vector<std::uint64_t>{2});
    CHECK(square("extraspecial_minus:3", TierMode::exterior).multiplier_order == 1);
}

TEST_CASE("abelian groups match the alternating square") {
    for (const auto& spec : default_catalog()) {
        const PcGroup g(catalog_group(spec));
        const auto s = structure(g);
        if (!s.is_abelian() || g.order() > 64) continue;
        const auto r = tensor_square(g);
        CAPTURE(spec);
        CHECK(elementary(r.multiplier_invariants) == abelian_multiplier(s.abelianization));
        CHECK(elementary(abelian_exterior_square(s.abelianization)) == abelian_multiplier(s.abelianization));
        if (r.tensor_order) CHECK(*r.tensor_order == abelian_tensor_order(s.abelianization));
    }
}

TEST_CASE("exterior and tensor tiers agree") {
    for (const char* spec : {"dihedral:8", "quaternion:8", "heisenberg_mod:3", "dihedral:12", "abelian:2,2,2"}) {
        const auto t = square(spec, TierMode::tensor), e = square(spec, TierMode::exterior);
        CAPTURE(spec);
        CHECK(t.tier == TensorTier::tensor);
        CHECK(e.tier == TensorTier::exterior);
        CHECK(t.exterior_order == e.exterior_order);
        CHECK(t.exterior_exponent == e.exterior_exponent);
        CHECK(t.multiplier_invariants == e.multiplier_invariants);
        CHECK(e.checks_passed());
    }
}

TEST_CASE("full relations give the same answer") {
    for (const char* spec : {"cyclic:4", "abelian:2,2", "dihedral:8", "quaternion:8", "dihedral:12"}) {
        TensorOptions o;
        o.tier = TierMode::tensor;
        o.full_relations = true;
        const auto f = tensor_square(PcGroup(catalog_group(spec)), o);
        const auto r = square(spec);
        CAPTURE(spec);
        CHECK(f.tensor_order == r.tensor_order);
        CHECK(f.multiplier_invariants == r.multiplier_invariants);
    }
}

TEST_CASE("exterior square order splits as multiplier times commutator") {
    for (const auto& spec : default_catalog()) {
        const PcGroup g(catalog_group(spec));
        if (g.order() > 81) continue;
        const auto r = tensor_square(g);
        const auto s = structure(g);
        CAPTURE(spec);
        CHECK(r.exterior_order == r.multiplier_order * s.commutator.order());
        CHECK(r.exterior_exponent % r.multiplier_exponent == 0);
        if (r.tensor_order) CHECK(r.nu_order == g.order() * g.order() * *r.tensor_order);
        CHECK(r.checks_passed());
    }
}

TEST_CASE("orientation of the tensor symbols") {
    // g g1 (x) h = (^g g1 (x) ^g h)(g (x) h) and g (x) h h1 = (g (x) h)(^h g (x) ^h h1)
    for (const char* spec : {"dihedral:8", "quaternion:8", "dihedral:6"}) {
        const auto r = square(spec);
        const TensorModel& m = *r.model;
        const PcGroup& g = m.group();
        for (PcGroup::Index a = 0; a < g.size(); ++a)
            for (PcGroup::Index b = 0; b < g.size(); ++b) {
                CHECK(m.fold(m.tensor(a, b)) == g.comm(a, b));
                for (PcGroup::Index c = 0; c < g.size(); ++c) {
                    REQUIRE(m.tensor(g.mul(a, b), c) == m.mul(m.tensor(g.conj(a, b), g.conj(a, c)), m.tensor(a, c)));
                    REQUIRE(m.tensor(a, g.mul(b, c)) == m.mul(m.tensor(a, b), m.tensor(g.conj(b, a), g.conj(b, c))));
                }
            }
    }
}

TEST_CASE("commuting power tensors in C4 and D8") {
    const auto r4 = square("cyclic:4");
    const TensorModel& m = *r4.model;
    const PcGroup& g = m.group();
    const auto x = g.generator_index(0), x2 = g.mul(x, x);
    CHECK(m.tensor(x2, x2) == m.pow(m.tensor(x, x2), 2));
    const auto s = structure(PcGroup(catalog_group("dihedral:8")));
    for (const auto& c : power_tensor_check(s, square("dihedral:8"))) {
        CAPTURE(c.name);
        CHECK(c.passed);
        CHECK(c.exhaustive);
    }
}

TEST_CASE("element checks inside nu(G)") {
    for (const char* spec : {"dihedral:8", "quaternion:16", "heisenberg_mod:3", "maximal_class_3:4", "dihedral:6",
                             "wreath_cp_cp:3"}) {
        const PcGroup g(catalog_group(spec));
        const auto r = tensor_square(g);
        const auto s = structure(g);
        for (const auto& c : micro_lemma_checks(s, r)) {
            CAPTURE(spec);
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.passed);
            if (g.order() <= 81 && c.name != "normal_exterior_exponent") CHECK(c.exhaustive);
        }
    }
}

TEST_CASE("weight triviality is not vacuous on class 2") {
    const PcGroup g(catalog_group("heisenberg_mod:3"));
    const auto checks = weight_triviality_check(structure(g), tensor_square(g));
    REQUIRE(checks.size() == 2);
    CHECK(checks[0].cases > 0);
    CHECK(checks[0].passed);
}

TEST_CASE("budgets and envelopes") {
    TensorOptions o;
    o.budget = 10;
    const auto r = tensor_square(PcGroup(catalog_group("heisenberg_mod:3")), o);
    CHECK_FALSE(r.complete());
    CHECK(r.status == "budget_exceeded");
    CHECK_FALSE(r.model);
    CHECK_THROWS_AS(tensor_square(PcGroup(catalog_group("cyclic:256"))), ResourceError);
    CHECK_THROWS_AS(tensor_square(PcGroup(catalog_group("abelian:3,3,3,3,3"))), ResourceError);
    o.budget = 0;
    CHECK_THROWS_AS(tensor_square(PcGroup(catalog_group("cyclic:2")), o), ValidationError);
}

TEST_CASE("table retention") {
    TensorOptions o;
    o.keep_table = true;
    const auto r = tensor_square(PcGroup(catalog_group("cyclic:3")), o);
    REQUIRE(r.table);
    CHECK(r.table->cosets == r.cosets);
    CHECK_FALSE(tensor_square(PcGroup(catalog_group("cyclic:3"))).table);
}

TEST_CASE("abelian formulas") {
    CHECK(abelian_exterior_square({2, 2}) == std::vector<std::uint64_t>{2});
    CHECK(abelian_exterior_square({2, 2, 2}) == std::vector<std::uint64_t>{2, 2, 2});
    CHECK(abelian_exterior_square({12}).empty());
    CHECK(abelian_exterior_square({3, 9}) == std::vector<std::uint64_t>{3});
    CHECK(abelian_tensor_order({2, 2}) == 16);
    CHECK(abelian_tensor_order({6}) == 6);
}
