#include <algorithm>

#include "doctest.h"
#include "schurkit/catalog.hpp"
#include "schurkit/conjectures.hpp"
#include "schurkit/errors.hpp"

using namespace schurkit;

namespace {

bool has(const std::vector<std::string>& v, const std::string& id) {
    return std::find(v.begin(), v.end(), id) != v.end();
}

const TheoremRecord& record(const CheckReport& r, const std::string& id) {
    for (const auto& t : r.theorems)
        if (t.id == id) return t;
    throw std::runtime_error("no record " + id);
}

struct Run {
    PcGroup g;
    StructureReport s;
    TensorSquareResult r;
    explicit Run(const std::string& spec)
        : g(catalog_group(spec)), s(structure(g)), r(tensor_square(g)) {}
};

}  // namespace

TEST_CASE("classification of D8") {
    const auto ids = classify(structure(PcGroup(catalog_group("dihedral:8"))));
    CHECK(has(ids, "central_quotient_exponent_2_or_3"));
    CHECK(has(ids, "cyclic_commutator"));
    CHECK(has(ids, "metacyclic"));
    CHECK(has(ids, "two_group_frattini_abelian"));
    CHECK_FALSE(has(ids, "odd_cyclic_commutator"));
    CHECK_FALSE(has(ids, "odd_class_7"));
}

TEST_CASE("classification of the Heisenberg group mod 3") {
    const auto ids = classify(structure(PcGroup(catalog_group("heisenberg_mod:3"))));
    CHECK(has(ids, "cyclic_commutator"));
    CHECK(has(ids, "odd_exponent_p_derived_length_below_4"));
    CHECK(has(ids, "metabelian_exponent_p"));
    CHECK(has(ids, "center_exponent_p_class_p_plus_1"));
    CHECK(has(ids, "three_group_class_at_most_7"));
    CHECK_FALSE(has(ids, "metacyclic"));
}

TEST_CASE("cyclic groups satisfy everything vacuously") {
    for (const char* spec : {"cyclic:5", "cyclic:9"}) {
        Run x(spec);
        const auto rep = check(x.g, x.s, x.r);
        CHECK(rep.verdict.c1);
        CHECK(rep.verdict.c2);
        CHECK(rep.verdict.c3 == true);
        CHECK(rep.verdict.multiplier_exponent == 1);
        CHECK_FALSE(rep.red_alert());
        CHECK(has(classify(x.s), "metacyclic"));
    }
}

TEST_CASE("D8 and Q8 bounds") {
    Run d8("dihedral:8");
    const auto rd = check(d8.g, d8.s, d8.r);
    CHECK(rd.verdict.multiplier_exponent == 2);
    CHECK(rd.verdict.group_exponent == 4);
    CHECK(rd.verdict.c1);
    const auto& a = record(rd, "central_quotient_exponent_2_or_3");
    CHECK(a.bound_holds == true);
    CHECK(a.lhs == 4);
    CHECK(a.rhs == 4);
    const auto& m = record(rd, "cyclic_commutator");
    CHECK(m.lhs == 2);
    CHECK(m.bound_holds == true);

    Run q8("quaternion:8");
    const auto rq = check(q8.g, q8.s, q8.r);
    CHECK(rq.verdict.multiplier_exponent == 1);
    CHECK_FALSE(rq.red_alert());
}

TEST_CASE("metabelian exponent p groups") {
    for (const char* spec : {"heisenberg_mod:3", "heisenberg_mod:5", "abelian:3,3"}) {
        Run x(spec);
        const auto& t = record(check(x.g, x.s, x.r), "metabelian_exponent_p");
        CAPTURE(spec);
        CHECK(t.hypotheses == Truth::yes);
        CHECK(t.bound_holds == true);
        CHECK(x.s.exponent % x.r.exterior_exponent == 0);
    }
}

TEST_CASE("unknown hypotheses are never evaluated") {
    Run x("dihedral:8");
    for (const auto& t : check(x.g, x.s, x.r).theorems)
        if (t.hypotheses != Truth::yes) CHECK_FALSE(t.bound_holds.has_value());
}

TEST_CASE("a wrong exponent raises a red alert") {
    Run x("dihedral:8");
    TensorSquareResult bad = x.r;
    bad.exterior_exponent = 8;
    const auto rep = check(x.g, x.s, bad);
    CHECK(rep.red_alert());
    CHECK(record(rep, "central_quotient_exponent_2_or_3").red_alert());
}

TEST_CASE("mismatched reports are rejected") {
    Run d8("dihedral:8"), q8("quaternion:8");
    CHECK_THROWS_AS(check(d8.g, q8.s, d8.r), ValidationError);
    CHECK_THROWS_AS(check(d8.g, d8.s, q8.r), ValidationError);
    TensorOptions o;
    o.budget = 5;
    CHECK_THROWS_AS(check(d8.g, d8.s, tensor_square(d8.g, o)), ValidationError);
}

TEST_CASE("verdict cascade") {
    for (const auto& spec : default_catalog()) {
        const PcGroup g(catalog_group(spec));
        if (g.order() > 81) continue;
        const auto s = structure(g);
        const auto r = tensor_square(g);
        const auto v = conjecture_verdict(s, r.multiplier_exponent);
        CAPTURE(spec);
        if (v.c1) CHECK(v.c2);
        if (v.c1 && v.c3) CHECK(*v.c3);
        CHECK(v.c3.has_value() == s.prime.has_value());
        CHECK(r.exterior_exponent % r.multiplier_exponent == 0);
    }
}

TEST_CASE("power commutator laws") {
    for (const char* spec : {"maximal_class_3:4", "wreath_cp_cp:3", "heisenberg_mod:5", "extraspecial_minus:5"}) {
        const PcGroup g(catalog_group(spec));
        const auto checks = power_commutator_checks(g, structure(g));
        CAPTURE(spec);
        CHECK_FALSE(checks.empty());
        for (const auto& c : checks) {
            CAPTURE(c.name);
            CHECK(c.passed);
            CHECK(c.cases > 0);
        }
    }
    CHECK(power_commutator_checks(PcGroup(catalog_group("dihedral:8")), structure(PcGroup(catalog_group("dihedral:8"))))
              .empty());
}

TEST_CASE("scan rows") {
    CHECK(scan({}).rows.empty());

    std::vector<ScanInput> in;
    in.push_back({"d8", catalog_group("dihedral:8"), ""});
    in.push_back({"bad", parse_pc_presentation("gens 2; orders 3 3; conj 1 2 -> g2^2\n"), ""});
    in.push_back({"unreadable", std::nullopt, "line 1, column 1: unknown statement"});
    in.push_back({"s3", catalog_group("dihedral:6"), ""});
    const auto rep = scan(in);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.rows[0].status == "ok");
    CHECK(rep.rows[0].e_multiplier == 2);
    CHECK(rep.rows[0].multiplier_invariants == std::vector<std::uint64_t>{2});
    CHECK(rep.rows[1].status == "rejected");
    CHECK_FALSE(rep.rows[1].overlap_failures.empty());
    CHECK(rep.rows[2].status == "rejected");
    CHECK(rep.rows[3].status == "ok");
    CHECK_FALSE(rep.rows[3].verdict->c3.has_value());
    CHECK(rep.rejected() == 2);
    CHECK(rep.red_alerts() == 0);
    CHECK(rep.check_failures() == 0);
}

TEST_CASE("starved rows carry no values") {
    ScanOptions o;
    o.budget = 10;
    const auto row = scan_one({"h", catalog_group("heisenberg_mod:3"), ""}, o);
    CHECK(row.status == "budget_exceeded");
    CHECK_FALSE(row.e_multiplier.has_value());
    CHECK_FALSE(row.verdict.has_value());
    CHECK(row.theorems.empty());
}
