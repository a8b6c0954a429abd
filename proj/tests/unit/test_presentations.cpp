#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "schurkit/catalog.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/pc_presentation.hpp"

using namespace schurkit;

TEST_CASE("parse a Heisenberg presentation") {
    const auto p = parse_pc_presentation("gens 3; orders 3 3 3;\nconj 1 2 -> g2*g3\n");
    CHECK(p.ngens == 3);
    CHECK(p.order() == 27);
    CHECK(p.prime == 3);
    CHECK(p.conjugate(0, 1) == Word{{1, 1}, {2, 1}});
    // omitted relations default to trivial ones
    CHECK(p.power_relations[0].empty());
    CHECK(p.conjugate(0, 2) == Word{{2, 1}});
    CHECK(p.conjugate(1, 2) == Word{{2, 1}});
}

TEST_CASE("comments, blank lines and exponents") {
    const auto p = parse_pc_presentation("# C8\ngens 3;\n\norders 2 2 2;  # chain\npow 1 -> g2\npow 2 -> g3^1\n");
    CHECK(p.order() == 8);
    CHECK(p.power_relations[0] == Word{{1, 1}});
    CHECK(p.power_relations[1] == Word{{2, 1}});
}

TEST_CASE("serialize round trip on the catalog") {
    for (const auto& spec : default_catalog()) {
        const auto p = catalog_group(spec);
        const auto text = serialize(p);
        CAPTURE(spec);
        CHECK(parse_pc_presentation(text) == p);
    }
}

TEST_CASE("mixed relative orders have no prime") {
    CHECK(infer_prime({2, 3}) == std::nullopt);
    CHECK(infer_prime({4, 2}) == 2);
    CHECK(infer_prime({}) == std::nullopt);
    CHECK(catalog_group("dihedral:6").prime == std::nullopt);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_pc_presentation("gens 2;\norders 2 2;\nfoo 1\n");
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 1);
    }
    CHECK_THROWS_AS(parse_pc_presentation("orders 2 2;"), ParseError);
    CHECK_THROWS_AS(parse_pc_presentation("gens 2; orders 2;"), ParseError);
    CHECK_THROWS_AS(parse_pc_presentation("gens 2; orders 2 2; pow 1 -> g2\npow 1 -> id\n"), ParseError);
    CHECK_THROWS_AS(parse_pc_presentation("gens 2; orders 2 2; conj 2 1 -> g1\n"), Error);
    CHECK_THROWS_AS(parse_pc_presentation("gens 1; orders 1;"), ParseError);
}

TEST_CASE("relation words must lie below the generator") {
    // pow 2 may only use g3..; exponents must be reduced
    CHECK_THROWS_AS(parse_pc_presentation("gens 2; orders 2 2; pow 2 -> g1\n"), Error);
    CHECK_THROWS_AS(parse_pc_presentation("gens 2; orders 2 2; conj 1 2 -> g2^5\n"), Error);
}

TEST_CASE("validate catches shape errors") {
    PcPresentation p({2, 2});
    p.power_relations.pop_back();
    CHECK_THROWS_AS(validate(p), ValidationError);
    PcPresentation q({2, 2});
    q.set_power(0, {{0, 1}});
    CHECK_THROWS_AS(validate(q), ValidationError);
}

TEST_CASE("missing files are IO errors") {
    CHECK_THROWS_AS(read_pc_file("/nonexistent/missing.pc"), IoError);
    const auto path = std::filesystem::temp_directory_path() / "schurkit_test_v4.pc";
    {
        std::ofstream out(path);
        out << "gens 2;\norders 2 2;\n";
    }
    CHECK(read_pc_file(path.string()).order() == 4);
    std::filesystem::remove(path);
}

TEST_CASE("catalog orders") {
    CHECK(catalog_group("cyclic:12").order() == 12);
    CHECK(catalog_group("abelian:4,2").order() == 8);
    CHECK(catalog_group("dihedral:18").order() == 18);
    CHECK(catalog_group("quaternion:16").order() == 16);
    CHECK(catalog_group("extraspecial_plus:3,2").order() == 243);
    CHECK(catalog_group("catalog:heisenberg_mod:5").order() == 125);
    CHECK(catalog_group("maximal_class_3:5").order() == 243);
    CHECK(catalog_group("wreath_cp_cp:3").order() == 81);
    CHECK_THROWS_AS(catalog_group("nosuch:3"), ValidationError);
    CHECK_THROWS_AS(catalog_group("dihedral:7"), ValidationError);
    CHECK(default_catalog().size() >= 12);
}
