#include <cstdlib>

#include "doctest.h"
#include "schurkit/coset_enum.hpp"
#include "schurkit/errors.hpp"

using namespace schurkit;

namespace {

Word pw(int g, int e) { return {{g, e}}; }

FpPresentation fp(int n, std::vector<Word> rels) {
    FpPresentation p;
    p.ngens = n;
    p.relators = std::move(rels);
    return p;
}

// every column is a permutation and every relator fixes every coset
bool closed(const FpPresentation& p, const CosetTable& t) {
    for (int col = 0; col < t.columns(); col += 2)
        for (std::uint32_t c = 0; c < t.cosets; ++c)
            if (t.act(t.act(c, col), col + 1) != c) return false;
    for (const Word& r : p.relators)
        for (std::uint32_t c = 0; c < t.cosets; ++c)
            if (t.trace(c, r) != c) return false;
    return true;
}

}  // namespace

TEST_CASE("cyclic groups") {
    for (int n : {1, 2, 5, 12}) {
        const auto p = fp(1, {pw(0, n)});
        const auto r = enumerate_cosets(p, {});
        REQUIRE(r.complete);
        CHECK(r.table.cosets == std::uint32_t(n));
        CHECK(closed(p, r.table));
    }
}

TEST_CASE("symmetric group of degree 3") {
    // <a, b | a^3, b^2, (ab)^2>
    const auto p = fp(2, {pw(0, 3), pw(1, 2), {{0, 1}, {1, 1}, {0, 1}, {1, 1}}});
    const auto r = enumerate_cosets(p, {});
    REQUIRE(r.complete);
    CHECK(r.table.cosets == 6);
    CHECK(closed(p, r.table));
    CHECK(enumerate_cosets(p, {pw(0, 1)}).table.cosets == 2);
    CHECK(enumerate_cosets(p, {pw(1, 1)}).table.cosets == 3);
}

TEST_CASE("coincidences collapse a redundant presentation") {
    // <a, b | a^6, b = a^2, b^3 a^-1> is cyclic of order 1: a^6 = 1 and a^6 = a
    const auto p = fp(2, {pw(0, 6), {{1, 1}, {0, -2}}, {{1, 3}, {0, -1}}});
    const auto r = enumerate_cosets(p, {});
    REQUIRE(r.complete);
    CHECK(r.table.cosets == 1);
}

TEST_CASE("quaternion group") {
    // <a, b | a^4, a^2 b^-2, b a b^-1 a>
    const auto p = fp(2, {pw(0, 4), {{0, 2}, {1, -2}}, {{1, 1}, {0, 1}, {1, -1}, {0, 1}}});
    const auto r = enumerate_cosets(p, {});
    REQUIRE(r.complete);
    CHECK(r.table.cosets == 8);
    CHECK(closed(p, r.table));
}

TEST_CASE("budget exhaustion is reported, not fabricated") {
    const auto p = fp(2, {pw(0, 5), pw(1, 5), {{0, 1}, {1, 1}, {0, -1}, {1, -1}}});
    EnumOptions small;
    small.budget = 3;
    CHECK_FALSE(enumerate_cosets(p, {}, small).complete);
    CHECK(enumerate_cosets(p, {}).table.cosets == 25);
}

TEST_CASE("table dump format") {
    const auto r = enumerate_cosets(fp(1, {pw(0, 3)}), {});
    const std::string d = r.table.dump();
    CHECK(d.rfind("cosets 3\ngens 1\n", 0) == 0);
    // three rows of two 1-based targets
    int lines = 0;
    for (char c : d) lines += c == '\n';
    CHECK(lines == 5);
}

TEST_CASE("bad presentations") {
    CHECK_THROWS_AS(enumerate_cosets(fp(1, {pw(1, 2)}), {}), ValidationError);
}

TEST_CASE("budget environment override") {
    ::setenv("SCHURKIT_BUDGET", "1234", 1);
    CHECK(default_budget() == 1234);
    ::setenv("SCHURKIT_BUDGET", "lots", 1);
    CHECK_THROWS_AS(default_budget(), ValidationError);
    ::unsetenv("SCHURKIT_BUDGET");
    CHECK(default_budget() == 2'000'000);
}
