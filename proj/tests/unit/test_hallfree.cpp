#include <fstream>
#include <random>

#include "doctest.h"
#include "schurkit/errors.hpp"
#include "schurkit/identity.hpp"

using namespace schurkit;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(SCHURKIT_DATA_DIR) + "/identities/" + name);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<long> range(long lo, long hi) {
    std::vector<long> v;
    for (long n = lo; n <= hi; ++n) v.push_back(n);
    return v;
}

}  // namespace

TEST_CASE("Witt counts") {
    const auto b = hall_basis(2, 5);
    CHECK(b.count(1) == 2);
    CHECK(b.count(2) == 1);
    CHECK(b.count(3) == 2);
    CHECK(b.count(4) == 3);
    CHECK(b.count(5) == 6);
    CHECK(b.size() == 14);
    CHECK(hall_basis(2, 8).size() == 71);
    CHECK(hall_basis(2, 1).size() == 2);
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 8; ++c) {
            const auto hb = hall_basis(r, c);
            for (int w = 1; w <= c; ++w) CHECK(hb.count(w) == witt_count(r, w));
        }
    // rank 3: 3, 3, 8, 18, 48
    CHECK(witt_count(3, 4) == 18);
    CHECK(witt_count(3, 5) == 48);
}

TEST_CASE("Hall conditions") {
    const auto b = hall_basis(3, 6);
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto& e = b.elements[i];
        if (e.weight == 1) continue;
        CHECK(e.left > e.right);
        CHECK(e.weight == b.elements[e.left].weight + b.elements[e.right].weight);
        if (b.elements[e.left].weight > 1) CHECK(b.elements[e.left].right <= e.right);
    }
}

TEST_CASE("collection of short words") {
    const auto ab = collect("a*b", {"a", "b"}, 5);
    CHECK(ab.exponents[0] == 1);
    CHECK(ab.exponents[1] == 1);
    for (std::size_t i = 2; i < ab.exponents.size(); ++i) CHECK(ab.exponents[i] == 0);
    const auto ba = collect("b*a", {"a", "b"}, 1);
    CHECK(ba.exponents == std::vector<mpz_class>{1, 1});
    // b a = a b [b,a] up to the sign convention; its weight-2 part is nonzero at class 2
    const auto ba2 = collect("b*a", {"a", "b"}, 2);
    CHECK(ba2.exponents[2] != 0);
}

TEST_CASE("square anchor") {
    for (int c : {3, 4, 5, 6})
        CHECK(collect("(a*b)^2", {"a", "b"}, c) == collect("[a,[b,a]] [b,a] a^2 b^2", {"a", "b"}, c));
    const auto t = parse_identities(slurp("square_anchor.id"));
    REQUIRE(t.size() == 1);
    const auto r = verify_identity(t[0]);
    CHECK(r.all_equal);
    CHECK(r.free_group_equal == true);
}

TEST_CASE("power of a product in class 5") {
    const auto t = parse_identities(slurp("power_of_product.id"));
    REQUIRE(t.size() == 1);
    const auto r = verify_identity(t[0], range(0, 6));
    CHECK(r.all_equal);
    CHECK(r.certified);
    CHECK(r.degree_bound == 5);
    // still true after truncation to class 3
    auto low = t[0];
    low.nil_class = 3;
    CHECK(verify_identity(low, range(0, 6)).all_equal);
}

TEST_CASE("a corrupted exponent is caught") {
    std::string text = slurp("power_of_product.id");
    const std::string good = "[a,b,a]^{C(n,2)+2*C(n,3)}";
    const auto at = text.find(good);
    REQUIRE(at != std::string::npos);
    text.replace(at, good.size(), "[a,b,a]^{C(n,2)}");
    const auto r = verify_identity(parse_identities(text)[0], range(0, 6));
    CHECK_FALSE(r.all_equal);
    for (const auto& p : r.points) {
        CAPTURE(p.n);
        CHECK(p.equal == (p.n < 3));
    }
    const auto bad = std::find_if(r.points.begin(), r.points.end(), [](const PointVerdict& p) { return !p.equal; });
    REQUIRE(bad != r.points.end());
    CHECK(bad->first_mismatch.has_value());
    CHECK_FALSE(bad->mismatch_label.empty());
}

TEST_CASE("class 8 identities") {
    for (const char* name : {"conjugate_by_power.id", "commutator_of_power.id"}) {
        const auto t = parse_identities(slurp(name));
        REQUIRE(t.size() == 1);
        CHECK(t[0].nil_class == 8);
        const auto r = verify_identity(t[0], range(0, 9));
        CAPTURE(name);
        CHECK(r.all_equal);
        CHECK(r.certified);
    }
}

TEST_CASE("commutator expansions") {
    const auto ts = parse_identities(slurp("commutator_expansion.id"));
    CHECK(ts.size() == 3);
    for (const auto& t : ts) {
        const auto r = verify_identity(t);
        CAPTURE(t.label);
        CHECK(r.all_equal);
        CHECK(r.free_group_equal == true);
    }
    // the right-conjugate variant of the product rule is false
    const auto wrong = parse_identities("w: [g*g1,h] == [g,h] ^g[g1,h] @ class 4\n");
    CHECK_FALSE(verify_identity(wrong[0]).all_equal);
}

TEST_CASE("collection is a homomorphism") {
    const std::vector<std::string> sym{"a", "b"};
    std::mt19937_64 rng(3);
    auto random_word = [&] {
        std::string w;
        const int len = 1 + int(rng() % 6);
        for (int i = 0; i < len; ++i) {
            if (i) w += "*";
            w += sym[rng() % 2];
            w += "^" + std::to_string(int(rng() % 7) - 3);
        }
        return w;
    };
    for (int c = 2; c <= 6; ++c) {
        const FreeNilpotentGroup f(2, c);
        for (int t = 0; t < 20; ++t) {
            const auto u = random_word(), v = random_word();
            const auto cu = collect(u, sym, c), cv = collect(v, sym, c);
            CHECK(collect("(" + u + ")*(" + v + ")", sym, c) == f.multiply(cu, cv));
            CHECK(collect("(" + u + ")*(" + u + ")^-1", sym, c) == f.identity());
        }
    }
}

TEST_CASE("template errors") {
    CHECK_THROWS_AS(parse_identities("x: a == b @ class 0\n"), ParseError);
    CHECK_THROWS_AS(parse_identities("x: a *== b @ class 2\n"), ParseError);
    const auto t = parse_identities(slurp("power_of_product.id"));
    CHECK_THROWS_AS(verify_identity(t[0], {0, 1, 2}), ValidationError);
    CHECK_THROWS_AS(collect("a*b", {"a", "b"}, max_free_class + 1), ResourceError);
    CHECK_THROWS_AS(read_identity_file("/nonexistent.id"), IoError);
}
