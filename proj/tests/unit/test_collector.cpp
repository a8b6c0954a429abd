#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <random>

#include "doctest.h"
#include "schurkit/catalog.hpp"
#include "schurkit/collector.hpp"
#include "schurkit/oracle.hpp"

using namespace schurkit;

namespace {

using Mat = std::array<int, 9>;

Mat mat_mul(const Mat& a, const Mat& b, int p) {
    Mat c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int s = 0;
            for (int k = 0; k < 3; ++k) s += a[3 * i + k] * b[3 * k + j];
            c[3 * i + j] = s % p;
        }
    return c;
}

Mat mat_pow(Mat a, int e, int p) {
    Mat r{1, 0, 0, 0, 1, 0, 0, 0, 1};
    while (e--) r = mat_mul(r, a, p);
    return r;
}

// unitriangular matrix of the normal form g1^a g2^b g3^c with g1 = 1 + E12,
// g2 = 1 + E23, g3 = 1 + E13
Mat heis_matrix(std::span<const int> e, int p) {
    const Mat a{1, 1, 0, 0, 1, 0, 0, 0, 1}, b{1, 0, 0, 0, 1, 1, 0, 0, 1}, c{1, 0, 1, 0, 1, 0, 0, 0, 1};
    return mat_mul(mat_mul(mat_pow(a, e[0], p), mat_pow(b, e[1], p), p), mat_pow(c, e[2], p), p);
}

// D_{2m} acting on Z_m: reflection x -> -x, rotation x -> x + 1
using Perm = std::vector<int>;
Perm compose(const Perm& f, const Perm& g) {  // f after g
    Perm h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
}

}  // namespace

TEST_CASE("Heisenberg normal forms") {
    const PcGroup g(catalog_group("heisenberg_mod:3"));
    const auto g1 = g.generator(0), g2 = g.generator(1);
    // g2 g1 = g1 g2 g3^-1 = g1 g2 g3^2
    CHECK(g.multiply(g2, g1).exponents == std::vector<int>{1, 1, 2});
    CHECK(g.is_identity(g.power(g1, 3)));
    CHECK(g.commutator(g1, g2).exponents == std::vector<int>{0, 0, 1});
    CHECK(g.element_order(g.multiply(g1, g2)) == 3);
}

TEST_CASE("Heisenberg multiplication matches 3x3 matrices") {
    for (int p : {3, 5}) {
        const PcGroup g(catalog_group("heisenberg_mod:" + std::to_string(p)));
        for (PcGroup::Index x = 0; x < g.size(); ++x)
            for (PcGroup::Index y = 0; y < g.size(); ++y) {
                const Mat want = mat_mul(heis_matrix(g.digits(x), p), heis_matrix(g.digits(y), p), p);
                REQUIRE(heis_matrix(g.digits(g.mul(x, y)), p) == want);
            }
    }
}

TEST_CASE("dihedral multiplication matches permutations") {
    // g1 is a reflection and the rest are rotations; search the rotation
    // amounts for a bijective homomorphism onto D_2m acting on Z_m
    for (int m : {3, 4, 6, 8, 9}) {
        const PcGroup g(catalog_group("dihedral:" + std::to_string(2 * m)));
        const int k = g.ngens() - 1;
        Perm s(m), id(m);
        for (int i = 0; i < m; ++i) {
            s[i] = (m - i) % m;
            id[i] = i;
        }
        auto rot = [&](int t) {
            Perm r(m);
            for (int i = 0; i < m; ++i) r[i] = (i + t) % m;
            return r;
        };
        bool found = false;
        std::vector<int> amount(k, 0);
        for (long code = 0; !found && code < std::lround(std::pow(m, k)); ++code) {
            long c = code;
            for (int i = 0; i < k; ++i, c /= m) amount[i] = int(c % m);
            std::vector<Perm> gens{s};
            for (int i = 0; i < k; ++i) gens.push_back(rot(amount[i]));
            auto image = [&](std::span<const int> e) {
                Perm x = id;
                for (int i = 0; i < g.ngens(); ++i)
                    for (int t = 0; t < e[i]; ++t) x = compose(x, gens[i]);
                return x;
            };
            std::set<Perm> seen;
            bool hom = true;
            for (PcGroup::Index x = 0; hom && x < g.size(); ++x) {
                seen.insert(image(g.digits(x)));
                for (PcGroup::Index y = 0; hom && y < g.size(); ++y)
                    hom = image(g.digits(g.mul(x, y))) == compose(image(g.digits(x)), image(g.digits(y)));
            }
            found = hom && seen.size() == g.size();
        }
        CAPTURE(m);
        CHECK(found);
    }
}

TEST_CASE("associativity on every catalog group") {
    for (const auto& spec : default_catalog()) {
        const PcGroup g(catalog_group(spec));
        CAPTURE(spec);
        CHECK(check_associativity(g, 2'000'000, 1000).associative);
    }
}

TEST_CASE("word normalization agrees with indexed arithmetic") {
    const PcGroup g(catalog_group("maximal_class_3:4"));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Word w;
        PcGroup::Index x = 0;
        for (int k = 0; k < 8; ++k) {
            const int gen = int(rng() % g.ngens());
            const int e = int(rng() % 5) - 2;
            w.push_back({gen, e});
            x = g.mul(x, g.pow(g.generator_index(gen), e));
        }
        CHECK(g.index_of(g.normalize(w)) == x);
    }
}

TEST_CASE("inverse, power and commutator identities") {
    const PcGroup g(catalog_group("quaternion:16"));
    for (PcGroup::Index a = 0; a < g.size(); ++a) {
        CHECK(g.mul(a, g.inv(a)) == 0);
        CHECK(g.pow(a, g.order_of(a)) == 0);
        CHECK(g.pow(a, -1) == g.inv(a));
        for (PcGroup::Index b = 0; b < g.size(); ++b)
            CHECK(g.comm(a, b) == g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    }
}

TEST_CASE("inconsistent presentations are rejected with a report") {
    // inversion of C3 has order 2 but g1 has relative order 3
    const auto bad = parse_pc_presentation("gens 2; orders 3 3; conj 1 2 -> g2^2\n");
    const auto rep = check_consistency(bad);
    CHECK_FALSE(rep.consistent);
    CHECK_FALSE(rep.failures.empty());
    CHECK_THROWS_AS(PcGroup{bad}, InconsistentPresentation);
    // g1^2 = g2 with g1 inverting g2 forces g2 = g2^-1
    const auto bad2 = parse_pc_presentation("gens 2; orders 2 3; pow 1 -> g2\nconj 1 2 -> g2^2\n");
    CHECK_THROWS_AS(PcGroup{bad2}, InconsistentPresentation);
    for (const auto& spec : default_catalog()) CHECK(check_consistency(catalog_group(spec)).consistent);
}

TEST_CASE("elements of different groups do not mix") {
    const PcGroup a(catalog_group("cyclic:4")), b(catalog_group("cyclic:4"));
    CHECK_THROWS(a.multiply(a.generator(0), b.generator(0)));
}
