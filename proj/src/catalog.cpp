#include "schurkit/catalog.hpp"

#include <charconv>

#include "schurkit/errors.hpp"

namespace schurkit {

namespace {

std::vector<int> prime_factors(long n) {
    std::vector<int> ps;
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ps.push_back(static_cast<int>(p));
            n /= p;
        }
    if (n > 1) ps.push_back(static_cast<int>(n));
    return ps;
}

bool is_prime(long n) { return n >= 2 && prime_factors(n).size() == 1; }

// A cyclic group C_m as a chain c_1, c_2, ... with c_k = rho^{P_k},
// P_k = p_1 ... p_{k-1}; rho^a has mixed-radix digits of a.
struct Chain {
    int first = 0;
    long m = 1;
    std::vector<int> primes;

    Word word(long a) const {
        a %= m;
        if (a < 0) a += m;
        Word w;
        for (std::size_t k = 0; k < primes.size(); ++k) {
            long d = a % primes[k];
            a /= primes[k];
            if (d) w.push_back({first + static_cast<int>(k), d});
        }
        return w;
    }
    long place(std::size_t k) const {
        long v = 1;
        for (std::size_t t = 0; t < k; ++t) v *= primes[t];
        return v;
    }
};

Chain add_chain(std::vector<int>& orders, long m) {
    Chain c{static_cast<int>(orders.size()), m, prime_factors(m)};
    for (int p : c.primes) orders.push_back(p);
    return c;
}

void set_chain_powers(PcPresentation& pcp, const Chain& c) {
    for (std::size_t k = 0; k + 1 < c.primes.size(); ++k)
        pcp.set_power(c.first + static_cast<int>(k), {{c.first + static_cast<int>(k) + 1, 1}});
}

void need(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

PcPresentation cyclic(long n) {
    need(n >= 1, "cyclic:n needs n >= 1");
    std::vector<int> orders;
    Chain c = add_chain(orders, n);
    PcPresentation pcp(orders);
    set_chain_powers(pcp, c);
    return pcp;
}

PcPresentation abelian(const std::vector<long>& ds) {
    std::vector<int> orders;
    std::vector<Chain> chains;
    for (long d : ds) {
        need(d >= 1, "abelian invariants must be positive");
        chains.push_back(add_chain(orders, d));
    }
    PcPresentation pcp(orders);
    for (const Chain& c : chains) set_chain_powers(pcp, c);
    return pcp;
}

// s = g1 of order 2 acting by inversion on the rotation chain; for the
// dicyclic case s^2 is the rotation of order 2.
PcPresentation dihedral_like(long m, bool dicyclic) {
    std::vector<int> orders{2};
    Chain c = add_chain(orders, m);
    PcPresentation pcp(orders);
    set_chain_powers(pcp, c);
    for (std::size_t k = 0; k < c.primes.size(); ++k)
        pcp.set_conjugate(0, c.first + static_cast<int>(k), c.word(-c.place(k)));
    if (dicyclic) pcp.set_power(0, c.word(m / 2));
    return pcp;
}

// x_1..x_n, y_1..y_n, z with [x_i, y_i] = z central
PcPresentation extraspecial_plus(long p, long n) {
    need(is_prime(p), "extraspecial_plus needs a prime");
    need(n >= 1, "extraspecial_plus needs n >= 1");
    const int k = static_cast<int>(n);
    PcPresentation pcp(std::vector<int>(2 * k + 1, static_cast<int>(p)));
    for (int i = 0; i < k; ++i) pcp.set_conjugate(i, k + i, {{k + i, 1}, {2 * k, 1}});
    return pcp;
}

// b, a, x_2..x_n, y_2..y_n, z = a^p with b a b^-1 = a^{1+p}
PcPresentation extraspecial_minus(long p, long n) {
    need(is_prime(p) && p != 2, "extraspecial_minus needs an odd prime");
    need(n >= 1, "extraspecial_minus needs n >= 1");
    const int k = static_cast<int>(n);
    const int z = 2 * k;
    PcPresentation pcp(std::vector<int>(2 * k + 1, static_cast<int>(p)));
    pcp.set_power(1, {{z, 1}});
    pcp.set_conjugate(0, 1, {{1, 1}, {z, 1}});
    for (int i = 1; i < k; ++i) pcp.set_conjugate(1 + i, k + i, {{k + i, 1}, {z, 1}});
    return pcp;
}

PcPresentation heisenberg(long p) {
    need(is_prime(p), "heisenberg_mod needs a prime");
    PcPresentation pcp(std::vector<int>(3, static_cast<int>(p)));
    pcp.set_conjugate(0, 1, {{1, 1}, {2, 1}});
    return pcp;
}

// Elements of Z[w], w^2 + w + 1 = 0, as a + b w.
struct Eisenstein {
    long a = 0, b = 0;
    Eisenstein times_theta() const { return {a + b, 2 * b - a}; }  // * (1 - w)
    Eisenstein times_w() const { return {-b, a - b}; }
};

long mod3(long x) { return ((x % 3) + 3) % 3; }

// theta-adic digits of v modulo theta^len, as a word on generators first..first+len-1
Word theta_digits(Eisenstein v, int first, int len) {
    Word w;
    for (int k = 0; k < len; ++k) {
        long d = mod3(v.a + v.b);
        if (d) w.push_back({first + k, d});
        v.a -= d;
        // (a + b w) / (1 - w) = ((2a - b) + (a + b) w) / 3
        long na = 2 * v.a - v.b, nb = v.a + v.b;
        if (na % 3 || nb % 3) throw InternalError("theta division is not exact");
        v = {na / 3, nb / 3};
    }
    return w;
}

PcPresentation maximal_class_3(long n) {
    need(n >= 2 && n <= 40, "maximal_class_3:n needs 2 <= n <= 40");
    const int len = static_cast<int>(n) - 1;
    PcPresentation pcp(std::vector<int>(n, 3));
    Eisenstein t{1, 0};
    for (int k = 0; k < len; ++k) {
        Eisenstein three{3 * t.a, 3 * t.b};
        pcp.set_power(1 + k, theta_digits(three, 1, len));
        pcp.set_conjugate(0, 1 + k, theta_digits(t.times_w(), 1, len));
        t = t.times_theta();
    }
    return pcp;
}

// s acts on F_p[t]/t^p by multiplication with 1 + t
PcPresentation wreath(long p) {
    need(is_prime(p), "wreath_cp_cp needs a prime");
    const int k = static_cast<int>(p);
    PcPresentation pcp(std::vector<int>(k + 1, k));
    for (int i = 0; i + 1 < k; ++i) pcp.set_conjugate(0, 1 + i, {{1 + i, 1}, {2 + i, 1}});
    return pcp;
}

std::vector<long> parse_params(std::string_view s) {
    std::vector<long> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string_view part = s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
        long v = 0;
        auto res = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || res.ec != std::errc() || res.ptr != part.data() + part.size())
            throw ValidationError("bad catalog parameter '" + std::string(part) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

PcPresentation catalog_group(const std::string& family, const std::vector<long>& ps) {
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (ps.size() < lo || ps.size() > hi)
            throw ValidationError("wrong number of parameters for catalog family '" + family + "'");
    };
    PcPresentation pcp;
    if (family == "cyclic") {
        arity(1, 1);
        pcp = cyclic(ps[0]);
    } else if (family == "abelian") {
        arity(1, 64);
        pcp = abelian(ps);
    } else if (family == "dihedral") {
        arity(1, 1);
        need(ps[0] >= 4 && ps[0] % 2 == 0, "dihedral:2m needs an even order >= 4");
        pcp = dihedral_like(ps[0] / 2, false);
    } else if (family == "quaternion") {
        arity(1, 1);
        need(ps[0] >= 8 && ps[0] % 4 == 0, "quaternion:4m needs an order divisible by 4, at least 8");
        pcp = dihedral_like(ps[0] / 2, true);
    } else if (family == "extraspecial_plus") {
        arity(1, 2);
        pcp = extraspecial_plus(ps[0], ps.size() > 1 ? ps[1] : 1);
    } else if (family == "extraspecial_minus") {
        arity(1, 2);
        pcp = extraspecial_minus(ps[0], ps.size() > 1 ? ps[1] : 1);
    } else if (family == "heisenberg_mod") {
        arity(1, 1);
        pcp = heisenberg(ps[0]);
    } else if (family == "burnside_2_3") {
        arity(0, 0);
        pcp = heisenberg(3);
    } else if (family == "maximal_class_3") {
        arity(1, 1);
        pcp = maximal_class_3(ps[0]);
    } else if (family == "wreath_cp_cp") {
        arity(1, 1);
        pcp = wreath(ps[0]);
    } else {
        throw ValidationError("unknown catalog family '" + family + "'");
    }
    validate(pcp);
    return pcp;
}

PcPresentation catalog_group(std::string_view spec) {
    if (spec.starts_with("catalog:")) spec.remove_prefix(8);
    std::size_t colon = spec.find(':');
    std::string family(spec.substr(0, colon));
    std::vector<long> ps;
    if (colon != std::string_view::npos) ps = parse_params(spec.substr(colon + 1));
    return catalog_group(family, ps);
}

std::vector<std::string> catalog_families() {
    return {"cyclic",          "abelian",        "dihedral",     "quaternion",
            "extraspecial_plus", "extraspecial_minus", "heisenberg_mod", "burnside_2_3",
            "maximal_class_3", "wreath_cp_cp"};
}

std::vector<std::string> default_catalog() {
    std::vector<std::string> v;
    for (int n = 2; n <= 12; ++n) v.push_back("cyclic:" + std::to_string(n));
    v.insert(v.end(), {"cyclic:16",
                       "cyclic:25",
                       "cyclic:27",
                       "abelian:2,2",
                       "abelian:2,2,2",
                       "abelian:4,2",
                       "abelian:4,4",
                       "abelian:3,3",
                       "abelian:9,3",
                       "abelian:3,3,3",
                       "abelian:5,5",
                       "dihedral:6",
                       "dihedral:8",
                       "dihedral:10",
                       "dihedral:12",
                       "dihedral:16",
                       "dihedral:18",
                       "quaternion:8",
                       "quaternion:12",
                       "quaternion:16",
                       "heisenberg_mod:2",
                       "heisenberg_mod:3",
                       "burnside_2_3",
                       "extraspecial_minus:3",
                       "heisenberg_mod:5",
                       "extraspecial_minus:5",
                       "wreath_cp_cp:2",
                       "wreath_cp_cp:3",
                       "maximal_class_3:3",
                       "maximal_class_3:4",
                       "maximal_class_3:5",
                       "extraspecial_plus:3,2",
                       "extraspecial_minus:3,2"});
    return v;
}

}  // namespace schurkit
