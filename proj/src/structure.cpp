#include "schurkit/structure.hpp"

#include <numeric>
#include <unordered_map>

namespace schurkit {

using Index = PcGroup::Index;

std::string to_string(Truth t) {
    switch (t) {
        case Truth::yes: return "yes";
        case Truth::no: return "no";
        default: return "unknown";
    }
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::vector<std::uint64_t> normalize_invariants(const std::vector<std::uint64_t>& cyclic_orders) {
    std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
    for (std::uint64_t d : cyclic_orders) {
        for (std::uint64_t q : prime_divisors(d)) {
            std::uint64_t qk = 1;
            while (d % q == 0) {
                d /= q;
                qk *= q;
            }
            by_prime[q].push_back(qk);
        }
    }
    std::size_t len = 0;
    for (auto& [q, v] : by_prime) {
        std::sort(v.rbegin(), v.rend());
        len = std::max(len, v.size());
    }
    std::vector<std::uint64_t> out(len, 1);
    for (auto& [q, v] : by_prime)
        for (std::size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
    std::reverse(out.begin(), out.end());
    return out;
}

Subgroup derived_subgroup(const PcGroup& g, const Subgroup& h) {
    std::vector<Index> cs;
    for (std::size_t i = 0; i < h.gens.size(); ++i)
        for (std::size_t j = i + 1; j < h.gens.size(); ++j) cs.push_back(g.comm(h.gens[i], h.gens[j]));
    Subgroup cur = generate(g, cs);
    for (std::size_t k = 0; k < cur.gens.size(); ++k)
        for (Index s : h.gens) {
            Index c = g.conj(s, cur.gens[k]);
            if (!cur.member[c]) cur = extend(g, cur, std::span<const Index>(&c, 1));
        }
    return cur;
}

Truth is_powerful(const PcGroup& g, const Subgroup& h, std::optional<int> p) {
    if (!p || *p == 2) return Truth::unknown;
    return truth(is_subset(derived_subgroup(g, h), power_subgroup(g, h, *p)));
}

// Null space of a matrix over F_q, rows of length n.
static std::vector<std::vector<std::int64_t>> null_space(std::vector<std::vector<std::int64_t>> rows, int n,
                                                         std::int64_t q) {
    auto md = [q](std::int64_t x) { return ((x % q) + q) % q; };
    auto inv = [&](std::int64_t a) {
        std::int64_t r = 1, b = md(a), e = q - 2;
        while (e) {
            if (e & 1) r = r * b % q;
            b = b * b % q;
            e >>= 1;
        }
        return r;
    };
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int c = 0; c < n && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && md(rows[piv][c]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        std::int64_t iv = inv(rows[rank][c]);
        for (auto& x : rows[rank]) x = md(x * iv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            std::int64_t f = md(rows[r][c]);
            if (!f) continue;
            for (int t = 0; t < n; ++t) rows[r][t] = md(rows[r][t] - f * rows[rank][t]);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<std::int64_t>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::int64_t> v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = md(-rows[r][free]);
        basis.push_back(v);
    }
    return basis;
}

Subgroup frattini_by_homomorphisms(const PcGroup& g) {
    const int n = g.ngens();
    const PcPresentation& pcp = g.presentation();
    std::vector<bool> in_kernel(g.size(), true);
    for (std::uint64_t q : prime_divisors(g.order())) {
        std::vector<std::vector<std::int64_t>> rows;
        for (int i = 0; i < n; ++i) {
            std::vector<std::int64_t> row(n, 0);
            row[i] += pcp.relative_orders[i];
            for (const Letter& l : pcp.power_relations[i]) row[l.gen] -= l.exp;
            rows.push_back(row);
            for (int j = i + 1; j < n; ++j) {
                std::vector<std::int64_t> c(n, 0);
                c[j] += 1;
                for (const Letter& l : pcp.conjugate(i, j)) c[l.gen] -= l.exp;
                rows.push_back(c);
            }
        }
        auto homs = null_space(rows, n, static_cast<std::int64_t>(q));
        for (Index x = 0; x < g.size(); ++x) {
            if (!in_kernel[x]) continue;
            auto d = g.digits(x);
            for (const auto& f : homs) {
                std::int64_t s = 0;
                for (int k = 0; k < n; ++k) s += d[k] * f[k];
                if (s % static_cast<std::int64_t>(q)) {
                    in_kernel[x] = false;
                    break;
                }
            }
        }
    }
    Subgroup out = trivial_subgroup(g);
    for (Index x = 0; x < g.size(); ++x)
        if (in_kernel[x] && !out.member[x]) out = extend(g, out, std::span<const Index>(&x, 1));
    return out;
}

namespace {

struct SubgroupSet {
    std::unordered_map<std::vector<bool>, std::size_t> seen;
    std::vector<Subgroup> list;
    bool insert(Subgroup s) {
        auto [it, fresh] = seen.emplace(s.member, list.size());
        if (fresh) list.push_back(std::move(s));
        return fresh;
    }
};

// Closure of `atoms` (and the trivial subgroup) under joins.
std::optional<std::vector<Subgroup>> join_closure(const PcGroup& g, const std::vector<Subgroup>& atoms,
                                                  std::size_t cap) {
    SubgroupSet set;
    set.insert(trivial_subgroup(g));
    for (const Subgroup& a : atoms) set.insert(a);
    for (std::size_t k = 0; k < set.list.size(); ++k) {
        for (const Subgroup& a : atoms) {
            if (is_subset(a, set.list[k])) continue;
            Subgroup j = join(g, set.list[k], a);
            set.insert(std::move(j));
            if (set.list.size() > cap) return std::nullopt;
        }
    }
    std::sort(set.list.begin(), set.list.end(),
              [](const Subgroup& a, const Subgroup& b) {
                  if (a.order() != b.order()) return a.order() < b.order();
                  return a.elements < b.elements;
              });
    return std::move(set.list);
}

}  // namespace

std::optional<std::vector<Subgroup>> normal_subgroups(const PcGroup& g, std::size_t cap) {
    const Index size = g.size();
    std::vector<bool> done(size, false);
    SubgroupSet atoms;
    for (Index x = 1; x < size; ++x) {
        if (done[x]) continue;
        // mark the conjugacy class of x
        std::vector<Index> orbit{x};
        done[x] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (int i = 0; i < g.ngens(); ++i) {
                Index y = g.conj(g.generator_index(i), orbit[k]);
                if (!done[y]) {
                    done[y] = true;
                    orbit.push_back(y);
                }
            }
        atoms.insert(normal_closure(g, std::span<const Index>(&x, 1)));
        if (atoms.list.size() > cap) return std::nullopt;
    }
    return join_closure(g, atoms.list, cap);
}

static std::optional<Subgroup> frattini_by_maximal_subgroups(const PcGroup& g, std::size_t cap) {
    const Index size = g.size();
    std::vector<bool> done(size, false);
    SubgroupSet atoms;
    for (Index x = 1; x < size; ++x) {
        if (done[x]) continue;
        Subgroup c = generate(g, std::span<const Index>(&x, 1));
        for (Index y : c.elements)
            if (g.order_of(y) == c.order()) done[y] = true;
        atoms.insert(std::move(c));
    }
    auto all = join_closure(g, atoms.list, cap);
    if (!all) return std::nullopt;
    Subgroup phi = whole_group(g);
    const Subgroup whole = whole_group(g);
    for (const Subgroup& m : *all) {
        if (m.order() == g.order()) continue;
        bool maximal = true;
        for (const Subgroup& o : *all)
            if (o.order() > m.order() && o.order() < g.order() && is_subset(m, o)) {
                maximal = false;
                break;
            }
        if (maximal) phi = intersection(g, phi, m);
    }
    return phi;
}

static Truth metacyclic_search(const PcGroup& g) {
    const Index size = g.size();
    std::vector<bool> done(size, false);
    for (Index x = 0; x < size; ++x) {
        if (done[x]) continue;
        Subgroup c = generate(g, std::span<const Index>(&x, 1));
        for (Index y : c.elements)
            if (g.order_of(y) == c.order()) done[y] = true;
        if (!is_normal(g, c)) continue;
        const std::uint64_t need = g.order() / c.order();
        for (Index y = 0; y < size; ++y)
            if (order_modulo(g, y, c) == need) return Truth::yes;
    }
    return Truth::no;
}

StructureReport structure(const PcGroup& g, const StructureOptions& opts) {
    if (!g.indexable()) throw ResourceError("group too large for structure computations");
    StructureReport s;
    const Subgroup G = whole_group(g);
    s.group_id = g.id();
    s.order = g.order();
    s.prime = g.prime();
    s.exponent = exponent(g, G);

    s.lower_central.push_back(G);
    while (true) {
        Subgroup next = commutator_subgroup(g, s.lower_central.back(), G);
        bool stable = next == s.lower_central.back();
        if (stable) break;
        s.lower_central.push_back(std::move(next));
    }
    if (s.lower_central.back().is_trivial())
        s.nilpotency_class = static_cast<int>(s.lower_central.size()) - 1;

    s.derived_series.push_back(G);
    while (!s.derived_series.back().is_trivial()) {
        Subgroup next = derived_subgroup(g, s.derived_series.back());
        if (next == s.derived_series.back()) throw InternalError("pc group is not solvable");
        s.derived_series.push_back(std::move(next));
    }
    s.derived_length = static_cast<int>(s.derived_series.size()) - 1;
    s.commutator = s.derived_series.size() > 1 ? s.derived_series[1] : G;

    s.upper_central.push_back(trivial_subgroup(g));
    while (true) {
        const Subgroup& z = s.upper_central.back();
        Subgroup next = z;
        for (Index x = 0; x < g.size(); ++x) {
            if (next.member[x]) continue;
            bool central = true;
            for (Index t : G.gens)
                if (!z.member[g.comm(x, t)]) {
                    central = false;
                    break;
                }
            if (central) next = extend(g, next, std::span<const Index>(&x, 1));
        }
        if (next == z) break;
        s.upper_central.push_back(std::move(next));
    }
    s.center = s.upper_central.size() > 1 ? s.upper_central[1] : s.upper_central[0];
    s.center_exponent = exponent(g, s.center);
    s.central_quotient_exponent = quotient_exponent(g, G, s.center);

    const Subgroup& comm = s.commutator;
    s.abelianization = invariants_from_counts(g.order() / comm.order(), [&](std::uint64_t q, int k) {
        std::uint64_t qk = 1;
        for (int t = 0; t < k; ++t) qk *= q;
        std::uint64_t c = 0;
        for (Index x = 0; x < g.size(); ++x)
            if (comm.member[g.pow(x, static_cast<std::int64_t>(qk))]) ++c;
        return c / comm.order();
    });

    if (s.prime) {
        s.agemo = power_subgroup(g, G, *s.prime);
        Subgroup phi = join(g, *s.agemo, comm);
        if (!(phi == frattini_by_homomorphisms(g)))
            throw InternalError("Frattini subgroup: G^p G' differs from the kernel intersection");
        int d = 0;
        for (std::uint64_t m = g.order() / phi.order(); m > 1; m /= *s.prime) ++d;
        s.generator_rank = d;
        s.frattini = std::move(phi);
    } else if (s.nilpotency_class) {
        s.frattini = frattini_by_homomorphisms(g);
    } else if (g.order() <= opts.frattini_search_limit) {
        s.frattini = frattini_by_maximal_subgroups(g, opts.normal_search_cap);
    }

    s.commutator_cyclic = truth(is_cyclic(g, comm));
    if (s.frattini) {
        s.frattini_abelian = truth(is_abelian(g, *s.frattini));
        s.frattini_cyclic = truth(is_cyclic(g, *s.frattini));
        s.center_in_frattini = truth(is_subset(s.center, *s.frattini));
        s.frattini_powerful = is_powerful(g, *s.frattini, s.prime);
    }
    s.commutator_powerful = is_powerful(g, comm, s.prime);
    if (s.prime) {
        const std::size_t p = static_cast<std::size_t>(*s.prime);
        Subgroup gamma = p < s.lower_central.size() ? s.lower_central[p] : trivial_subgroup(g);
        s.gamma_p_plus_1_powerful = is_powerful(g, gamma, s.prime);
    }

    if (g.order() <= opts.metacyclic_limit) s.metacyclic = metacyclic_search(g);

    if (g.order() <= opts.normal_search_limit) {
        if (auto ns = normal_subgroups(g, opts.normal_search_cap)) {
            s.normal_search_complete = Truth::yes;
            s.normal_subgroups = std::move(*ns);
            for (const Subgroup& n : s.normal_subgroups)
                if (is_abelian(g, n)) s.abelian_normal.push_back(n);
        }
    }
    return s;
}

std::optional<int> weight(const StructureReport& s, PcGroup::Index x) {
    if (x == 0) return std::nullopt;
    int w = 0;
    for (std::size_t i = 0; i < s.lower_central.size(); ++i)
        if (s.lower_central[i].member[x]) w = static_cast<int>(i) + 1;
    // a non-nilpotent group's terminal term has unbounded weight
    if (!s.nilpotency_class && w == static_cast<int>(s.lower_central.size())) return std::nullopt;
    return w;
}

PcPresentation quotient(const PcGroup& g, const Subgroup& n) {
    if (!is_normal(g, n)) throw ValidationError("quotient by a non-normal subgroup");
    const int ng = g.ngens();
    std::vector<Subgroup> level(ng + 1);
    level[ng] = n;
    for (int j = ng - 1; j >= 0; --j) {
        Index gj = g.generator_index(j);
        level[j] = extend(g, level[j + 1], std::span<const Index>(&gj, 1));
    }
    std::vector<int> kept;
    std::vector<int> orders;
    for (int j = 0; j < ng; ++j)
        if (level[j].order() > level[j + 1].order()) {
            kept.push_back(j);
            orders.push_back(static_cast<int>(level[j].order() / level[j + 1].order()));
        }
    const int m = static_cast<int>(kept.size());
    auto sift = [&](Index y, int from) {
        Word w;
        for (int a = from; a < m; ++a) {
            const int j = kept[a];
            if (!level[j].member[y]) throw InternalError("quotient sift left the series");
            Index gj = g.generator_index(j);
            Index ginv = g.inv(gj);
            int e = 0;
            while (!level[j + 1].member[y]) {
                y = g.mul(ginv, y);
                if (++e >= orders[a]) throw InternalError("quotient sift did not terminate");
            }
            if (e) w.push_back({a, e});
        }
        if (!n.member[y]) throw InternalError("quotient sift did not reach N");
        return w;
    };
    PcPresentation pcp(orders);
    for (int a = 0; a < m; ++a) {
        Index ga = g.generator_index(kept[a]);
        pcp.set_power(a, sift(g.pow(ga, orders[a]), a + 1));
        for (int b = a + 1; b < m; ++b)
            pcp.set_conjugate(a, b, sift(g.conj(ga, g.generator_index(kept[b])), a + 1));
    }
    validate(pcp);
    return pcp;
}

}  // namespace schurkit
