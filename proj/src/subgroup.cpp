#include "schurkit/subgroup.hpp"

#include <algorithm>
#include <numeric>

namespace schurkit {

using Index = Subgroup::Index;

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

std::vector<GroupElement> Subgroup::generators(const PcGroup& g) const {
    std::vector<GroupElement> out;
    for (Index x : gens) out.push_back(g.element(x));
    return out;
}

static void finish(Subgroup& h) { std::sort(h.elements.begin(), h.elements.end()); }

Subgroup trivial_subgroup(const PcGroup& g) {
    Subgroup h;
    h.member.assign(g.size(), false);
    h.member[0] = true;
    h.elements = {0};
    return h;
}

Subgroup whole_group(const PcGroup& g) {
    Subgroup h;
    const Index n = g.size();
    h.member.assign(n, true);
    h.elements.resize(n);
    std::iota(h.elements.begin(), h.elements.end(), Index{0});
    for (int i = 0; i < g.ngens(); ++i) h.gens.push_back(g.generator_index(i));
    return h;
}

Subgroup extend(const PcGroup& g, const Subgroup& h, std::span<const Index> more) {
    Subgroup out = h;
    for (Index t : more) {
        if (out.member[t]) continue;
        out.gens.push_back(t);
        const std::size_t old = out.elements.size();
        // old elements are closed under the old generators, so they only need t
        for (std::size_t k = 0; k < old; ++k) {
            Index y = g.mul(out.elements[k], t);
            if (!out.member[y]) {
                out.member[y] = true;
                out.elements.push_back(y);
            }
        }
        for (std::size_t k = old; k < out.elements.size(); ++k) {
            const Index x = out.elements[k];
            for (Index s : out.gens) {
                Index y = g.mul(x, s);
                if (!out.member[y]) {
                    out.member[y] = true;
                    out.elements.push_back(y);
                }
            }
        }
    }
    finish(out);
    return out;
}

Subgroup generate(const PcGroup& g, std::span<const Index> gens) { return extend(g, trivial_subgroup(g), gens); }

Subgroup normal_closure(const PcGroup& g, const Subgroup& h) {
    Subgroup cur = h;
    std::vector<Index> ggens;
    for (int i = 0; i < g.ngens(); ++i) ggens.push_back(g.generator_index(i));
    for (std::size_t k = 0; k < cur.gens.size(); ++k) {
        for (Index s : ggens) {
            Index c = g.conj(s, cur.gens[k]);
            if (!cur.member[c]) cur = extend(g, cur, std::span<const Index>(&c, 1));
        }
    }
    return cur;
}

Subgroup normal_closure(const PcGroup& g, std::span<const Index> gens) { return normal_closure(g, generate(g, gens)); }

Subgroup join(const PcGroup& g, const Subgroup& a, const Subgroup& b) { return extend(g, a, b.gens); }

Subgroup intersection(const PcGroup& g, const Subgroup& a, const Subgroup& b) {
    Subgroup out = trivial_subgroup(g);
    // build from the elements so the generating set stays small
    for (Index x : a.elements)
        if (b.member[x] && !out.member[x]) out = extend(g, out, std::span<const Index>(&x, 1));
    return out;
}

Subgroup commutator_subgroup(const PcGroup& g, const Subgroup& a, const Subgroup& b) {
    std::vector<Index> cs;
    for (Index x : a.gens)
        for (Index y : b.gens) cs.push_back(g.comm(x, y));
    return normal_closure(g, cs);
}

Subgroup power_subgroup(const PcGroup& g, const Subgroup& h, std::int64_t k) {
    Subgroup out = trivial_subgroup(g);
    for (Index x : h.elements) {
        Index y = g.pow(x, k);
        if (!out.member[y]) out = extend(g, out, std::span<const Index>(&y, 1));
    }
    return out;
}

Subgroup centralizer(const PcGroup& g, const Subgroup& h) {
    Subgroup out = trivial_subgroup(g);
    for (Index x = 0; x < g.size(); ++x) {
        if (out.member[x]) continue;
        bool ok = true;
        for (Index s : h.gens)
            if (g.mul(x, s) != g.mul(s, x)) {
                ok = false;
                break;
            }
        if (ok) out = extend(g, out, std::span<const Index>(&x, 1));
    }
    return out;
}

Subgroup center(const PcGroup& g) { return centralizer(g, whole_group(g)); }

bool is_normal(const PcGroup& g, const Subgroup& h) {
    for (int i = 0; i < g.ngens(); ++i)
        for (Index s : h.gens)
            if (!h.member[g.conj(g.generator_index(i), s)]) return false;
    return true;
}

bool is_abelian(const PcGroup& g, const Subgroup& h) {
    for (std::size_t i = 0; i < h.gens.size(); ++i)
        for (std::size_t j = i + 1; j < h.gens.size(); ++j)
            if (g.mul(h.gens[i], h.gens[j]) != g.mul(h.gens[j], h.gens[i])) return false;
    return true;
}

bool is_cyclic(const PcGroup& g, const Subgroup& h) {
    for (Index x : h.elements)
        if (g.order_of(x) == h.order()) return true;
    return false;
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
    for (Index x : a.elements)
        if (!b.member[x]) return false;
    return true;
}

std::uint64_t exponent(const PcGroup& g, const Subgroup& h) {
    std::uint64_t e = 1;
    for (Index x : h.elements) e = lcm_u64(e, g.order_of(x));
    return e;
}

std::uint64_t order_modulo(const PcGroup& g, Index x, const Subgroup& n) {
    std::uint64_t k = 1;
    for (Index y = x; !n.member[y]; y = g.mul(y, x)) ++k;
    return k;
}

std::uint64_t quotient_exponent(const PcGroup& g, const Subgroup& h, const Subgroup& n) {
    std::uint64_t e = 1;
    for (Index x : h.elements) e = lcm_u64(e, order_modulo(g, x, n));
    return e;
}

PcPresentation induced_presentation(const PcGroup& g, const Subgroup& h) {
    const int n = g.ngens();
    const auto& r = g.presentation().relative_orders;
    std::vector<int> level;   // pc level of each new generator
    std::vector<Index> reps;
    std::vector<int> step;    // digit of the representative at its level
    for (int j = 0; j < n; ++j) {
        int best = 0;
        Index rep = 0;
        for (Index x : h.elements) {
            auto d = g.digits(x);
            bool lower = false;
            for (int t = 0; t < j; ++t)
                if (d[t]) {
                    lower = true;
                    break;
                }
            if (lower || d[j] == 0) continue;
            if (best == 0 || d[j] < best) {
                best = d[j];
                rep = x;
            }
        }
        if (best) {
            level.push_back(j);
            reps.push_back(rep);
            step.push_back(best);
        }
    }
    const int m = static_cast<int>(reps.size());
    std::vector<int> orders(m);
    for (int a = 0; a < m; ++a) orders[a] = r[level[a]] / step[a];
    // exponents of y in the new generators, starting at new generator `from`
    auto sift = [&](Index y, int from) {
        Word w;
        for (int a = from; a < m; ++a) {
            auto d = g.digits(y);
            for (int t = 0; t < level[a]; ++t)
                if (d[t]) throw InternalError("sift left the subgroup series");
            int e = d[level[a]] / step[a];
            if (d[level[a]] % step[a]) throw InternalError("sift digit not divisible");
            if (e) {
                w.push_back({a, e});
                y = g.mul(g.pow(reps[a], -e), y);
            }
        }
        if (y != 0) throw InternalError("sift did not terminate at the identity");
        return w;
    };
    PcPresentation pcp(orders);
    for (int a = 0; a < m; ++a) {
        pcp.set_power(a, sift(g.pow(reps[a], orders[a]), a + 1));
        for (int b = a + 1; b < m; ++b) pcp.set_conjugate(a, b, sift(g.conj(reps[a], reps[b]), a + 1));
    }
    validate(pcp);
    return pcp;
}

}  // namespace schurkit
