#include <map>
#include <random>

#include "schurkit/errors.hpp"
#include "schurkit/subgroup.hpp"
#include "schurkit/tensor.hpp"

namespace schurkit {

using Index = PcGroup::Index;
using Elem = TensorModel::Elem;

namespace {

const TensorModel& model_of(const TensorSquareResult& r) {
    if (!r.complete() || !r.model) throw ValidationError("tensor square was not computed");
    return *r.model;
}

std::string where(const TensorModel& m) {
    return m.tier() == TensorTier::tensor ? "in G(x)G" : "in G^G";
}

// Runs f on every index below total, or on the given number of seeded samples.
template <class F>
void sweep(CheckResult& c, std::uint64_t total, bool exhaustive, std::size_t samples, std::uint64_t seed, F f) {
    c.exhaustive = exhaustive;
    std::mt19937_64 rng(seed);
    const std::uint64_t n = exhaustive ? total : std::min<std::uint64_t>(samples, total);
    for (std::uint64_t i = 0; i < n && c.passed; ++i) {
        const std::uint64_t k = exhaustive ? i : std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
        f(k);
    }
}

void fail(CheckResult& c, std::string detail) {
    if (!c.passed) return;
    c.passed = false;
    c.detail = std::move(detail);
}

std::string pair_str(Index a, Index b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// subgroup generated by the given elements together with nabla
std::vector<bool> with_nabla(const TensorModel& m, std::vector<Elem> gens) {
    for (Elem x = 0; x < m.size(); ++x)
        if (m.nabla()[x]) gens.push_back(x);
    return m.generate(gens);
}

}  // namespace

std::vector<CheckResult> weight_triviality_check(const StructureReport& s, const TensorSquareResult& r,
                                                 const CheckOptions& opts) {
    const TensorModel& m = model_of(r);
    const PcGroup& g = m.group();
    CheckResult one("weight_triviality_simple"), two("weight_triviality_commutator");
    if (!s.nilpotency_class) {
        one.detail = two.detail = "not nilpotent";
        return {one, two};
    }
    const int cls = *s.nilpotency_class;
    std::vector<int> w(g.size(), 0);
    for (Index x = 1; x < g.size(); ++x) w[x] = *weight(s, x);

    // (i) on every pair; also record, per tensor value, the largest w(g)+w(h)
    std::map<Elem, int> best;
    for (Index a = 1; a < g.size(); ++a)
        for (Index b = 1; b < g.size(); ++b) {
            const Elem t = m.tensor(a, b);
            auto [it, fresh] = best.emplace(t, w[a] + w[b]);
            if (!fresh) it->second = std::max(it->second, w[a] + w[b]);
            if (w[a] + w[b] >= cls + 2) {
                ++one.cases;
                if (t != 0) fail(one, "pair " + pair_str(a, b) + " " + where(m));
            }
        }
    if (one.cases == 0) one.detail = "vacuous: no pair reaches weight " + std::to_string(cls + 2);

    // (ii) depends only on the two tensor values and the largest weight sums
    std::vector<std::pair<Elem, int>> vals(best.begin(), best.end());
    std::vector<std::pair<std::size_t, std::size_t>> due;
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = 0; j < vals.size(); ++j)
            if (vals[i].second + vals[j].second >= cls + 2) due.emplace_back(i, j);
    sweep(two, due.size(), due.size() <= opts.pair_limit, opts.samples, opts.seed, [&](std::uint64_t k) {
        ++two.cases;
        const auto [i, j] = due[k];
        if (m.comm(vals[i].first, vals[j].first) != 0)
            fail(two, "tensor values " + std::to_string(vals[i].first) + "," + std::to_string(vals[j].first));
    });
    if (two.cases == 0) two.detail = "vacuous";
    return {one, two};
}

std::vector<CheckResult> power_tensor_check(const StructureReport& s, const TensorSquareResult& r,
                                            const CheckOptions& opts) {
    const TensorModel& m = model_of(r);
    const PcGroup& g = m.group();
    const std::uint64_t go = g.order();
    const bool exhaustive = go <= opts.exhaustive_limit;

    CheckResult pw("power_tensor_commuting");
    std::vector<std::pair<Index, Index>> commuting;
    for (Index a = 0; a < g.size(); ++a)
        for (Index b = 0; b < g.size(); ++b)
            if (g.comm(a, b) == 0) commuting.emplace_back(a, b);
    sweep(pw, commuting.size(), exhaustive, opts.samples, opts.seed, [&](std::uint64_t k) {
        const auto [a, b] = commuting[k];
        const Elem t = m.tensor(a, b);
        Elem tn = 0;
        Index an = 0;
        for (std::uint64_t n = 1; n <= s.exponent; ++n) {
            tn = m.mul(tn, t);
            an = g.mul(an, a);
            ++pw.cases;
            if (m.tensor(an, b) != tn) fail(pw, "pair " + pair_str(a, b) + " n=" + std::to_string(n));
        }
        // negative powers through the inverse
        if (m.tensor(g.inv(a), b) != m.inv(t)) fail(pw, "pair " + pair_str(a, b) + " n=-1");
    });

    CheckResult cr("commutator_of_tensors");
    std::map<Elem, std::pair<Index, Index>> rep;
    for (Index a = 0; a < g.size(); ++a)
        for (Index b = 0; b < g.size(); ++b) rep.emplace(m.tensor(a, b), std::make_pair(a, b));
    std::vector<std::pair<Elem, std::pair<Index, Index>>> vals(rep.begin(), rep.end());
    const std::uint64_t total = std::uint64_t(vals.size()) * vals.size();
    sweep(cr, total, total <= opts.pair_limit, opts.samples, opts.seed + 1, [&](std::uint64_t k) {
        ++cr.cases;
        const auto& [t1, p1] = vals[k / vals.size()];
        const auto& [t2, p2] = vals[k % vals.size()];
        const Elem want = m.tensor(g.comm(p1.first, p1.second), g.comm(p2.first, p2.second));
        if (m.comm(t1, t2) != want) fail(cr, "tensor values " + std::to_string(t1) + "," + std::to_string(t2));
    });
    return {pw, cr};
}

CheckResult central_power_check(const StructureReport& s, const TensorSquareResult& r, const CheckOptions& opts) {
    const TensorModel& m = model_of(r);
    const PcGroup& g = m.group();
    CheckResult c("central_power");
    const std::uint64_t sq = s.central_quotient_exponent;
    const std::uint64_t q = s.exponent / sq;
    const std::uint64_t go = g.order();

    sweep(c, go * go, go <= opts.exhaustive_limit, opts.samples, opts.seed + 2, [&](std::uint64_t k) {
        const Index a = Index(k / go), b = Index(k % go);
        const Index as = g.pow(a, static_cast<std::int64_t>(sq));
        const Elem base = m.tensor(as, b);
        Elem acc = 0;
        Index at = 0;
        for (std::uint64_t t = 1; t <= s.exponent; ++t) {
            acc = m.mul(acc, base);
            at = g.mul(at, as);
            ++c.cases;
            if (m.tensor(at, b) != acc) fail(c, "pair " + pair_str(a, b) + " t=" + std::to_string(t));
        }
    });

    std::vector<Elem> gens;
    for (Index a = 0; a < g.size(); ++a) {
        const Index as = g.pow(a, static_cast<std::int64_t>(sq));
        if (as == 0) continue;
        for (Index b = 0; b < g.size(); ++b) gens.push_back(m.tensor(as, b));
    }
    const std::uint64_t e = m.exponent_modulo(with_nabla(m, gens), m.nabla());
    if (q % e != 0) fail(c, "exponent of the image of G^s ^ G is " + std::to_string(e));
    if (c.passed)
        c.detail = "s = " + std::to_string(sq) + ", image exponent " + std::to_string(e) + " divides " +
                   std::to_string(q);
    return c;
}

CheckResult normal_exterior_check(const StructureReport& s, const TensorSquareResult& r, const CheckOptions&) {
    const TensorModel& m = model_of(r);
    const PcGroup& g = m.group();
    CheckResult c("normal_exterior_exponent");
    if (g.order() > 64) {
        c.detail = "skipped: |G| > 64";
        return c;
    }
    if (s.normal_search_complete != Truth::yes) {
        c.detail = "skipped: normal subgroups not enumerated";
        return c;
    }
    for (const Subgroup& n : s.normal_subgroups) {
        std::vector<Elem> ng, nn;
        for (Index a : n.elements) {
            for (Index b = 0; b < g.size(); ++b) ng.push_back(m.tensor(a, b));
            for (Index b : n.elements) nn.push_back(m.tensor(a, b));
        }
        const std::uint64_t e_ng = m.exponent_modulo(with_nabla(m, ng), m.nabla());
        const std::uint64_t e_nn = m.exponent_modulo(with_nabla(m, nn), m.nabla());
        const std::uint64_t bound = exponent(g, n) * e_nn;
        ++c.cases;
        if (bound % e_ng != 0)
            fail(c, "normal subgroup of order " + std::to_string(n.order()) + ": " + std::to_string(e_ng) +
                        " does not divide " + std::to_string(bound));
    }
    return c;
}

std::vector<CheckResult> micro_lemma_checks(const StructureReport& s, const TensorSquareResult& r,
                                            const CheckOptions& opts) {
    std::vector<CheckResult> out = weight_triviality_check(s, r, opts);
    for (auto& c : power_tensor_check(s, r, opts)) out.push_back(std::move(c));
    out.push_back(central_power_check(s, r, opts));
    out.push_back(normal_exterior_check(s, r, opts));
    return out;
}

}  // namespace schurkit
