#include "schurkit/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "schurkit/errors.hpp"
#include "schurkit/subgroup.hpp"

namespace schurkit {

using Index = PcGroup::Index;
using Elem = TensorModel::Elem;

std::string to_string(TensorTier t) { return t == TensorTier::tensor ? "tensor" : "exterior"; }

bool TensorSquareResult::checks_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

// ---------------------------------------------------------------------------
// model

TensorModel::TensorModel(const PcGroup& g, const CosetTable& table, TensorTier tier) : g_(g), tier_(tier) {
    const int n = g.ngens();
    const std::uint32_t nc = table.cosets;
    cosets_ = nc;

    // pi: nu -> G on cosets of G^phi, x_i -> g_i and y_i -> 1
    constexpr Index unset = ~Index(0);
    std::vector<Index> pi(nc, unset);
    pi[0] = 0;
    std::vector<std::uint32_t> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::uint32_t c = queue[qi];
        for (int i = 0; i < 2 * n; ++i)
            for (int inv = 0; inv < 2; ++inv) {
                const std::uint32_t d = table.act(c, 2 * i + inv);
                Index want = pi[c];
                if (i < n) want = inv ? g.mul(want, g.inv(g.generator_index(i))) : g.mul_gen(want, i);
                if (pi[d] == unset) {
                    pi[d] = want;
                    queue.push_back(d);
                } else if (pi[d] != want) {
                    fibres_ok_ = false;
                }
            }
    }
    if (queue.size() != nc) fibres_ok_ = false;
    std::vector<std::uint32_t> fibre;
    for (std::uint32_t c = 0; c < nc; ++c)
        if (pi[c] == 0) fibre.push_back(c);
    if (std::uint64_t(fibre.size()) * g.order() != nc) fibres_ok_ = false;
    if (!fibres_ok_) throw InternalError("coset table does not project onto G");

    std::vector<Elem> elem_of(nc, ~Elem(0));
    coset_of_ = fibre;
    for (Elem e = 0; e < fibre.size(); ++e) elem_of[fibre[e]] = e;
    const Elem size = static_cast<Elem>(fibre.size());

    std::vector<Word> xs(g.size()), ys(g.size());
    for (Index a = 0; a < g.size(); ++a) {
        xs[a] = lift(g, a, false);
        ys[a] = lift(g, a, true);
    }
    auto as_elem = [&](std::uint32_t c) {
        const Elem e = elem_of[c];
        if (e == ~Elem(0)) throw InternalError("commutator leaves the fibre of pi");
        return e;
    };

    // generators [x_a, y_h], chosen greedily until their orbit is the whole fibre
    std::vector<std::pair<Index, Index>> chosen;
    std::vector<bool> reached(size, false);
    std::vector<Elem> orbit;
    auto rebuild_orbit = [&]() {
        std::fill(reached.begin(), reached.end(), false);
        orbit.assign(1, 0);
        reached[0] = true;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (int k = 0; k < static_cast<int>(perm_.size()); ++k) {
                const Elem d = perm_[k][orbit[i]];
                if (!reached[d]) {
                    reached[d] = true;
                    orbit.push_back(d);
                }
            }
    };
    auto perm_of = [&](const Word& w) {
        std::vector<Elem> p(size);
        for (Elem e = 0; e < size; ++e) p[e] = as_elem(table.trace(coset_of_[e], w));
        return p;
    };
    rebuild_orbit();
    auto consider = [&](Index a, Index h) {
        if (orbit.size() == size) return;
        const Word w = commutator_word(xs[a], ys[h]);
        const Elem t = as_elem(table.trace(0, w));
        if (reached[t]) return;
        chosen.emplace_back(a, h);
        perm_.push_back(perm_of(w));
        perm_.push_back(perm_of(inverse(w)));
        rebuild_orbit();
    };
    for (int j = 0; j < n; ++j)
        for (Index a = 1; a < g.size(); ++a) consider(a, g.generator_index(j));
    for (Index h = 1; h < g.size(); ++h)
        for (Index a = 1; a < g.size(); ++a) consider(a, h);
    if (orbit.size() != size) throw InternalError("commutators do not act transitively on the fibre");
    if (perm_.size() > 0xffff) throw InternalError("too many generators for the tensor model");

    // breadth-first Schreier tree over generators and inverses
    parent_.assign(size, 0);
    via_.assign(size, 0);
    depth_.assign(size, 0);
    fold_.assign(size, 0);
    std::vector<bool> seen(size, false);
    seen[0] = true;
    std::vector<Index> gen_fold;
    for (auto [a, h] : chosen) {
        const Index c = g.comm(a, h);
        gen_fold.push_back(c);
        gen_fold.push_back(g.inv(c));
    }
    std::vector<Elem> bfs{0};
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        const Elem e = bfs[i];
        for (std::size_t k = 0; k < perm_.size(); ++k) {
            const Elem d = perm_[k][e];
            if (seen[d]) continue;
            seen[d] = true;
            parent_[d] = e;
            via_[d] = static_cast<std::uint16_t>(k);
            depth_[d] = static_cast<std::uint16_t>(depth_[e] + 1);
            depth_max_ = std::max<int>(depth_max_, depth_[d]);
            fold_[d] = g.mul(fold_[e], gen_fold[k]);
            bfs.push_back(d);
        }
    }

    tens_.resize(std::size_t(g.size()) * g.size());
    for (Index a = 0; a < g.size(); ++a)
        for (Index b = 0; b < g.size(); ++b)
            tens_[std::size_t(a) * g.size() + b] = as_elem(table.trace(0, commutator_word(xs[a], ys[b])));

    for (std::uint64_t q : prime_divisors(size)) {
        primes_.push_back(q);
        std::vector<Elem> pw(size);
        for (Elem e = 0; e < size; ++e) pw[e] = pow(e, static_cast<std::int64_t>(q));
        power_table_.push_back(std::move(pw));
    }

    std::vector<Elem> diag;
    for (Index a = 0; a < g.size(); ++a) diag.push_back(tensor(a, a));
    nabla_ = generate(diag);
    nabla_order_ = std::count(nabla_.begin(), nabla_.end(), true);
    kernel_.assign(size, false);
    for (Elem e = 0; e < size; ++e) kernel_[e] = fold_[e] == 0;
    kernel_order_ = std::count(kernel_.begin(), kernel_.end(), true);
}

void TensorModel::path(Elem a, std::vector<std::uint16_t>& out) const {
    out.clear();
    while (a != 0) {
        out.push_back(via_[a]);
        a = parent_[a];
    }
}

Elem TensorModel::mul(Elem a, Elem b) const {
    thread_local std::vector<std::uint16_t> p;
    path(b, p);
    for (auto it = p.rbegin(); it != p.rend(); ++it) a = perm_[*it][a];
    return a;
}

Elem TensorModel::inv(Elem a) const {
    thread_local std::vector<std::uint16_t> p;
    path(a, p);
    Elem r = 0;
    for (std::uint16_t k : p) r = perm_[k ^ 1][r];
    return r;
}

Elem TensorModel::pow(Elem a, std::int64_t n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    Elem r = 0;
    while (n) {
        if (n & 1) r = mul(r, a);
        n >>= 1;
        if (n) a = mul(a, a);
    }
    return r;
}

Elem TensorModel::comm(Elem a, Elem b) const { return mul(mul(a, b), inv(mul(b, a))); }

std::vector<bool> TensorModel::trivial_set() const {
    std::vector<bool> s(size(), false);
    s[0] = true;
    return s;
}

std::vector<bool> TensorModel::generate(std::span<const Elem> gens) const {
    std::vector<bool> in = trivial_set();
    std::vector<Elem> chosen;
    for (Elem x : gens) {
        if (in[x]) continue;
        chosen.push_back(x);
        std::fill(in.begin(), in.end(), false);
        std::vector<Elem> list{0};
        in[0] = true;
        for (std::size_t i = 0; i < list.size(); ++i)
            for (Elem c : chosen) {
                const Elem d = mul(list[i], c);
                if (!in[d]) {
                    in[d] = true;
                    list.push_back(d);
                }
            }
    }
    return in;
}

const std::vector<Elem>& TensorModel::power_table(std::uint64_t q) const {
    for (std::size_t i = 0; i < primes_.size(); ++i)
        if (primes_[i] == q) return power_table_[i];
    throw InternalError("prime does not divide the model order");
}

std::uint64_t TensorModel::order_modulo(Elem a, const std::vector<bool>& n) const {
    std::uint64_t order = 1;
    const std::uint64_t m = size();
    for (std::uint64_t q : primes_) {
        std::uint64_t rest = m;
        while (rest % q == 0) rest /= q;
        Elem y = rest == 1 ? a : pow(a, static_cast<std::int64_t>(rest));
        const auto& pw = power_table(q);
        while (!n[y]) {
            y = pw[y];
            order *= q;
        }
    }
    return order;
}

std::uint64_t TensorModel::exponent_modulo(const std::vector<bool>& h, const std::vector<bool>& n) const {
    std::uint64_t e = 1;
    for (Elem x = 0; x < size(); ++x)
        if (h[x] && !n[x]) e = lcm_u64(e, order_modulo(x, n));
    return e;
}

// ---------------------------------------------------------------------------
// driver

std::vector<std::uint64_t> abelian_exterior_square(const std::vector<std::uint64_t>& invariants) {
    std::vector<std::uint64_t> d;
    for (std::uint64_t x : invariants)
        if (x > 1) d.push_back(x);
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) out.push_back(std::gcd(d[i], d[j]));
    return normalize_invariants(out);
}

std::uint64_t nabla_order_bound(const std::vector<std::uint64_t>& ab) {
    std::uint64_t b = 1;
    for (std::size_t i = 0; i < ab.size(); ++i) {
        b *= ab[i] % 2 == 0 ? 2 * ab[i] : ab[i];
        for (std::size_t j = i + 1; j < ab.size(); ++j) b *= std::gcd(ab[i], ab[j]);
    }
    return b;
}

namespace {

std::vector<std::uint64_t> abelianization(const PcGroup& g, const Subgroup& derived) {
    const std::uint64_t order = g.order() / derived.order();
    return invariants_from_counts(order, [&](std::uint64_t q, int k) {
        std::uint64_t qk = 1;
        for (int t = 0; t < k; ++t) qk *= q;
        std::uint64_t c = 0;
        for (Index x = 0; x < g.size(); ++x) c += derived.contains(g.pow(x, static_cast<std::int64_t>(qk)));
        return c / derived.order();
    });
}

struct Attempt {
    bool complete = false;
    EnumStats stats;
    std::uint64_t cosets = 0;
    int rounds = 0;
    std::size_t relators = 0, added = 0;
    std::shared_ptr<TensorModel> model;
    std::shared_ptr<const CosetTable> table;
};

// Enumerate over G^phi, then test the action relations for every pair of
// commutator arguments (and every diagonal commutator in the exterior tier).
// Violated relations are added and the enumeration repeated.
Attempt enumerate_tier(const PcGroup& g, TensorTier tier, const TensorOptions& opts) {
    NuOptions no;
    no.exterior = tier == TensorTier::exterior;
    no.full_relations = opts.full_relations;
    NuPresentation nu = build_nu(g, no);
    const std::vector<Word> sub = nu.copy_generators();
    std::set<Word> present(nu.fp.relators.begin(), nu.fp.relators.end());
    Attempt at;
    for (int round = 1; round <= opts.max_rounds; ++round) {
        at.rounds = round;
        EnumOptions eo;
        eo.budget = opts.budget;
        EnumResult er = enumerate_cosets(nu.fp, sub, eo);
        at.stats = er.stats;
        if (!er.complete) return at;
        const CosetTable& t = er.table;

        std::vector<Word> failing;
        auto test = [&](const Word& w) {
            if (t.trace(0, w) != 0 && !present.count(w)) {
                present.insert(w);
                failing.push_back(w);
            }
        };
        for (int k = 0; k < g.ngens(); ++k)
            for (Index a = 1; a < g.size(); ++a)
                for (Index b = 1; b < g.size(); ++b)
                    for (const Word& w : action_relators(g, g.generator_index(k), a, b)) test(w);
        if (tier == TensorTier::exterior)
            for (Index a = 1; a < g.size(); ++a) test(free_reduce(tensor_word(g, a, a)));

        if (failing.empty()) {
            at.complete = true;
            at.cosets = t.cosets;
            at.relators = nu.fp.relators.size();
            at.model = std::make_shared<TensorModel>(g, t, tier);
            if (opts.keep_table) at.table = std::make_shared<const CosetTable>(std::move(er.table));
            return at;
        }
        at.added += failing.size();
        for (Word& w : failing) {
            nu.fp.relators.push_back(std::move(w));
            nu.provenance.push_back("action relation violated by the previous table");
        }
    }
    throw InternalError("relation verification did not converge");
}

template <class F>
CheckResult pair_check(std::string name, std::uint64_t total, std::uint64_t limit, std::size_t samples,
                       std::uint64_t seed, F f) {
    CheckResult c{std::move(name)};
    std::mt19937_64 rng(seed);
    c.exhaustive = total <= limit;
    const std::uint64_t n = c.exhaustive ? total : samples;
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t k = c.exhaustive ? i : std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
        ++c.cases;
        if (!f(k)) {
            c.passed = false;
            c.detail = "case " + std::to_string(k);
            break;
        }
    }
    return c;
}

void fill(TensorSquareResult& r, const PcGroup& g, const Subgroup& derived, const Attempt& at) {
    const TensorModel& m = *at.model;
    r.tier = m.tier();
    r.cosets = at.cosets;
    r.nu_order = g.order() * at.cosets;
    r.stats = at.stats;
    r.rounds = at.rounds;
    r.relators = at.relators;
    r.added_relators = at.added;
    r.model = at.model;
    r.table = at.table;

    const std::vector<bool> all(m.size(), true);
    const std::vector<bool>& nab = m.nabla();
    const std::uint64_t size = m.size();
    if (m.tier() == TensorTier::tensor) {
        r.tensor_order = size;
        r.nabla_order = m.nabla_order();
        r.tensor_exponent = m.exponent_modulo(all, m.trivial_set());
    }
    r.exterior_order = size / m.nabla_order();
    r.exterior_exponent = m.exponent_modulo(all, nab);
    r.kappa_image_order = size / m.kernel_order();
    r.multiplier_order = m.kernel_order() / m.nabla_order();
    r.multiplier_exponent = m.exponent_modulo(m.kernel(), nab);

    std::vector<std::uint64_t> ord(size, 0);
    for (Elem x = 0; x < size; ++x)
        if (m.kernel()[x]) ord[x] = m.order_modulo(x, nab);
    r.multiplier_invariants = invariants_from_counts(r.multiplier_order, [&](std::uint64_t q, int k) {
        std::uint64_t qk = 1;
        for (int t = 0; t < k; ++t) qk *= q;
        std::uint64_t c = 0;
        for (Elem x = 0; x < size; ++x)
            if (ord[x] && qk % ord[x] == 0) ++c;
        return c / m.nabla_order();
    });

    const std::uint64_t go = g.order();
    const std::uint64_t go2 = go * go;
    auto add = [&](CheckResult c) { r.checks.push_back(std::move(c)); };
    {
        CheckResult c{m.tier() == TensorTier::tensor ? "nu_order" : "nu_exterior_order"};
        c.cases = 1;
        c.passed = at.cosets == go * size && m.fibres_consistent();
        c.detail = "|nu| = " + std::to_string(r.nu_order) + ", |G|^2 |T| = " + std::to_string(go2 * size);
        add(c);
    }
    {
        CheckResult c{"relations_complete"};
        c.cases = std::uint64_t(g.ngens()) * go2;
        c.detail = std::to_string(at.rounds) + " round(s), " + std::to_string(at.added) + " relator(s) added";
        add(c);
    }
    add(pair_check("kappa_on_tensors", go2, ~std::uint64_t(0), 0, 0, [&](std::uint64_t k) {
        const Index a = Index(k / go), b = Index(k % go);
        return m.fold(m.tensor(a, b)) == g.comm(a, b);
    }));
    {
        CheckResult c{"kappa_image"};
        std::vector<bool> img(g.size(), false);
        for (Elem x = 0; x < size; ++x) img[m.fold(x)] = true;
        c.cases = size;
        for (Index x = 0; x < g.size(); ++x)
            if (img[x] != derived.contains(x)) c.passed = false;
        c.detail = "|im kappa| = " + std::to_string(r.kappa_image_order) + ", |G'| = " + std::to_string(derived.order());
        add(c);
    }
    {
        CheckResult c{"exterior_order"};
        c.cases = 1;
        c.passed = r.exterior_order == r.multiplier_order * derived.order();
        c.detail = std::to_string(r.exterior_order) + " = " + std::to_string(r.multiplier_order) + " * " +
                   std::to_string(derived.order());
        add(c);
    }
    {
        CheckResult c{"nabla_in_kernel"};
        c.cases = size;
        for (Elem x = 0; x < size; ++x)
            if (nab[x] && !m.kernel()[x]) c.passed = false;
        if (m.tier() == TensorTier::exterior && m.nabla_order() != 1) c.passed = false;
        if (m.tier() == TensorTier::tensor) {
            const std::uint64_t bound = nabla_order_bound(abelianization(g, derived));
            if (bound % m.nabla_order() != 0) c.passed = false;
            c.detail = "|nabla| = " + std::to_string(m.nabla_order()) + " divides " + std::to_string(bound);
        }
        add(c);
    }
    // the biderivation rules, in both argument orders
    add(pair_check("product_rule_left", go2 * go, 2'000'000, 20000, 1, [&](std::uint64_t k) {
        const Index a = Index(k / go2), a1 = Index(k / go % go), b = Index(k % go);
        return m.tensor(g.mul(a, a1), b) == m.mul(m.tensor(g.conj(a, a1), g.conj(a, b)), m.tensor(a, b));
    }));
    add(pair_check("product_rule_right", go2 * go, 2'000'000, 20000, 2, [&](std::uint64_t k) {
        const Index a = Index(k / go2), b = Index(k / go % go), b1 = Index(k % go);
        return m.tensor(a, g.mul(b, b1)) == m.mul(m.tensor(a, b), m.tensor(g.conj(b, a), g.conj(b, b1)));
    }));
    const std::uint64_t j2 = m.kernel_order() * m.kernel_order();
    std::vector<Elem> kern;
    for (Elem x = 0; x < size; ++x)
        if (m.kernel()[x]) kern.push_back(x);
    add(pair_check("multiplier_abelian", j2, 1'000'000, 20000, 3, [&](std::uint64_t k) {
        return nab[m.comm(kern[k / kern.size()], kern[k % kern.size()])];
    }));
}

}  // namespace

TensorSquareResult tensor_square(const PcGroup& g, const TensorOptions& opts) {
    const std::uint64_t envelope = opts.extended ? extended_envelope : standard_envelope;
    if (g.order() > envelope)
        throw ResourceError("|G| = " + std::to_string(g.order()) + " exceeds the envelope of " +
                            std::to_string(envelope) + (opts.extended ? "" : " (use the extended envelope for 243)"));
    if (opts.budget == 0) throw ValidationError("budget must be positive");
    TensorSquareResult r;
    r.group_order = g.order();
    const Subgroup derived = commutator_subgroup(g, whole_group(g), whole_group(g));
    r.commutator_order = derived.order();

    auto run = [&](TensorTier tier) {
        Attempt at = enumerate_tier(g, tier, opts);
        if (at.complete) {
            TensorSquareResult out = r;
            fill(out, g, derived, at);
            return std::optional<TensorSquareResult>(std::move(out));
        }
        r.stats = at.stats;
        r.rounds = at.rounds;
        r.tier = tier;
        return std::optional<TensorSquareResult>();
    };

    if (opts.tier == TierMode::tensor) {
        auto t = run(TensorTier::tensor);
        if (!t) r.status = "budget_exceeded";
        return t ? *t : r;
    }
    auto e = run(TensorTier::exterior);
    if (!e) {
        r.status = "budget_exceeded";
        return r;
    }
    if (opts.tier == TierMode::exterior) return *e;
    const std::uint64_t predicted =
        g.order() * e->exterior_order * nabla_order_bound(abelianization(g, derived));
    if (predicted > opts.budget || predicted > opts.auto_tensor_limit) return *e;
    auto t = run(TensorTier::tensor);
    return t ? *t : *e;
}

}  // namespace schurkit
