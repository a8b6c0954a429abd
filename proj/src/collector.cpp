#include "schurkit/collector.hpp"

#include <atomic>
#include <mutex>

namespace schurkit {

using Exps = std::vector<int>;

namespace detail {

struct Collector {
    PcPresentation pcp;
    int n = 0;
    std::vector<int> r;
    std::uint64_t order = 1;
    std::uint64_t id = 0;
    std::vector<std::uint64_t> stride;

    std::vector<Exps> pow_nf;                      // g_i^{r_i}
    std::vector<std::vector<Exps>> conj_fwd;       // g_i g_j g_i^-1
    std::vector<std::vector<std::vector<Exps>>> conj_inv_pow;  // (g_i^-1 g_j g_i)^e
    std::vector<Exps> inv_gen;                     // g_i^-1
    ConsistencyReport report;

    std::once_flag table_once;
    std::vector<PcGroup::Index> rmul;
    std::vector<PcGroup::Index> inv_table;
    std::vector<int> digit_table;

    explicit Collector(PcPresentation p);

    Exps one() const { return Exps(n, 0); }
    Exps gen(int i) const {
        Exps x = one();
        x[i] = 1;
        return x;
    }

    void mul_gen(Exps& x, int i) const;
    void mul_elem(Exps& x, const Exps& y) const {
        for (int j = 0; j < n; ++j)
            for (int e = 0; e < y[j]; ++e) mul_gen(x, j);
    }
    Exps product(const Exps& a, const Exps& b) const {
        Exps x = a;
        mul_elem(x, b);
        return x;
    }
    Exps invert(const Exps& y) const {
        Exps x = one();
        for (int j = n - 1; j >= 0; --j)
            for (int e = 0; e < y[j]; ++e) mul_elem(x, inv_gen[j]);
        return x;
    }
    Exps power(const Exps& a, std::int64_t k) const {
        Exps base = k < 0 ? invert(a) : a;
        std::uint64_t m = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
        Exps acc = one();
        while (m) {
            if (m & 1) mul_elem(acc, base);
            m >>= 1;
            if (m) base = product(base, base);
        }
        return acc;
    }
    // phi_i(y) = g_i y g_i^-1 for y in H_{i+1}
    Exps phi(int i, const Exps& y) const {
        Exps x = one();
        for (int j = i + 1; j < n; ++j)
            for (int e = 0; e < y[j]; ++e) mul_elem(x, conj_fwd[i][j]);
        return x;
    }
    Exps from_word(const Word& w) const {
        Exps x = one();
        for (const Letter& l : w) mul_elem(x, power(gen(l.gen), l.exp));
        return x;
    }
    std::uint64_t index(std::span<const int> x) const {
        std::uint64_t k = 0;
        for (int j = 0; j < n; ++j) k += static_cast<std::uint64_t>(x[j]) * stride[j];
        return k;
    }
    void build_tables();
};

void Collector::mul_gen(Exps& x, int i) const {
    bool tail_zero = true;
    for (int j = i + 1; j < n; ++j)
        if (x[j]) {
            tail_zero = false;
            break;
        }
    if (tail_zero) {
        if (++x[i] == r[i]) {
            x[i] = 0;
            mul_elem(x, pow_nf[i]);
        }
        return;
    }
    // x = p g_i^{x_i} t  =>  x g_i = p g_i^{x_i+1} (g_i^-1 t g_i)
    Exps t(x.begin() + i + 1, x.end());
    std::fill(x.begin() + i + 1, x.end(), 0);
    if (++x[i] == r[i]) {
        x[i] = 0;
        mul_elem(x, pow_nf[i]);
    }
    for (int j = i + 1; j < n; ++j)
        if (t[j - i - 1]) mul_elem(x, conj_inv_pow[i][j][t[j - i - 1]]);
}

static std::atomic<std::uint64_t> next_group_id{1};

static std::vector<int> one_based(std::initializer_list<int> xs) {
    std::vector<int> v;
    for (int x : xs) v.push_back(x + 1);
    return v;
}

Collector::Collector(PcPresentation p) : pcp(std::move(p)) {
    validate(pcp);
    n = pcp.ngens;
    r = pcp.relative_orders;
    order = pcp.order();
    id = next_group_id++;
    stride.assign(n, 1);
    for (int j = n - 2; j >= 0; --j) stride[j] = stride[j + 1] * static_cast<std::uint64_t>(r[j + 1]);
    pow_nf.assign(n, one());
    inv_gen.assign(n, one());
    conj_fwd.assign(n, std::vector<Exps>(n));
    conj_inv_pow.assign(n, std::vector<std::vector<Exps>>(n));

    auto fail = [&](std::string kind, std::vector<int> gens, const Exps& a, const Exps& b) {
        report.consistent = false;
        report.failures.push_back({std::move(kind), std::move(gens), a, b});
    };

    for (int i = n - 1; i >= 0; --i) {
        pow_nf[i] = from_word(pcp.power_relations[i]);
        for (int j = i + 1; j < n; ++j) conj_fwd[i][j] = from_word(pcp.conjugate_relations[i][j]);
        const Exps& w = pow_nf[i];
        Exps winv = invert(w);
        Exps gi = one();
        gi[i] = r[i] - 1;
        mul_elem(gi, winv);
        inv_gen[i] = gi;

        // conjugation must respect the relations of H_{i+1}
        for (int j = i + 1; j < n; ++j) {
            Exps lhs = power(conj_fwd[i][j], r[j]);
            Exps rhs = phi(i, pow_nf[j]);
            if (lhs != rhs) fail("power-conj", one_based({j, i}), lhs, rhs);
        }
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Exps& a = conj_fwd[i][j];
                Exps lhs = product(product(a, conj_fwd[i][k]), invert(a));
                Exps rhs = phi(i, conj_fwd[j][k]);
                if (lhs != rhs) fail("conj-conj-conj", one_based({k, j, i}), lhs, rhs);
            }
        // phi^{r_i} = conjugation by w
        for (int j = i + 1; j < n; ++j) {
            Exps lhs = gen(j);
            for (int e = 0; e < r[i]; ++e) lhs = phi(i, lhs);
            Exps rhs = product(product(w, gen(j)), winv);
            if (lhs != rhs) fail("conj-power", one_based({j, i}), lhs, rhs);
        }
        {
            Exps lhs = phi(i, w);
            if (lhs != w) fail("power-power", one_based({i}), lhs, w);
        }
        // g_i^-1 y g_i = phi^{r_i-1}(w^-1 y w)
        for (int j = i + 1; j < n; ++j) {
            Exps y = product(product(winv, gen(j)), w);
            for (int e = 0; e + 1 < r[i]; ++e) y = phi(i, y);
            auto& tab = conj_inv_pow[i][j];
            tab.assign(r[j], one());
            for (int e = 1; e < r[j]; ++e) tab[e] = product(tab[e - 1], y);
        }
    }
}

void Collector::build_tables() {
    const auto size = static_cast<std::size_t>(order);
    digit_table.assign(size * n, 0);
    rmul.assign(size * n, 0);
    inv_table.assign(size, 0);
    Exps x = one();
    for (std::size_t k = 0; k < size; ++k) {
        std::uint64_t rem = k;
        for (int j = 0; j < n; ++j) {
            x[j] = static_cast<int>(rem / stride[j]);
            rem %= stride[j];
            digit_table[k * n + j] = x[j];
        }
        for (int g = 0; g < n; ++g) {
            Exps y = x;
            mul_gen(y, g);
            rmul[k * n + g] = static_cast<PcGroup::Index>(index(y));
        }
    }
    for (std::size_t k = 0; k < size; ++k) {
        Exps x(digit_table.begin() + k * n, digit_table.begin() + (k + 1) * n);
        inv_table[k] = static_cast<PcGroup::Index>(index(invert(x)));
    }
}

}  // namespace detail

ConsistencyReport check_consistency(const PcPresentation& pcp) {
    return detail::Collector(pcp).report;
}

static std::string describe(const ConsistencyReport& r) {
    std::string s = "inconsistent presentation:";
    for (const auto& f : r.failures) {
        s += ' ' + f.kind + '(';
        for (std::size_t i = 0; i < f.gens.size(); ++i) s += (i ? "," : "") + std::to_string(f.gens[i]);
        s += ')';
    }
    return s;
}

InconsistentPresentation::InconsistentPresentation(ConsistencyReport r)
    : ValidationError(describe(r)), report_(std::move(r)) {}

PcGroup::PcGroup(PcPresentation pcp) : impl_(std::make_shared<detail::Collector>(std::move(pcp))) {
    if (!impl_->report.consistent) throw InconsistentPresentation(impl_->report);
}

const PcPresentation& PcGroup::presentation() const { return impl_->pcp; }
int PcGroup::ngens() const { return impl_->n; }
std::uint64_t PcGroup::order() const { return impl_->order; }
std::optional<int> PcGroup::prime() const { return impl_->pcp.prime; }
std::uint64_t PcGroup::id() const { return impl_->id; }

void PcGroup::check_owner(const GroupElement& a) const {
    if (a.group_id != impl_->id || static_cast<int>(a.exponents.size()) != impl_->n)
        throw ValidationError("element belongs to a different presentation");
}

GroupElement PcGroup::identity() const { return {impl_->id, impl_->one()}; }

GroupElement PcGroup::generator(int i) const {
    if (i < 0 || i >= impl_->n) throw ValidationError("generator index out of range");
    return {impl_->id, impl_->gen(i)};
}

GroupElement PcGroup::normalize(const Word& w) const {
    for (const Letter& l : w)
        if (l.gen < 0 || l.gen >= impl_->n) throw ValidationError("word letter out of range");
    return {impl_->id, impl_->from_word(w)};
}

GroupElement PcGroup::multiply(const GroupElement& a, const GroupElement& b) const {
    check_owner(a);
    check_owner(b);
    return {impl_->id, impl_->product(a.exponents, b.exponents)};
}

GroupElement PcGroup::invert(const GroupElement& a) const {
    check_owner(a);
    return {impl_->id, impl_->invert(a.exponents)};
}

GroupElement PcGroup::power(const GroupElement& a, std::int64_t k) const {
    check_owner(a);
    return {impl_->id, impl_->power(a.exponents, k)};
}

GroupElement PcGroup::conjugate(const GroupElement& g, const GroupElement& h) const {
    return multiply(multiply(g, h), invert(g));
}

GroupElement PcGroup::commutator(const GroupElement& a, const GroupElement& b) const {
    return multiply(multiply(a, b), multiply(invert(a), invert(b)));
}

GroupElement PcGroup::commutator(std::span<const GroupElement> xs) const {
    if (xs.empty()) throw ValidationError("empty commutator");
    GroupElement acc = xs.back();
    check_owner(acc);
    for (std::size_t k = xs.size() - 1; k-- > 0;) acc = commutator(xs[k], acc);
    return acc;
}

std::uint64_t PcGroup::element_order(const GroupElement& a) const {
    check_owner(a);
    const Exps one = impl_->one();
    Exps x = a.exponents;
    std::uint64_t k = 1;
    while (x != one) {
        impl_->mul_elem(x, a.exponents);
        ++k;
    }
    return k;
}

Word PcGroup::word_of(const GroupElement& a) const {
    check_owner(a);
    Word w;
    for (int j = 0; j < impl_->n; ++j)
        if (a.exponents[j]) w.push_back({j, a.exponents[j]});
    return w;
}

bool PcGroup::is_identity(const GroupElement& a) const {
    check_owner(a);
    for (int e : a.exponents)
        if (e) return false;
    return true;
}

std::uint64_t PcGroup::max_indexed_order() { return 1u << 18; }

bool PcGroup::indexable() const { return impl_->order <= max_indexed_order(); }

static void ensure_tables(detail::Collector& c) {
    if (c.order > PcGroup::max_indexed_order())
        throw ResourceError("group of order " + std::to_string(c.order) + " is too large for indexed tables");
    std::call_once(c.table_once, [&] { c.build_tables(); });
}

PcGroup::Index PcGroup::index_of(const GroupElement& a) const {
    check_owner(a);
    return index_of(std::span<const int>(a.exponents));
}

PcGroup::Index PcGroup::index_of(std::span<const int> x) const {
    if (!indexable()) throw ResourceError("group too large for indexed tables");
    return static_cast<Index>(impl_->index(x));
}

GroupElement PcGroup::element(Index i) const {
    auto d = digits(i);
    return {impl_->id, Exps(d.begin(), d.end())};
}

std::span<const int> PcGroup::digits(Index i) const {
    ensure_tables(*impl_);
    if (i >= impl_->order) throw ValidationError("element index out of range");
    return {impl_->digit_table.data() + static_cast<std::size_t>(i) * impl_->n,
            static_cast<std::size_t>(impl_->n)};
}

PcGroup::Index PcGroup::size() const {
    if (!indexable()) throw ResourceError("group too large for indexed tables");
    return static_cast<Index>(impl_->order);
}

PcGroup::Index PcGroup::mul_gen(Index a, int gen) const {
    ensure_tables(*impl_);
    return impl_->rmul[static_cast<std::size_t>(a) * impl_->n + gen];
}

PcGroup::Index PcGroup::mul(Index a, Index b) const {
    ensure_tables(*impl_);
    const int n = impl_->n;
    const int* d = impl_->digit_table.data() + static_cast<std::size_t>(b) * n;
    const Index* rm = impl_->rmul.data();
    for (int j = 0; j < n; ++j)
        for (int e = 0; e < d[j]; ++e) a = rm[static_cast<std::size_t>(a) * n + j];
    return a;
}

PcGroup::Index PcGroup::inv(Index a) const {
    ensure_tables(*impl_);
    return impl_->inv_table[a];
}

PcGroup::Index PcGroup::pow(Index a, std::int64_t k) const {
    Index base = a;
    if (k < 0) {
        base = inv(a);
        k = -k;
    }
    Index acc = 0;
    while (k) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return acc;
}

PcGroup::Index PcGroup::comm(Index a, Index b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

PcGroup::Index PcGroup::conj(Index g, Index h) const { return mul(mul(g, h), inv(g)); }

std::uint32_t PcGroup::order_of(Index a) const {
    std::uint32_t k = 1;
    for (Index x = a; x != 0; x = mul(x, a)) ++k;
    return k;
}

PcGroup::Index PcGroup::generator_index(int i) const {
    if (i < 0 || i >= impl_->n) throw ValidationError("generator index out of range");
    return static_cast<Index>(impl_->stride[i]);
}

}  // namespace schurkit
