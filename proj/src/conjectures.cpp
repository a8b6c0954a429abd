#include "schurkit/conjectures.hpp"

#include <functional>
#include <limits>
#include <random>

#include "schurkit/errors.hpp"
#include "schurkit/subgroup.hpp"

namespace schurkit {

using Index = PcGroup::Index;

namespace {

bool divides(std::uint64_t a, std::uint64_t b) { return a != 0 && b % a == 0; }

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw ResourceError("bound overflows 64 bits");
    return a * b;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r = mul(r, b);
    return r;
}

// q^k = n for a prime q, or nothing
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto ps = prime_divisors(n);
    if (ps.size() != 1) return std::nullopt;
    int k = 0;
    while (n % ps[0] == 0) {
        n /= ps[0];
        ++k;
    }
    return std::make_pair(ps[0], k);
}

int log_exact(std::uint64_t n, std::uint64_t q) {
    int k = 0;
    while (n > 1) {
        n /= q;
        ++k;
    }
    return k;
}

// smallest n >= 0 with 2 * 3^n >= c
std::uint64_t log3_half(int c) {
    std::uint64_t n = 0, v = 2;
    while (v < static_cast<std::uint64_t>(c)) {
        v *= 3;
        ++n;
    }
    return n;
}

// max(0, 1 + k) for the smallest integer k with (p-1)^k (p+1) >= c
std::uint64_t log_p_minus_1(int c, std::uint64_t p) {
    const std::uint64_t b = p - 1, top = p + 1;
    std::int64_t k = 0;
    if (top >= static_cast<std::uint64_t>(c)) {
        // k <= 0: largest j with c * b^j <= top, then k = -j
        std::uint64_t v = c;
        while (v * b <= top) {
            v *= b;
            --k;
        }
    } else {
        std::uint64_t v = top;
        while (v < static_cast<std::uint64_t>(c)) {
            v *= b;
            ++k;
        }
    }
    return static_cast<std::uint64_t>(std::max<std::int64_t>(0, 1 + k));
}

struct Ctx {
    const StructureReport& s;
    std::uint64_t p = 0;  // prime of a nontrivial p-group, else 0
    std::uint64_t eG = 1, eZ = 1, eQ = 1;
    int c = -1;  // class, -1 when not nilpotent
    int d = 0;
    bool odd() const { return p != 0 && p != 2; }
};

struct Hyp {
    Truth t = Truth::no;
    std::string reason;
};

Hyp yes(std::string r) { return {Truth::yes, std::move(r)}; }
Hyp no(std::string r) { return {Truth::no, std::move(r)}; }
Hyp from(Truth t, std::string what) {
    if (t == Truth::unknown) return {Truth::unknown, what + " undecided"};
    return {t, what + (t == Truth::yes ? "" : " fails")};
}
Hyp both(Hyp a, Hyp b) {
    if (a.t == Truth::no) return a;
    if (b.t == Truth::no) return b;
    if (a.t == Truth::unknown) return a;
    if (b.t == Truth::unknown) return b;
    return yes(a.reason + "; " + b.reason);
}

Hyp p_group(const Ctx& x) { return x.p ? yes("p = " + std::to_string(x.p)) : no("not a nontrivial p-group"); }
Hyp odd_p_group(const Ctx& x) { return x.odd() ? yes("p = " + std::to_string(x.p)) : no("not an odd p-group"); }
Hyp two_group(const Ctx& x) { return x.p == 2 ? yes("p = 2") : no("not a 2-group"); }

enum class Quantity { exterior, multiplier };

struct Rule {
    std::string id, statement;
    std::function<Hyp(const Ctx&)> hyp;
    Quantity lhs;
    std::function<std::uint64_t(const Ctx&)> rhs;
    std::string bound;
};

std::string lhs_name(Quantity q) { return q == Quantity::exterior ? "e(G^G)" : "e(M(G))"; }

// abelian normal subgroups of prime-power index q^l
struct IndexedNormal {
    const Subgroup* n;
    std::uint64_t q;
    int l;
};

std::vector<IndexedNormal> abelian_normal_of_prime_power_index(const StructureReport& s) {
    std::vector<IndexedNormal> out;
    for (const Subgroup& n : s.abelian_normal) {
        const std::uint64_t idx = s.order / n.order();
        if (idx == 1) {
            out.push_back({&n, s.prime ? std::uint64_t(*s.prime) : 0, 0});
        } else if (auto pp = prime_power(idx)) {
            out.push_back({&n, pp->first, pp->second});
        }
    }
    return out;
}

std::uint64_t small_index_limit(std::uint64_t p) { return p == 2 ? 5 : std::max<std::uint64_t>(7, p + 2); }

const std::vector<Rule>& rules() {
    static const std::vector<Rule> r = {
        {"central_quotient_exponent_2_or_3", "e(G/Z) = p with p in {2,3}",
         [](const Ctx& x) {
             return x.eQ == 2 || x.eQ == 3 ? yes("e(G/Z) = " + std::to_string(x.eQ)) : no("e(G/Z) not 2 or 3");
         },
         Quantity::exterior, [](const Ctx& x) { return x.eG; }, "e(G)"},
        {"central_quotient_exponent_6", "e(G/Z) = 6",
         [](const Ctx& x) { return x.eQ == 6 ? yes("e(G/Z) = 6") : no("e(G/Z) != 6"); }, Quantity::multiplier,
         [](const Ctx& x) { return x.eG; }, "e(G)"},
        {"odd_frattini_abelian", "odd p-group with abelian Frattini subgroup",
         [](const Ctx& x) { return both(odd_p_group(x), from(x.s.frattini_abelian, "Frattini subgroup abelian")); },
         Quantity::exterior, [](const Ctx& x) { return x.eG; }, "e(G)"},
        {"cyclic_commutator", "p-group with cyclic commutator subgroup",
         [](const Ctx& x) { return both(p_group(x), from(x.s.commutator_cyclic, "G' cyclic")); },
         Quantity::multiplier, [](const Ctx& x) { return x.eG; }, "e(G)"},
        {"odd_cyclic_commutator", "odd p-group with cyclic commutator subgroup",
         [](const Ctx& x) { return both(odd_p_group(x), from(x.s.commutator_cyclic, "G' cyclic")); },
         Quantity::exterior, [](const Ctx& x) { return x.eG; }, "e(G)"},
        {"frattini_cyclic", "p-group with cyclic Frattini subgroup",
         [](const Ctx& x) { return both(p_group(x), from(x.s.frattini_cyclic, "Frattini subgroup cyclic")); },
         Quantity::exterior, [](const Ctx& x) { return x.eG; }, "e(G)"},
        {"metacyclic", "metacyclic group", [](const Ctx& x) { return from(x.s.metacyclic, "metacyclic"); },
         Quantity::exterior, [](const Ctx& x) { return x.eG; }, "e(G)"},
        {"exponent_5_few_generators", "exponent 5 with 2 <= d(G) < 4",
         [](const Ctx& x) {
             if (x.eG != 5) return no("e(G) != 5");
             const int d = x.s.generator_rank.value_or(0);
             return d >= 2 && d < 4 ? yes("d(G) = " + std::to_string(d)) : no("d(G) = " + std::to_string(d));
         },
         Quantity::multiplier, [](const Ctx& x) { return mul(x.eG, x.eG); }, "e(G)^2"},
        {"metabelian_exponent_p", "metabelian of prime exponent",
         [](const Ctx& x) {
             if (!prime_power(x.eG) || prime_power(x.eG)->second != 1) return no("exponent not prime");
             return x.d <= 2 ? yes("derived length " + std::to_string(x.d)) : no("derived length > 2");
         },
         Quantity::exterior, [](const Ctx& x) { return x.eG; }, "e(G)"},
        {"solvable_exponent_p", "solvable of prime exponent p and derived length d >= 2",
         [](const Ctx& x) {
             if (!prime_power(x.eG) || prime_power(x.eG)->second != 1) return no("exponent not prime");
             return x.d >= 2 ? yes("d = " + std::to_string(x.d)) : no("derived length < 2");
         },
         Quantity::exterior,
         [](const Ctx& x) {
             const std::uint64_t b = ipow(x.eG, x.d - 1);
             return x.eG == 2 ? mul(ipow(2, x.d - 2), b) : b;
         },
         "e(G)^(d-1), times 2^(d-2) for p = 2"},
        {"odd_exponent_p_derived_length_below_4", "odd group of prime exponent with derived length < 4",
         [](const Ctx& x) {
             if (!x.odd() || x.eG != x.p) return no("not of odd prime exponent");
             return x.d < 4 ? yes("derived length " + std::to_string(x.d)) : no("derived length >= 4");
         },
         Quantity::exterior, [](const Ctx& x) { return mul(x.eG, x.eG); }, "e(G)^2"},
        {"odd_abelian_normal_small_index", "odd p-group with abelian normal N of index p^l, l < max(7, p+2)",
         [](const Ctx& x) {
             Hyp h = odd_p_group(x);
             if (h.t != Truth::yes) return h;
             if (x.s.normal_search_complete != Truth::yes) return Hyp{Truth::unknown, "normal subgroups not enumerated"};
             for (const auto& n : abelian_normal_of_prime_power_index(x.s))
                 if (std::uint64_t(n.l) < small_index_limit(x.p)) return yes("l = " + std::to_string(n.l));
             return no("no abelian normal subgroup of small index");
         },
         Quantity::multiplier, [](const Ctx& x) { return mul(x.eG, x.eG); }, "e(G)^2"},
        {"odd_commutator_powerful", "odd p-group with powerful commutator subgroup",
         [](const Ctx& x) { return both(odd_p_group(x), from(x.s.commutator_powerful, "G' powerful")); },
         Quantity::exterior, [](const Ctx& x) { return mul(x.eG, x.eG); }, "e(G)^2"},
        {"odd_gamma_p_plus_1_powerful", "odd p-group with powerful gamma_{p+1}",
         [](const Ctx& x) {
             return both(odd_p_group(x), from(x.s.gamma_p_plus_1_powerful, "gamma_{p+1} powerful"));
         },
         Quantity::exterior, [](const Ctx& x) { return mul(x.eG, x.eG); }, "e(G)^2"},
        {"odd_class_7", "odd p-group of class 7",
         [](const Ctx& x) { return both(odd_p_group(x), x.c == 7 ? yes("class 7") : no("class != 7")); },
         Quantity::exterior, [](const Ctx& x) { return mul(x.p, x.eG); }, "p e(G)"},
        {"center_exponent_p_class_p_plus_1", "p-group with e(Z) = p and class <= p+1",
         [](const Ctx& x) {
             Hyp h = p_group(x);
             if (h.t != Truth::yes) return h;
             if (x.eZ != x.p) return no("e(Z) != p");
             return std::uint64_t(x.c) <= x.p + 1 ? yes("class " + std::to_string(x.c)) : no("class > p+1");
         },
         Quantity::exterior, [](const Ctx& x) { return mul(x.p, x.eQ); }, "p e(G/Z)"},
        {"odd_abelian_normal_index_p2", "abelian normal subgroup of index p^2, p odd",
         [](const Ctx& x) {
             if (x.s.normal_search_complete != Truth::yes) return Hyp{Truth::unknown, "normal subgroups not enumerated"};
             for (const auto& n : abelian_normal_of_prime_power_index(x.s))
                 if (n.l == 2 && n.q != 2) return yes("index " + std::to_string(n.q) + "^2");
             return no("no abelian normal subgroup of odd index p^2");
         },
         Quantity::multiplier,
         [](const Ctx& x) {
             for (const auto& n : abelian_normal_of_prime_power_index(x.s))
                 if (n.l == 2 && n.q != 2) return mul(n.q, x.eG);
             return std::uint64_t(0);
         },
         "p e(G)"},
        {"two_group_frattini_abelian", "2-group with abelian Frattini subgroup",
         [](const Ctx& x) { return both(two_group(x), from(x.s.frattini_abelian, "Frattini subgroup abelian")); },
         Quantity::exterior, [](const Ctx& x) { return mul(2, x.eG); }, "2 e(G)"},
        {"odd_frattini_powerful", "odd p-group with powerful Frattini subgroup",
         [](const Ctx& x) { return both(odd_p_group(x), from(x.s.frattini_powerful, "Frattini subgroup powerful")); },
         Quantity::exterior, [](const Ctx& x) { return mul(x.p, x.eG); }, "p e(G)"},
        {"three_group_class_at_most_7", "3-group of class <= 7",
         [](const Ctx& x) {
             if (x.p != 3) return no("not a 3-group");
             return x.c <= 7 ? yes("class " + std::to_string(x.c)) : no("class > 7");
         },
         Quantity::exterior, [](const Ctx& x) { return mul(3, x.eG); }, "3 e(G)"},
        {"five_group_class_at_most_7", "5-group of class <= 7",
         [](const Ctx& x) {
             if (x.p != 5) return no("not a 5-group");
             return x.c <= 7 ? yes("class " + std::to_string(x.c)) : no("class > 7");
         },
         Quantity::exterior, [](const Ctx& x) { return mul(5, x.eG); }, "5 e(G)"},
        {"center_exponent_and_class", "p-group with e(Z) = p^t and class <= p+m, m >= 1",
         [](const Ctx& x) { return p_group(x); }, Quantity::exterior,
         [](const Ctx& x) {
             const std::uint64_t t = log_exact(x.eZ, x.p);
             const std::uint64_t m = std::max<std::int64_t>(1, std::int64_t(x.c) - std::int64_t(x.p));
             return mul(ipow(x.p, m * t), x.eQ);
         },
         "p^(m t) e(G/Z)"},
        {"class_log3_odd_central_quotient", "nilpotent of class c with e(G/Z) = l odd, n = ceil(log_3(c/2))",
         [](const Ctx& x) {
             if (x.c < 0) return no("not nilpotent");
             return x.eQ % 2 == 1 ? yes("l = " + std::to_string(x.eQ)) : no("e(G/Z) even");
         },
         Quantity::exterior, [](const Ctx& x) { return mul(x.eZ, ipow(x.eQ, log3_half(x.c))); }, "e(Z) l^n"},
        {"odd_class_log_p_minus_1", "odd p-group of class c, e(G/Z) = l, n = 1 + ceil(log_{p-1}(c/(p+1)))",
         [](const Ctx& x) { return odd_p_group(x); }, Quantity::exterior,
         [](const Ctx& x) { return mul(x.eZ, ipow(x.eQ, log_p_minus_1(x.c, x.p))); }, "e(Z) l^n"},
        {"central_quotient_exponent_2", "e(G/Z) = 2",
         [](const Ctx& x) { return x.eQ == 2 ? yes("e(G/Z) = 2") : no("e(G/Z) != 2"); }, Quantity::exterior,
         [](const Ctx& x) { return mul(2, x.eZ); }, "2 e(Z)"},
        {"center_small_index", "p-group with |G:Z| = p^l, l < max(7, p+2) (p odd) or l < 5 (p = 2)",
         [](const Ctx& x) {
             Hyp h = p_group(x);
             if (h.t != Truth::yes) return h;
             const int l = log_exact(x.s.order / x.s.center.order(), x.p);
             return std::uint64_t(l) < small_index_limit(x.p) ? yes("l = " + std::to_string(l))
                                                               : no("l = " + std::to_string(l));
         },
         Quantity::exterior, [](const Ctx& x) { return mul(x.eZ, x.eQ); }, "e(Z) e(G/Z)"},
        {"center_in_frattini_small_quotient", "p-group with Z <= Frattini subgroup and |G/Z| <= p^4",
         [](const Ctx& x) {
             Hyp h = both(p_group(x), from(x.s.center_in_frattini, "Z in Frattini subgroup"));
             if (h.t != Truth::yes) return h;
             return x.s.order / x.s.center.order() <= ipow(x.p, 4) ? yes("|G/Z| <= p^4") : no("|G/Z| > p^4");
         },
         Quantity::multiplier, [](const Ctx& x) { return mul(ipow(x.p, x.p == 2 ? 3 : 2), x.eG); },
         "p^2 e(G), p^3 e(G) for p = 2"},
    };
    return r;
}

Ctx context(const StructureReport& s) {
    Ctx x{s, 0};
    if (s.prime && s.order > 1) x.p = *s.prime;
    x.eG = s.exponent;
    x.eZ = s.center_exponent;
    x.eQ = s.central_quotient_exponent;
    x.c = s.nilpotency_class.value_or(-1);
    x.d = s.derived_length;
    return x;
}

// the two results quantified over abelian normal subgroups of prime-power index
TheoremRecord index_exterior_record(const Ctx& x) {
    TheoremRecord t;
    t.id = "abelian_normal_index_exterior";
    t.statement = "p-group with abelian normal N of index p^l, l < max(7, p+2) (p odd) or l < 5 (p = 2)";
    t.bound = "e(G^G) | e(N) e(G/N), times 2 for p = 2";
    Hyp h = p_group(x);
    if (h.t == Truth::yes && x.s.normal_search_complete != Truth::yes)
        h = {Truth::unknown, "normal subgroups not enumerated"};
    if (h.t == Truth::yes) {
        h = no("no abelian normal subgroup of small index");
        for (const auto& n : abelian_normal_of_prime_power_index(x.s))
            if (std::uint64_t(n.l) < small_index_limit(x.p)) h = yes("abelian normal subgroups of small index exist");
    }
    t.hypotheses = h.t;
    t.reason = h.reason;
    return t;
}

TheoremRecord index_multiplier_record(const Ctx& x, const IndexedNormal** best) {
    TheoremRecord t;
    t.id = "abelian_normal_index_multiplier";
    t.statement = "abelian normal N of prime-power index p^l with l >= 2";
    t.bound = "e(M(G)) | p^ceil(l/2) e(G), p^(ceil(l/2)+1) e(G) for p = 2";
    static thread_local std::vector<IndexedNormal> keep;
    keep = abelian_normal_of_prime_power_index(x.s);
    *best = nullptr;
    if (x.s.normal_search_complete != Truth::yes) {
        t.hypotheses = Truth::unknown;
        t.reason = "normal subgroups not enumerated";
        return t;
    }
    for (const auto& n : keep)
        if (n.l >= 2 && (!*best || n.l < (*best)->l)) *best = &n;
    t.hypotheses = truth(*best != nullptr);
    t.reason = *best ? "smallest l = " + std::to_string((*best)->l) : "no abelian normal subgroup with l >= 2";
    return t;
}

}  // namespace

ConjectureVerdict conjecture_verdict(const StructureReport& s, std::uint64_t em) {
    ConjectureVerdict v;
    v.group_exponent = s.exponent;
    v.multiplier_exponent = em;
    v.c1 = divides(em, s.exponent);
    v.c2 = divides(em, mul(s.exponent, s.exponent));
    if (s.prime) v.c3 = divides(em, mul(*s.prime, s.exponent));
    return v;
}

std::vector<TheoremRecord> theorem_hypotheses(const StructureReport& s) {
    const Ctx x = context(s);
    std::vector<TheoremRecord> out;
    for (const Rule& r : rules()) {
        TheoremRecord t;
        t.id = r.id;
        t.statement = r.statement;
        t.bound = lhs_name(r.lhs) + " | " + r.bound;
        const Hyp h = r.hyp(x);
        t.hypotheses = h.t;
        t.reason = h.reason;
        out.push_back(std::move(t));
    }
    out.push_back(index_exterior_record(x));
    const IndexedNormal* best = nullptr;
    out.push_back(index_multiplier_record(x, &best));
    return out;
}

std::vector<std::string> classify(const StructureReport& s) {
    std::vector<std::string> ids;
    for (const auto& t : theorem_hypotheses(s))
        if (t.hypotheses == Truth::yes) ids.push_back(t.id);
    return ids;
}

bool CheckReport::red_alert() const {
    return std::any_of(theorems.begin(), theorems.end(), [](const TheoremRecord& t) { return t.red_alert(); });
}

CheckReport check(const PcGroup& g, const StructureReport& s, const TensorSquareResult& r,
                  const ConjectureOptions& opts) {
    if (!r.complete() || !r.model) throw ValidationError("tensor square was not computed");
    if (r.model->group().id() != g.id() || s.group_id != g.id() || r.group_order != g.order())
        throw ValidationError("structure and tensor reports describe different groups");
    const Ctx x = context(s);
    const std::uint64_t eW = r.exterior_exponent, eM = r.multiplier_exponent;
    CheckReport out;
    out.verdict = conjecture_verdict(s, eM);

    for (const Rule& rule : rules()) {
        TheoremRecord t;
        t.id = rule.id;
        t.statement = rule.statement;
        t.bound = lhs_name(rule.lhs) + " | " + rule.bound;
        const Hyp h = rule.hyp(x);
        t.hypotheses = h.t;
        t.reason = h.reason;
        if (h.t == Truth::yes) {
            t.lhs = rule.lhs == Quantity::exterior ? eW : eM;
            t.rhs = rule.rhs(x);
            t.bound_holds = divides(t.lhs, t.rhs);
        }
        out.theorems.push_back(std::move(t));
    }

    {
        TheoremRecord t = index_exterior_record(x);
        if (t.hypotheses == Truth::yes) {
            t.lhs = eW;
            t.bound_holds = true;
            for (const auto& n : abelian_normal_of_prime_power_index(s)) {
                if (std::uint64_t(n.l) >= small_index_limit(x.p)) continue;
                const std::uint64_t eN = exponent(g, *n.n);
                const std::uint64_t eGN = quotient_exponent(g, whole_group(g), *n.n);
                const std::uint64_t rhs = mul(x.p == 2 ? 2 : 1, mul(eN, eGN));
                if (t.rhs == 0 || rhs < t.rhs) t.rhs = rhs;
                if (!divides(eW, rhs)) {
                    t.bound_holds = false;
                    t.rhs = rhs;
                    t.note = "fails for N of order " + std::to_string(n.n->order());
                    break;
                }
            }
        }
        out.theorems.push_back(std::move(t));
    }
    {
        const IndexedNormal* best = nullptr;
        TheoremRecord t = index_multiplier_record(x, &best);
        if (t.hypotheses == Truth::yes) {
            const std::uint64_t half = (best->l + 1) / 2;
            t.lhs = eM;
            t.rhs = mul(ipow(best->q, best->q == 2 ? half + 1 : half), x.eG);
            t.bound_holds = divides(eM, t.rhs);
            if (opts.quotient_review) {
                TensorOptions to;
                to.tier = TierMode::exterior;
                to.budget = opts.budget;
                to.extended = true;
                const PcGroup q(quotient(g, *best->n));
                const TensorSquareResult rq = tensor_square(q, to);
                if (!rq.complete()) {
                    t.note = "e(M(G/N)) not computed within budget";
                } else {
                    const std::uint64_t cap = ipow(best->q, half);
                    t.note = "e(M(G/N)) = " + std::to_string(rq.multiplier_exponent);
                    if (!divides(rq.multiplier_exponent, cap)) {
                        t.review = true;
                        t.note += " exceeds p^ceil(l/2) = " + std::to_string(cap);
                    }
                }
            }
        }
        out.theorems.push_back(std::move(t));
    }
    return out;
}

// ---------------------------------------------------------------------------
// element-level power laws

namespace {

// smallest n >= lo with x^{p^n} in the member set
int power_depth(const PcGroup& g, Index x, std::uint64_t p, const Subgroup& in, int lo) {
    int n = 0;
    Index y = x;
    while (!in.contains(y)) {
        y = g.pow(y, static_cast<std::int64_t>(p));
        ++n;
    }
    return std::max(n, lo);
}

std::int64_t ipow_signed(std::uint64_t p, int n) { return n < 0 ? 0 : static_cast<std::int64_t>(ipow(p, n)); }

template <class F>
void over(CheckResult& c, std::uint64_t total, bool exhaustive, std::size_t samples, std::uint64_t seed, F f) {
    c.exhaustive = exhaustive;
    std::mt19937_64 rng(seed);
    const std::uint64_t n = exhaustive ? total : std::min<std::uint64_t>(samples, total);
    for (std::uint64_t i = 0; i < n && c.passed; ++i) {
        const std::uint64_t k = exhaustive ? i : std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
        ++c.cases;
        if (!f(k)) {
            c.passed = false;
            c.detail = "case " + std::to_string(k);
        }
    }
}

}  // namespace

std::vector<CheckResult> power_commutator_checks(const PcGroup& g, const StructureReport& s,
                                                 const CheckOptions& opts) {
    std::vector<CheckResult> out;
    if (!s.prime || s.order == 1 || !s.nilpotency_class) return out;
    const std::uint64_t p = *s.prime;
    const int cls = *s.nilpotency_class;
    const std::uint64_t go = g.order();
    const Subgroup trivial = trivial_subgroup(g);

    if (p == 3 && cls <= 6) {
        // a^{3^n} central gives [b, a^3]^{3^{n-1}} = 1
        CheckResult c("cube_commutator_central_power");
        std::vector<int> depth(g.size());
        for (Index a = 0; a < g.size(); ++a) depth[a] = power_depth(g, a, 3, s.center, 1);
        over(c, go * go, go <= 243, opts.samples, opts.seed + 10, [&](std::uint64_t k) {
            const Index a = Index(k / go), b = Index(k % go);
            return g.pow(g.comm(b, g.pow(a, 3)), ipow_signed(3, depth[a] - 1)) == 0;
        });
        out.push_back(c);

        // ... and ([b, a^3] c)^{3^{n-1}} = 1 for c in G' with c^{3^{n-1}} = 1
        CheckResult d("cube_commutator_times_derived");
        const auto& derived = s.commutator.elements;
        const std::uint64_t total = go * go * derived.size();
        over(d, total, go <= 81, opts.samples, opts.seed + 11, [&](std::uint64_t k) {
            const Index a = Index(k / (go * derived.size()));
            const Index b = Index(k / derived.size() % go);
            const Index cc = derived[k % derived.size()];
            const std::int64_t e = ipow_signed(3, depth[a] - 1);
            if (g.pow(cc, e) != 0) return true;
            return g.pow(g.mul(g.comm(b, g.pow(a, 3)), cc), e) == 0;
        });
        out.push_back(d);

        // [[a^3, b], b1]^{3^{n-1}} = 1 when the normal closure of a, b1 has
        // class <= 6, which holds for every pair once G itself has class <= 6
        CheckResult e("cube_double_commutator_central_power");
        over(e, go * go * go, go <= 81, opts.samples, opts.seed + 12, [&](std::uint64_t k) {
            const Index a = Index(k / (go * go)), b = Index(k / go % go), b1 = Index(k % go);
            return g.pow(g.comm(g.comm(g.pow(a, 3), b), b1), ipow_signed(3, depth[a] - 1)) == 0;
        });
        e.detail = "normal closures have class <= " + std::to_string(cls);
        out.push_back(e);
    }
    if (p == 3 && cls <= 8) {
        // g^{3^n} central gives [g^3, h]^{3^n} = 1
        CheckResult c("cube_commutator_power");
        std::vector<int> depth(g.size());
        for (Index a = 0; a < g.size(); ++a) depth[a] = power_depth(g, a, 3, s.center, 0);
        over(c, go * go, go <= 243, opts.samples, opts.seed + 13, [&](std::uint64_t k) {
            const Index a = Index(k / go), h = Index(k % go);
            return g.pow(g.comm(g.pow(a, 3), h), ipow_signed(3, depth[a])) == 0;
        });
        out.push_back(c);
    }
    if (p == 5 && cls <= 8) {
        // g^{5^n} = 1 and w(a) >= 2 give [g^5, a]^{5^{n-1}} = 1
        CheckResult c("fifth_power_commutator_weight_2");
        std::vector<int> ord(g.size()), cen(g.size());
        for (Index a = 0; a < g.size(); ++a) {
            ord[a] = power_depth(g, a, 5, trivial, 1);
            cen[a] = power_depth(g, a, 5, s.center, 1);
        }
        const auto& derived = s.commutator.elements;
        over(c, go * derived.size(), go <= 243, opts.samples, opts.seed + 14, [&](std::uint64_t k) {
            const Index a = Index(k / derived.size()), x = derived[k % derived.size()];
            return g.pow(g.comm(g.pow(a, 5), x), ipow_signed(5, ord[a] - 1)) == 0;
        });
        out.push_back(c);

        // g^{5^n} central gives [g^5, h]^{5^{n-1}} = 1
        CheckResult d("fifth_power_commutator_central_power");
        over(d, go * go, go <= 243, opts.samples, opts.seed + 15, [&](std::uint64_t k) {
            const Index a = Index(k / go), h = Index(k % go);
            return g.pow(g.comm(g.pow(a, 5), h), ipow_signed(5, cen[a] - 1)) == 0;
        });
        out.push_back(d);
    }
    return out;
}

// ---------------------------------------------------------------------------
// scans

bool ScanRow::red_alert() const {
    return std::any_of(theorems.begin(), theorems.end(), [](const TheoremRecord& t) { return t.red_alert(); });
}

bool ScanRow::check_failure() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; });
}

int ScanReport::red_alerts() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.red_alert(); }));
}
int ScanReport::check_failures() const {
    return static_cast<int>(
        std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.check_failure(); }));
}
int ScanReport::rejected() const {
    return static_cast<int>(
        std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.status == "rejected"; }));
}
int ScanReport::budget_exceeded() const {
    return static_cast<int>(
        std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.status == "budget_exceeded"; }));
}

ScanRow scan_one(const ScanInput& in, const ScanOptions& opts) {
    ScanRow row;
    row.source = in.source;
    if (!in.pcp) {
        row.status = "rejected";
        row.error = in.error;
        return row;
    }
    std::optional<PcGroup> gp;
    try {
        gp.emplace(*in.pcp);
    } catch (const InconsistentPresentation& e) {
        row.status = "rejected";
        row.error = e.what();
        for (const auto& f : e.report().failures) {
            std::string s = f.kind;
            for (int x : f.gens) s += " g" + std::to_string(x);
            row.overlap_failures.push_back(s);
        }
        return row;
    } catch (const ValidationError& e) {
        row.status = "rejected";
        row.error = e.what();
        return row;
    }
    const PcGroup& g = *gp;
    row.order = g.order();
    if (!g.indexable()) {
        row.status = "resource";
        row.error = "group too large to index";
        return row;
    }
    const StructureReport s = structure(g);
    row.prime = s.prime;
    row.nilpotency_class = s.nilpotency_class;
    row.derived_length = s.derived_length;
    row.e_group = s.exponent;
    row.e_center = s.center_exponent;
    row.e_central_quotient = s.central_quotient_exponent;
    row.classes = classify(s);

    TensorOptions to;
    to.budget = opts.budget;
    to.extended = opts.extended;
    TensorSquareResult r;
    try {
        r = tensor_square(g, to);
    } catch (const ResourceError& e) {
        row.status = "resource";
        row.error = e.what();
        return row;
    }
    row.tier = to_string(r.tier);
    row.cosets_defined = r.stats.defined;
    row.coincidences = r.stats.coincidences;
    row.lookaheads = r.stats.lookaheads;
    row.relator_rounds = r.rounds;
    if (!r.complete()) {
        row.status = "budget_exceeded";
        row.error = "coset budget of " + std::to_string(opts.budget) + " exhausted";
        return row;
    }
    row.cosets = r.cosets;
    row.e_tensor = r.tensor_exponent;
    row.tensor_order = r.tensor_order;
    row.e_exterior = r.exterior_exponent;
    row.exterior_order = r.exterior_order;
    row.e_multiplier = r.multiplier_exponent;
    row.multiplier_order = r.multiplier_order;
    row.multiplier_invariants = r.multiplier_invariants;

    ConjectureOptions co;
    co.budget = opts.budget;
    CheckReport cr = check(g, s, r, co);
    row.verdict = cr.verdict;
    row.theorems = std::move(cr.theorems);

    row.checks = r.checks;
    if (opts.micro_checks) {
        CheckOptions ko;
        ko.seed = opts.seed;
        for (auto& c : micro_lemma_checks(s, r, ko)) row.checks.push_back(std::move(c));
        for (auto& c : power_commutator_checks(g, s, ko)) row.checks.push_back(std::move(c));
    }
    return row;
}

ScanReport scan(const std::vector<ScanInput>& inputs, const ScanOptions& opts) {
    ScanReport rep;
    rep.seed = opts.seed;
    rep.budget = opts.budget;
    for (const ScanInput& in : inputs) rep.rows.push_back(scan_one(in, opts));
    return rep;
}

}  // namespace schurkit
