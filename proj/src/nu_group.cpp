#include "schurkit/nu_group.hpp"

#include "schurkit/errors.hpp"

namespace schurkit {

static Word shift(const Word& w, int offset) {
    Word out = w;
    for (Letter& l : out) l.gen += offset;
    return out;
}

Word lift(const PcGroup& g, PcGroup::Index e, bool copy) {
    return shift(g.word_of(g.element(e)), copy ? g.ngens() : 0);
}

Word tensor_word(const PcGroup& g, PcGroup::Index a, PcGroup::Index b) {
    return commutator_word(lift(g, a, false), lift(g, b, true));
}

std::vector<Word> NuPresentation::copy_generators() const {
    std::vector<Word> out;
    for (int i = 0; i < base_ngens; ++i) out.push_back({{y(i), 1}});
    return out;
}

std::vector<Word> action_relators(const PcGroup& g, PcGroup::Index k, PcGroup::Index a, PcGroup::Index b) {
    const Word t = tensor_word(g, a, b);
    const Word rhs_inv = inverse(tensor_word(g, g.conj(k, a), g.conj(k, b)));
    return {free_reduce(concat(conjugate_word(lift(g, k, false), t), rhs_inv)),
            free_reduce(concat(conjugate_word(lift(g, k, true), t), rhs_inv))};
}

NuPresentation build_nu(const PcGroup& g, const NuOptions& opts) {
    if (!g.indexable()) throw ResourceError("group too large to build nu(G)");
    const int n = g.ngens();
    const PcPresentation& pcp = g.presentation();
    NuPresentation nu;
    nu.base_ngens = n;
    nu.exterior = opts.exterior;
    nu.fp.ngens = 2 * n;
    for (int i = 0; i < n; ++i) nu.fp.generator_labels.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i) nu.fp.generator_labels.push_back("y" + std::to_string(i + 1));

    auto add = [&](Word w, std::string why) {
        w = free_reduce(w);
        if (w.empty()) return;
        nu.fp.relators.push_back(std::move(w));
        nu.provenance.push_back(std::move(why));
    };

    for (int copy = 0; copy < 2; ++copy) {
        const int off = copy ? n : 0;
        const std::string name = copy ? "y" : "x";
        for (int i = 0; i < n; ++i) {
            Word w{{off + i, pcp.relative_orders[i]}};
            add(concat(w, inverse(shift(pcp.power_relations[i], off))),
                "power relation of g" + std::to_string(i + 1) + " in the " + name + " copy");
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Word w{{off + i, 1}, {off + j, 1}, {off + i, -1}};
                add(concat(w, inverse(shift(pcp.conjugate(i, j), off))),
                    "conjugate relation g" + std::to_string(i + 1) + " g" + std::to_string(j + 1) + " in the " + name +
                        " copy");
            }
    }

    // The defining action relations are usually written with w^v = v^-1 w v
    // and [u,w] = u^-1 w^-1 u w. Replacing each of the three elements by its
    // inverse turns them into the left-conjugation form used here.
    const std::string adapter = " (right-action relation rewritten for left conjugation)";
    if (opts.full_relations) {
        if (g.order() > 16) throw ResourceError("full relation instantiation is limited to |G| <= 16");
        for (PcGroup::Index k = 1; k < g.size(); ++k)
            for (PcGroup::Index a = 1; a < g.size(); ++a)
                for (PcGroup::Index b = 1; b < g.size(); ++b) {
                    auto rs = action_relators(g, k, a, b);
                    const std::string tag = "elements " + std::to_string(k) + "," + std::to_string(a) + "," +
                                            std::to_string(b) + adapter;
                    add(rs[0], "x-action on commutator, " + tag);
                    add(rs[1], "y-action on commutator, " + tag);
                }
    } else {
        // Conjugation by a product is conjugation by its factors in turn, so
        // pc generators suffice for the conjugator; commutator arguments
        // beyond pc generators are checked after enumeration and added back
        // when the table violates them.
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    auto rs = action_relators(g, g.generator_index(k), g.generator_index(a), g.generator_index(b));
                    const std::string tag = "generators " + std::to_string(k + 1) + "," + std::to_string(a + 1) + "," +
                                            std::to_string(b + 1) + adapter;
                    add(rs[0], "x-action on commutator, " + tag);
                    add(rs[1], "y-action on commutator, " + tag);
                }
    }

    if (opts.exterior) {
        for (int i = 0; i < n; ++i) {
            const auto gi = g.generator_index(i);
            add(tensor_word(g, gi, gi), "diagonal commutator of g" + std::to_string(i + 1));
            for (int j = i + 1; j < n; ++j) {
                const auto p = g.mul(gi, g.generator_index(j));
                add(tensor_word(g, p, p),
                    "diagonal commutator of g" + std::to_string(i + 1) + "*g" + std::to_string(j + 1));
            }
        }
    }
    return nu;
}

EnumResult enumerate_nu(const NuPresentation& nu, std::uint32_t budget) {
    if (budget == 0) throw ValidationError("budget must be positive");
    EnumOptions eo;
    eo.budget = budget;
    return enumerate_cosets(nu.fp, {}, eo);
}

}  // namespace schurkit
