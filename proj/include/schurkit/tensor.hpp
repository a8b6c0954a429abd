#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schurkit/collector.hpp"
#include "schurkit/coset_enum.hpp"
#include "schurkit/nu_group.hpp"
#include "schurkit/structure.hpp"

namespace schurkit {

// The tensor tier enumerates nu(G) itself; the exterior tier enumerates
// nu(G)/nabla(G), which has index |G| |G^G| over G^phi instead of |G| |G(x)G|.
enum class TensorTier { exterior, tensor };
enum class TierMode { automatic, exterior, tensor };
std::string to_string(TensorTier t);

struct TensorOptions {
    std::uint32_t budget = 2'000'000;
    TierMode tier = TierMode::automatic;
    bool extended = false;        // envelope |G| <= 243 instead of 128
    bool full_relations = false;  // every triple of elements, |G| <= 16
    int max_rounds = 6;
    // automatic mode runs the tensor tier only when its predicted index is at
    // most this (and within the budget).
    std::uint64_t auto_tensor_limit = 600'000;
    bool keep_table = false;  // retain the final coset table in the result
};

constexpr std::uint64_t standard_envelope = 128;
constexpr std::uint64_t extended_envelope = 243;

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    bool exhaustive = true;
    std::uint64_t cases = 0;
    std::string detail;
};

// [G, G^phi] (tensor tier) or its image modulo nabla (exterior tier), acting
// regularly on the cosets of G^phi it contains. Element 0 is the identity.
class TensorModel {
  public:
    using Elem = std::uint32_t;

    TensorModel(const PcGroup& g, const CosetTable& table, TensorTier tier);

    const PcGroup& group() const { return g_; }
    TensorTier tier() const { return tier_; }
    Elem size() const { return static_cast<Elem>(coset_of_.size()); }

    // psi(a (x) b) = [x_a, y_b]
    Elem tensor(PcGroup::Index a, PcGroup::Index b) const { return tens_[std::size_t(a) * g_.size() + b]; }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::int64_t n) const;
    Elem comm(Elem a, Elem b) const;
    // kappa: [x_a, y_b] -> [a, b]
    PcGroup::Index fold(Elem a) const { return fold_[a]; }

    const std::vector<bool>& nabla() const { return nabla_; }
    const std::vector<bool>& kernel() const { return kernel_; }  // ker(kappa)
    std::uint64_t nabla_order() const { return nabla_order_; }
    std::uint64_t kernel_order() const { return kernel_order_; }

    std::vector<bool> generate(std::span<const Elem> gens) const;
    // smallest m >= 1 with a^m in n
    std::uint64_t order_modulo(Elem a, const std::vector<bool>& n) const;
    std::uint64_t exponent_modulo(const std::vector<bool>& h, const std::vector<bool>& n) const;
    std::vector<bool> trivial_set() const;

    // pi on the cosets of the enumerated table was consistent and its fibres
    // have equal size; orbit of coset 0 under the model equals the fibre.
    bool fibres_consistent() const { return fibres_ok_; }
    std::uint64_t cosets() const { return cosets_; }
    int tree_depth() const { return depth_max_; }

  private:
    PcGroup g_;
    TensorTier tier_;
    std::uint64_t cosets_ = 0;
    bool fibres_ok_ = true;
    std::vector<std::uint32_t> coset_of_;       // element -> coset
    std::vector<std::vector<Elem>> perm_;        // generator 2i and its inverse 2i+1, right action
    std::vector<std::uint32_t> parent_;          // Schreier tree
    std::vector<std::uint16_t> via_;
    std::vector<std::uint16_t> depth_;
    int depth_max_ = 0;
    std::vector<PcGroup::Index> fold_;
    std::vector<Elem> tens_;
    std::vector<bool> nabla_, kernel_;
    std::uint64_t nabla_order_ = 1, kernel_order_ = 1;
    std::vector<std::uint64_t> primes_;
    std::vector<std::vector<Elem>> power_table_;  // x -> x^q per prime q of |T|

    void path(Elem a, std::vector<std::uint16_t>& out) const;
    const std::vector<Elem>& power_table(std::uint64_t q) const;
};

struct TensorSquareResult {
    std::string status = "ok";  // "ok" or "budget_exceeded"
    TensorTier tier = TensorTier::exterior;
    std::uint64_t group_order = 1;
    std::uint64_t commutator_order = 1;
    std::uint64_t cosets = 0;    // index of G^phi
    std::uint64_t nu_order = 1;  // |nu(G)|, or |nu(G)/nabla(G)| in the exterior tier
    std::optional<std::uint64_t> tensor_order, tensor_exponent, nabla_order;
    std::uint64_t exterior_order = 1, exterior_exponent = 1;
    std::uint64_t kappa_image_order = 1;
    std::uint64_t multiplier_order = 1, multiplier_exponent = 1;
    std::vector<std::uint64_t> multiplier_invariants;
    EnumStats stats;
    int rounds = 0;
    std::size_t relators = 0;
    std::size_t added_relators = 0;
    std::vector<CheckResult> checks;
    std::shared_ptr<const TensorModel> model;
    std::shared_ptr<const CosetTable> table;  // with keep_table

    bool complete() const { return status == "ok"; }
    bool checks_passed() const;
};

// Throws ResourceError when |G| exceeds the envelope.
TensorSquareResult tensor_square(const PcGroup& g, const TensorOptions& opts = {});

// Invariants of the alternating square of Z_d1 + ... + Z_dk: the sum of
// Z_gcd(di,dj) over i < j.
std::vector<std::uint64_t> abelian_exterior_square(const std::vector<std::uint64_t>& invariants);

// Upper bound for |nabla(G)| from the abelianization invariants.
std::uint64_t nabla_order_bound(const std::vector<std::uint64_t>& abelianization);

struct CheckOptions {
    std::uint64_t exhaustive_limit = 81;  // |G| up to which element loops are exhaustive
    std::uint64_t pair_limit = 8'000'000;
    std::size_t samples = 20000;
    std::uint64_t seed = 1;
};

// Tensors of total weight >= class + 2 vanish, and so do commutators of two
// tensors whose four weights sum to >= class + 2.
std::vector<CheckResult> weight_triviality_check(const StructureReport& s, const TensorSquareResult& r,
                                                 const CheckOptions& opts = {});
// (g^n (x) h) = (g (x) h)^n for commuting g, h and n <= e(G); and
// [g1 (x) h1, g2 (x) h2] = [g1,h1] (x) [g2,h2].
std::vector<CheckResult> power_tensor_check(const StructureReport& s, const TensorSquareResult& r,
                                            const CheckOptions& opts = {});
// With e(G/Z) = s and e(G) = s q: g^{ts} ^ h = (g^s ^ h)^t for all t, and the
// image of G^s ^ G has exponent dividing q.
CheckResult central_power_check(const StructureReport& s, const TensorSquareResult& r, const CheckOptions& opts = {});
// e(im(N ^ G)) | e(N) e(im(N ^ N)) for every normal N; |G| <= 64.
CheckResult normal_exterior_check(const StructureReport& s, const TensorSquareResult& r, const CheckOptions& opts = {});

std::vector<CheckResult> micro_lemma_checks(const StructureReport& s, const TensorSquareResult& r,
                                            const CheckOptions& opts = {});

}  // namespace schurkit
