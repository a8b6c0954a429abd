#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schurkit/errors.hpp"
#include "schurkit/pc_presentation.hpp"

namespace schurkit {

// Normal form g_1^{e_1} ... g_n^{e_n}, 0 <= e_i < r_i.
struct GroupElement {
    std::uint64_t group_id = 0;
    std::vector<int> exponents;

    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;
};

struct FailedOverlap {
    std::string kind;        // which overlap family failed
    std::vector<int> gens;   // 1-based generator numbers involved
    std::vector<int> lhs;    // the two collected exponent vectors that differ
    std::vector<int> rhs;
};

struct ConsistencyReport {
    bool consistent = true;
    std::vector<FailedOverlap> failures;
};

// Checks each cyclic extension H_i = <g_i, H_{i+1}> from the top down:
// conjugation by g_i must induce an endomorphism of H_{i+1} whose r_i-th power
// is conjugation by g_i^{r_i}, and must fix g_i^{r_i}. Together these are
// equivalent to the classical overlap conditions.
ConsistencyReport check_consistency(const PcPresentation& pcp);

class InconsistentPresentation : public ValidationError {
  public:
    explicit InconsistentPresentation(ConsistencyReport r);
    const ConsistencyReport& report() const { return report_; }

  private:
    ConsistencyReport report_;
};

namespace detail {
struct Collector;
}

// A polycyclic group with a checked presentation. Copies share state.
class PcGroup {
  public:
    using Index = std::uint32_t;

    // Throws InconsistentPresentation when the presentation fails the check.
    explicit PcGroup(PcPresentation pcp);

    const PcPresentation& presentation() const;
    int ngens() const;
    std::uint64_t order() const;
    std::optional<int> prime() const;
    std::uint64_t id() const;

    GroupElement identity() const;
    GroupElement generator(int i) const;
    GroupElement normalize(const Word& w) const;
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement invert(const GroupElement& a) const;
    GroupElement power(const GroupElement& a, std::int64_t n) const;
    // g h g^-1
    GroupElement conjugate(const GroupElement& g, const GroupElement& h) const;
    // [a,b] = a b a^-1 b^-1
    GroupElement commutator(const GroupElement& a, const GroupElement& b) const;
    // right-normed [x1,[x2,...,xk]]
    GroupElement commutator(std::span<const GroupElement> xs) const;
    std::uint64_t element_order(const GroupElement& a) const;
    Word word_of(const GroupElement& a) const;
    bool is_identity(const GroupElement& a) const;

    // Dense indexing; element 0 is the identity. Available when the order is
    // at most max_indexed_order(); tables are built on first use.
    static std::uint64_t max_indexed_order();
    bool indexable() const;
    Index index_of(const GroupElement& a) const;
    Index index_of(std::span<const int> exponents) const;
    GroupElement element(Index i) const;
    // Exponent digits of element i.
    std::span<const int> digits(Index i) const;
    Index size() const;
    Index mul(Index a, Index b) const;
    Index mul_gen(Index a, int gen) const;
    Index inv(Index a) const;
    Index pow(Index a, std::int64_t n) const;
    Index comm(Index a, Index b) const;
    Index conj(Index g, Index h) const;
    std::uint32_t order_of(Index a) const;
    Index generator_index(int i) const;

  private:
    std::shared_ptr<detail::Collector> impl_;
    void check_owner(const GroupElement& a) const;
};

}  // namespace schurkit
