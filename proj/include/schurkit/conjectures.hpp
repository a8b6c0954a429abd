#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schurkit/collector.hpp"
#include "schurkit/structure.hpp"
#include "schurkit/tensor.hpp"

namespace schurkit {

// Divisibility of the multiplier exponent, evaluated on exact exponents:
//   c1: e(M(G)) | e(G),  c2: e(M(G)) | e(G)^2,  c3: e(M(G)) | p e(G) for p-groups.
struct ConjectureVerdict {
    bool c1 = true;
    bool c2 = true;
    std::optional<bool> c3;
    std::uint64_t group_exponent = 1;
    std::uint64_t multiplier_exponent = 1;
};

ConjectureVerdict conjecture_verdict(const StructureReport& s, std::uint64_t multiplier_exponent);

struct TheoremRecord {
    std::string id;
    std::string statement;
    Truth hypotheses = Truth::no;
    std::string reason;
    std::string bound;                  // e.g. "e(G^G) | 3 e(G)"
    std::uint64_t lhs = 0, rhs = 0;     // the exponent and the promised multiple
    std::optional<bool> bound_holds;    // set when the hypotheses hold
    bool review = false;                // flagged for a human look, not a failure
    std::string note;

    bool red_alert() const { return hypotheses == Truth::yes && bound_holds == false; }
};

// Identifiers of every encoded result whose hypotheses the group satisfies.
std::vector<std::string> classify(const StructureReport& s);
// Hypothesis records for every encoded result (bounds unevaluated).
std::vector<TheoremRecord> theorem_hypotheses(const StructureReport& s);

struct CheckReport {
    ConjectureVerdict verdict;
    std::vector<TheoremRecord> theorems;
    bool red_alert() const;
};

struct ConjectureOptions {
    // Compute e(M(G/N)) for the abelian normal subgroup used in the index-based
    // multiplier bound, to flag rows where it exceeds p^ceil(l/2).
    bool quotient_review = true;
    std::uint32_t budget = 2'000'000;
};

// Throws ValidationError when the two reports belong to different groups.
CheckReport check(const PcGroup& g, const StructureReport& s, const TensorSquareResult& r,
                  const ConjectureOptions& opts = {});

// Commutator power laws in small 3- and 5-groups, checked on group elements.
std::vector<CheckResult> power_commutator_checks(const PcGroup& g, const StructureReport& s,
                                                 const CheckOptions& opts = {});

// ---------------------------------------------------------------------------
// scans

struct ScanInput {
    std::string source;
    std::optional<PcPresentation> pcp;
    std::string error;  // parse or read failure when pcp is empty
};

struct ScanOptions {
    std::uint32_t budget = 2'000'000;
    std::uint64_t seed = 1;
    bool extended = true;
    bool micro_checks = true;
};

struct ScanRow {
    std::string source;
    // "ok", "rejected" (parse or validation), "budget_exceeded" or "resource"
    std::string status = "ok";
    std::string error;
    std::vector<std::string> overlap_failures;

    std::uint64_t order = 0;
    std::optional<int> prime;
    std::optional<int> nilpotency_class;
    int derived_length = 0;
    std::uint64_t e_group = 0, e_center = 0, e_central_quotient = 0;
    std::optional<std::uint64_t> e_tensor, e_exterior, e_multiplier;
    std::vector<std::uint64_t> multiplier_invariants;
    std::optional<std::uint64_t> tensor_order, exterior_order, multiplier_order;
    std::string tier;
    std::uint64_t cosets = 0, cosets_defined = 0, coincidences = 0;
    int lookaheads = 0, relator_rounds = 0;
    std::vector<std::string> classes;
    std::optional<ConjectureVerdict> verdict;
    std::vector<TheoremRecord> theorems;
    std::vector<CheckResult> checks;

    bool red_alert() const;
    bool check_failure() const;
};

struct ScanReport {
    std::uint64_t seed = 1;
    std::uint32_t budget = 0;
    std::vector<ScanRow> rows;

    int red_alerts() const;
    int check_failures() const;
    int rejected() const;
    int budget_exceeded() const;
};

ScanRow scan_one(const ScanInput& in, const ScanOptions& opts);
ScanReport scan(const std::vector<ScanInput>& inputs, const ScanOptions& opts = {});

}  // namespace schurkit
