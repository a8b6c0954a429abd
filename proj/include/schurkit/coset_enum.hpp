#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schurkit/pc_presentation.hpp"

namespace schurkit {

// Complete coset table. Column 2g is generator g, column 2g+1 its inverse;
// coset 0 is the subgroup itself and the action is on the right.
struct CosetTable {
    int ngens = 0;
    std::uint32_t cosets = 0;
    std::vector<std::uint32_t> entries;  // cosets * 2 * ngens, row-major

    int columns() const { return 2 * ngens; }
    std::uint32_t act(std::uint32_t c, int col) const { return entries[std::size_t(c) * columns() + col]; }
    std::uint32_t trace(std::uint32_t c, const Word& w) const;

    // "cosets N\ngens M\n" then one line per coset listing the 1-based
    // targets in columns g1 g1^-1 g2 g2^-1 ...
    std::string dump() const;
};

struct EnumOptions {
    std::uint32_t budget = 2'000'000;  // maximum number of coset slots
    bool lookahead = true;
};

struct EnumStats {
    std::uint64_t defined = 0;
    std::uint32_t max_live = 0;
    std::uint64_t coincidences = 0;
    int lookaheads = 0;
};

struct EnumResult {
    bool complete = false;
    CosetTable table;  // filled when complete
    EnumStats stats;
};

// Todd-Coxeter enumeration of the cosets of <subgroup> in the finitely
// presented group, HLT strategy with lookahead when the slots run out.
EnumResult enumerate_cosets(const FpPresentation& fp, const std::vector<Word>& subgroup, const EnumOptions& opts = {});

// Default coset budget, overridden by the SCHURKIT_BUDGET environment variable.
std::uint32_t default_budget();

}  // namespace schurkit
