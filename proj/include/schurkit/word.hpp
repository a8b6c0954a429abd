#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace schurkit {

// A syllable g_gen^exp; generators are 0-based.
struct Letter {
    int gen = 0;
    std::int64_t exp = 1;
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
// Merges adjacent syllables in the same generator and drops zero exponents.
Word free_reduce(const Word& w);
// [a,b] = a b a^-1 b^-1
Word commutator_word(const Word& a, const Word& b);
// a b a^-1
Word conjugate_word(const Word& a, const Word& b);
std::int64_t word_length(const Word& w);

// "id" or g<k>^e factors joined by '*', 1-based generator numbers.
std::string format_word(const Word& w, const std::string& prefix = "g");

}  // namespace schurkit
