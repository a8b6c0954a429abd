#include "schurkit/word.hpp"

#include <cstdlib>

namespace schurkit {

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word free_reduce(const Word& w) {
    Word out;
    for (const Letter& l : w) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Word commutator_word(const Word& a, const Word& b) {
    return free_reduce(concat(concat(a, b), concat(inverse(a), inverse(b))));
}

Word conjugate_word(const Word& a, const Word& b) {
    return free_reduce(concat(concat(a, b), inverse(a)));
}

std::int64_t word_length(const Word& w) {
    std::int64_t n = 0;
    for (const Letter& l : w) n += std::llabs(l.exp);
    return n;
}

std::string format_word(const Word& w, const std::string& prefix) {
    if (w.empty()) return "id";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '*';
        s += prefix + std::to_string(w[i].gen + 1);
        if (w[i].exp != 1) s += '^' + std::to_string(w[i].exp);
    }
    return s;
}

}  // namespace schurkit
