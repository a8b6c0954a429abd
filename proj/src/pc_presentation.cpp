#include "schurkit/pc_presentation.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "schurkit/errors.hpp"

namespace schurkit {

PcPresentation::PcPresentation(std::vector<int> orders)
    : ngens(static_cast<int>(orders.size())),
      relative_orders(std::move(orders)),
      power_relations(ngens),
      conjugate_relations(ngens, std::vector<Word>(ngens)) {
    for (int i = 0; i < ngens; ++i)
        for (int j = i + 1; j < ngens; ++j) conjugate_relations[i][j] = {{j, 1}};
    prime = infer_prime(relative_orders);
}

std::uint64_t PcPresentation::order() const {
    std::uint64_t n = 1;
    for (int r : relative_orders) {
        if (r <= 0 || n > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(r))
            throw ValidationError("group order overflows 64 bits");
        n *= static_cast<std::uint64_t>(r);
    }
    return n;
}

static int smallest_prime_factor(int n) {
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

std::optional<int> infer_prime(const std::vector<int>& orders) {
    std::optional<int> p;
    for (int r : orders) {
        if (r < 2) return std::nullopt;
        int q = smallest_prime_factor(r);
        int m = r;
        while (m % q == 0) m /= q;
        if (m != 1) return std::nullopt;
        if (p && *p != q) return std::nullopt;
        p = q;
    }
    return p;
}

static void check_relation_word(const PcPresentation& pcp, const Word& w, int above,
                                const std::string& what) {
    for (const Letter& l : w) {
        if (l.gen < 0 || l.gen >= pcp.ngens)
            throw ValidationError(what + ": generator index " + std::to_string(l.gen + 1) +
                                  " out of range");
        if (l.gen <= above)
            throw ValidationError(what + ": generator g" + std::to_string(l.gen + 1) +
                                  " must come after g" + std::to_string(above + 1));
        if (l.exp < 0 || l.exp >= pcp.relative_orders[l.gen])
            throw ValidationError(what + ": exponent " + std::to_string(l.exp) + " of g" +
                                  std::to_string(l.gen + 1) + " outside [0, " +
                                  std::to_string(pcp.relative_orders[l.gen]) + ")");
    }
}

void validate(const PcPresentation& pcp) {
    const auto n = static_cast<std::size_t>(pcp.ngens);
    if (pcp.ngens < 0) throw ValidationError("negative generator count");
    if (pcp.relative_orders.size() != n || pcp.power_relations.size() != n ||
        pcp.conjugate_relations.size() != n)
        throw ValidationError("relation tables do not match the generator count");
    for (int i = 0; i < pcp.ngens; ++i) {
        if (pcp.relative_orders[i] < 2)
            throw ValidationError("relative order of g" + std::to_string(i + 1) + " must be at least 2");
        if (pcp.conjugate_relations[i].size() != n)
            throw ValidationError("conjugate relation table has the wrong shape");
    }
    for (int i = 0; i < pcp.ngens; ++i) {
        check_relation_word(pcp, pcp.power_relations[i], i, "pow " + std::to_string(i + 1));
        for (int j = i + 1; j < pcp.ngens; ++j)
            check_relation_word(pcp, pcp.conjugate_relations[i][j], i,
                                "conj " + std::to_string(i + 1) + " " + std::to_string(j + 1));
    }
    pcp.order();
}

namespace {

struct Token {
    enum Kind { Ident, Int, Star, Caret, Arrow, End, Eof } kind;
    std::string text;
    std::int64_t value = 0;
    int line = 0;
    int col = 0;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t t = 0; t < k; ++t) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') advance(1);
        } else if (c == '\n' || c == ';') {
            out.push_back({Token::End, std::string(1, c), 0, line, col});
            advance(1);
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
        } else if (c == '*') {
            out.push_back({Token::Star, "*", 0, line, col});
            advance(1);
        } else if (c == '^') {
            out.push_back({Token::Caret, "^", 0, line, col});
            advance(1);
        } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            out.push_back({Token::Arrow, "->", 0, line, col});
            advance(2);
        } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i + (c == '-' ? 1 : 0);
            if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j])))
                throw ParseError("unexpected '-'", line, col);
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            std::string text(s.substr(i, j - i));
            std::int64_t v = 0;
            try {
                v = std::stoll(text);
            } catch (const std::out_of_range&) {
                throw ParseError("integer out of range", line, col);
            }
            out.push_back({Token::Int, text, v, line, col});
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Ident, std::string(s.substr(i, j - i)), 0, line, col});
            advance(j - i);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }
    out.push_back({Token::End, "", 0, line, col});
    out.push_back({Token::Eof, "", 0, line, col});
    return out;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    PcPresentation run() {
        PcPresentation pcp;
        bool have_gens = false, have_orders = false;
        std::vector<bool> pow_set;
        std::vector<std::vector<bool>> conj_set;
        while (peek().kind != Token::Eof) {
            if (peek().kind == Token::End) {
                ++pos_;
                continue;
            }
            const Token& kw = expect(Token::Ident, "statement keyword");
            if (kw.text == "gens") {
                if (have_gens) fail(kw, "duplicate 'gens' statement");
                const Token& n = expect(Token::Int, "generator count");
                if (n.value < 0 || n.value > 4096) fail(n, "generator count out of range");
                pcp.ngens = static_cast<int>(n.value);
                have_gens = true;
            } else if (kw.text == "orders") {
                if (!have_gens) fail(kw, "'orders' before 'gens'");
                if (have_orders) fail(kw, "duplicate 'orders' statement");
                std::vector<int> orders;
                while (peek().kind == Token::Int) {
                    const Token& r = next();
                    if (r.value < 2 || r.value > 1 << 20) fail(r, "relative order must be in [2, 2^20]");
                    orders.push_back(static_cast<int>(r.value));
                }
                if (static_cast<int>(orders.size()) != pcp.ngens)
                    fail(kw, "expected " + std::to_string(pcp.ngens) + " relative orders, got " +
                                 std::to_string(orders.size()));
                pcp = PcPresentation(std::move(orders));
                pow_set.assign(pcp.ngens, false);
                conj_set.assign(pcp.ngens, std::vector<bool>(pcp.ngens, false));
                have_orders = true;
            } else if (kw.text == "pow") {
                require_header(kw, have_orders);
                if (peek().kind == Token::Star) {
                    const Token& star = next();
                    expect(Token::Arrow, "'->'");
                    std::size_t word_pos = pos_;
                    for (int i = 0; i < pcp.ngens; ++i) {
                        pos_ = word_pos;
                        if (pow_set[i]) fail(star, "duplicate power relation for g" + std::to_string(i + 1));
                        pcp.power_relations[i] = parse_word(pcp, i);
                        pow_set[i] = true;
                    }
                } else {
                    int i = parse_index(pcp);
                    const Token& at = toks_[pos_ - 1];
                    expect(Token::Arrow, "'->'");
                    if (pow_set[i]) fail(at, "duplicate power relation for g" + std::to_string(i + 1));
                    pcp.power_relations[i] = parse_word(pcp, i);
                    pow_set[i] = true;
                }
            } else if (kw.text == "conj") {
                require_header(kw, have_orders);
                int i = parse_index(pcp);
                int j = parse_index(pcp);
                const Token& at = toks_[pos_ - 1];
                if (i >= j) fail(at, "conj i j requires i < j");
                expect(Token::Arrow, "'->'");
                if (conj_set[i][j]) fail(at, "duplicate conjugate relation");
                pcp.conjugate_relations[i][j] = parse_word(pcp, i);
                conj_set[i][j] = true;
            } else {
                fail(kw, "unknown statement '" + kw.text + "'");
            }
            if (peek().kind != Token::End) fail(peek(), "expected end of statement");
        }
        if (!have_gens) fail(peek(), "missing 'gens' statement");
        if (!have_orders) {
            if (pcp.ngens != 0) fail(peek(), "missing 'orders' statement");
            pcp = PcPresentation(std::vector<int>{});
        }
        return pcp;
    }

  private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] static void fail(const Token& t, const std::string& msg) {
        throw ParseError(msg, t.line, t.col);
    }

    const Token& expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            fail(peek(), "expected " + what + (peek().text.empty() || peek().text == "\n"
                                                   ? std::string()
                                                   : ", got '" + peek().text + "'"));
        return next();
    }

    static void require_header(const Token& kw, bool have_orders) {
        if (!have_orders) fail(kw, "relation before 'orders'");
    }

    int parse_index(const PcPresentation& pcp) {
        const Token& t = expect(Token::Int, "generator index");
        if (t.value < 1 || t.value > pcp.ngens) fail(t, "generator index " + t.text + " out of range");
        return static_cast<int>(t.value - 1);
    }

    Word parse_word(const PcPresentation& pcp, int above) {
        if (peek().kind == Token::Ident && peek().text == "id") {
            next();
            return {};
        }
        Word w;
        while (true) {
            const Token& g = expect(Token::Ident, "generator");
            if (g.text.size() < 2 || g.text[0] != 'g')
                fail(g, "expected generator g<k>, got '" + g.text + "'");
            int k = 0;
            for (std::size_t c = 1; c < g.text.size(); ++c) {
                if (!std::isdigit(static_cast<unsigned char>(g.text[c])))
                    fail(g, "expected generator g<k>, got '" + g.text + "'");
                k = k * 10 + (g.text[c] - '0');
                if (k > 1 << 20) break;
            }
            if (k < 1 || k > pcp.ngens) fail(g, "generator index " + g.text.substr(1) + " out of range");
            int gen = k - 1;
            if (gen <= above)
                fail(g, "relation word may only use generators after g" + std::to_string(above + 1));
            std::int64_t e = 1;
            if (peek().kind == Token::Caret) {
                next();
                const Token& et = expect(Token::Int, "exponent");
                e = et.value;
                if (e < 0 || e >= pcp.relative_orders[gen])
                    fail(et, "exponent " + et.text + " outside [0, " +
                                 std::to_string(pcp.relative_orders[gen]) + ")");
            }
            if (e != 0) w.push_back({gen, e});
            if (peek().kind != Token::Star) break;
            next();
        }
        return w;
    }
};

}  // namespace

PcPresentation parse_pc_presentation(std::string_view text) {
    PcPresentation pcp = Parser(text).run();
    validate(pcp);
    return pcp;
}

PcPresentation read_pc_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_pc_presentation(ss.str());
}

std::string serialize(const PcPresentation& pcp) {
    std::string s = "gens " + std::to_string(pcp.ngens) + ";\norders";
    for (int r : pcp.relative_orders) s += ' ' + std::to_string(r);
    s += ";\n";
    for (int i = 0; i < pcp.ngens; ++i)
        if (!pcp.power_relations[i].empty())
            s += "pow " + std::to_string(i + 1) + " -> " + format_word(pcp.power_relations[i]) + ";\n";
    for (int i = 0; i < pcp.ngens; ++i)
        for (int j = i + 1; j < pcp.ngens; ++j) {
            const Word& w = pcp.conjugate_relations[i][j];
            if (w == Word{{j, 1}}) continue;
            s += "conj " + std::to_string(i + 1) + ' ' + std::to_string(j + 1) + " -> " + format_word(w) + ";\n";
        }
    return s;
}

void FpPresentation::validate() const {
    if (ngens < 0) throw ValidationError("negative generator count");
    if (!generator_labels.empty() && static_cast<int>(generator_labels.size()) != ngens)
        throw ValidationError("generator label count does not match");
    for (const Word& r : relators)
        for (const Letter& l : r)
            if (l.gen < 0 || l.gen >= ngens) throw ValidationError("relator letter out of range");
}

}  // namespace schurkit
