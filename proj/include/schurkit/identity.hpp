#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "schurkit/free_nilpotent.hpp"
#include "schurkit/word.hpp"

namespace schurkit {

// Integer combination sum_k c_k C(n, k) of binomials in the parameter n.
// A constant is stored with k = 0 and a bare n with k = 1.
struct ExponentExpr {
    std::vector<std::pair<mpz_class, int>> terms;  // (coefficient, k), k ascending, no zero coefficients

    static ExponentExpr constant(long c);
    mpz_class eval(const mpz_class& n) const;
    int degree() const;  // -1 for the zero expression
    bool is_zero() const { return terms.empty(); }
    bool is_constant() const { return degree() <= 0; }
    std::string str() const;
    void add(const mpz_class& coeff, int k);
};

// Symbolic group word over named generators.
struct Expr {
    enum class Kind { identity, symbol, product, bracket, power, conjugate };
    Kind kind = Kind::identity;
    int symbol = -1;              // for Kind::symbol
    std::vector<Expr> children;   // product factors; bracket entries (right-normed); power base; conjugator, target
    ExponentExpr exponent;        // for Kind::power

    bool uses_parameter() const;
};

// lhs == rhs in the free nilpotent group of the given class on the template's symbols.
struct IdentityTemplate {
    std::string label;
    std::vector<std::string> symbols;  // sorted; symbol i is generator i
    Expr lhs, rhs;
    int nil_class = 1;
    std::string source;                // the statement text

    int rank() const { return static_cast<int>(symbols.size()); }
    bool uses_parameter() const { return lhs.uses_parameter() || rhs.uses_parameter(); }
};

constexpr int max_free_class = 10;

// One template per statement `label: lhs == rhs @ class c`; statements end at
// a newline, `#` starts a comment.
std::vector<IdentityTemplate> parse_identities(const std::string& text);
std::vector<IdentityTemplate> read_identity_file(const std::string& path);

// Parses a single group expression; identifiers are mapped to generators in
// the order given, unknown names are an error.
Expr parse_expr(const std::string& text, const std::vector<std::string>& symbols);

// Collected normal form of an expression with the parameter set to n.
FreeNilElement collect(const Expr& e, const FreeNilpotentGroup& f, const mpz_class& n = 0);
FreeNilElement collect(const std::string& text, const std::vector<std::string>& symbols, int nil_class);
MagnusSeries evaluate(const Expr& e, const FreeNilpotentGroup& f, const mpz_class& n);

// Upper bound on the degree in n of every Hall coordinate of either side.
int degree_bound(const IdentityTemplate& t);
// Default sample points 0 .. class + 2.
std::vector<long> default_points(const IdentityTemplate& t);

struct PointVerdict {
    long n = 0;
    bool equal = false;
    std::optional<std::size_t> first_mismatch;  // Hall basis index
    std::string mismatch_label;
    std::vector<mpz_class> lhs, rhs;             // full collected vectors, filled on mismatch
};

struct VerificationReport {
    std::string label;
    int rank = 0;
    int nil_class = 0;
    bool parametric = false;
    int degree_bound = 0;
    std::string argument;
    std::vector<PointVerdict> points;
    std::optional<bool> free_group_equal;  // parameter-free templates only
    bool all_equal = false;
    bool certified = false;  // all_equal and enough distinct points for the degree bound
};

// Throws ValidationError when a parametric template gets fewer than class + 2
// distinct nonnegative points.
VerificationReport verify_identity(const IdentityTemplate& t, const std::vector<long>& points);
VerificationReport verify_identity(const IdentityTemplate& t);

// Free-group word of a parameter-free expression (no truncation).
Word expand_word(const Expr& e);

std::string format_report(const VerificationReport& r);

}  // namespace schurkit
