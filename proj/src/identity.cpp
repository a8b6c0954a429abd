#include "schurkit/identity.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "schurkit/errors.hpp"

namespace schurkit {

// ---------------------------------------------------------------- exponents

ExponentExpr ExponentExpr::constant(long c) {
    ExponentExpr e;
    e.add(c, 0);
    return e;
}

void ExponentExpr::add(const mpz_class& coeff, int k) {
    auto it = std::lower_bound(terms.begin(), terms.end(), k, [](const auto& t, int v) { return t.second < v; });
    if (it != terms.end() && it->second == k) {
        it->first += coeff;
        if (it->first == 0) terms.erase(it);
    } else if (coeff != 0) {
        terms.insert(it, {coeff, k});
    }
}

static mpz_class binomial(const mpz_class& n, int k) {
    mpz_class r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - (i - 1);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

mpz_class ExponentExpr::eval(const mpz_class& n) const {
    mpz_class s = 0;
    for (const auto& [c, k] : terms) s += c * binomial(n, k);
    return s;
}

int ExponentExpr::degree() const { return terms.empty() ? -1 : terms.back().second; }

std::string ExponentExpr::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [c, k] : terms) {
        mpz_class a = abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? "-" : "+";
        }
        if (k == 0) {
            s += a.get_str();
            continue;
        }
        if (a != 1) s += a.get_str() + "*";
        s += k == 1 ? std::string("n") : "C(n," + std::to_string(k) + ")";
    }
    return s;
}

bool Expr::uses_parameter() const {
    if (kind == Kind::power && !exponent.is_constant()) return true;
    for (const Expr& c : children)
        if (c.uses_parameter()) return true;
    return false;
}

// ------------------------------------------------------------------- lexing

namespace {

enum class Tok { ident, integer, sym, end };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const int l = line, cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '.'))
                ++j;
            out.push_back({Tok::ident, text.substr(i, j - i), l, cl});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::integer, text.substr(i, j - i), l, cl});
            advance(j - i);
        } else if (c == '=' && i + 1 < text.size() && text[i + 1] == '=') {
            out.push_back({Tok::sym, "==", l, cl});
            advance(2);
        } else if (std::string("()[]{},*^+-@:").find(c) != std::string::npos) {
            out.push_back({Tok::sym, std::string(1, c), l, cl});
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
        }
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

class Parser {
  public:
    Parser(std::vector<Token> toks, std::vector<std::string> names, bool open_names)
        : t_(std::move(toks)), names_(std::move(names)), open_(open_names) {}

    const std::vector<std::string>& names() const { return names_; }
    bool at_end() const { return peek().kind == Tok::end; }
    const Token& peek(std::size_t k = 0) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
    bool is(const char* s, std::size_t k = 0) const { return peek(k).kind == Tok::sym && peek(k).text == s; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().col); }

    void expect(const char* s) {
        if (!is(s)) fail(std::string("expected '") + s + "'");
        ++p_;
    }
    const Token& next() { return t_[p_++]; }

    Expr product() {
        std::vector<Expr> fs;
        fs.push_back(factor());
        for (;;) {
            if (is("*")) {
                ++p_;
                fs.push_back(factor());
            } else if (starts_factor()) {
                fs.push_back(factor());
            } else {
                break;
            }
        }
        if (fs.size() == 1) return std::move(fs[0]);
        Expr e;
        e.kind = Expr::Kind::product;
        e.children = std::move(fs);
        return e;
    }

    ExponentExpr linear() {
        ExponentExpr e;
        bool neg = false;
        if (is("+") || is("-")) neg = next().text == "-";
        for (;;) {
            ExponentExpr t = lin_term();
            for (auto& [c, k] : t.terms) e.add(neg ? -c : c, k);
            if (is("+") || is("-")) {
                neg = next().text == "-";
            } else {
                break;
            }
        }
        return e;
    }

    std::string statement_label() {
        if (peek().kind == Tok::ident && is(":", 1)) {
            std::string l = next().text;
            ++p_;
            return l;
        }
        return {};
    }

    int class_suffix() {
        expect("@");
        if (peek().kind != Tok::ident || peek().text != "class") fail("expected 'class'");
        ++p_;
        if (peek().kind != Tok::integer) fail("expected the nilpotency class");
        return std::stoi(next().text);
    }

  private:
    std::vector<Token> t_;
    std::size_t p_ = 0;
    std::vector<std::string> names_;
    bool open_;

    bool starts_factor() const {
        const Token& k = peek();
        if (k.kind == Tok::ident) return k.text != "n" && k.text != "C";
        return k.kind == Tok::sym && (k.text == "(" || k.text == "[" || k.text == "^");
    }

    Expr symbol_expr() {
        const Token& k = peek();
        if (k.kind != Tok::ident) fail("expected a generator name");
        if (k.text == "n" || k.text == "C") fail("'" + k.text + "' is reserved for exponents");
        ++p_;
        Expr e;
        if (k.text == "id") return e;
        auto it = std::find(names_.begin(), names_.end(), k.text);
        if (it == names_.end()) {
            if (!open_) throw ParseError("unknown generator '" + k.text + "'", k.line, k.col);
            names_.push_back(k.text);
            it = names_.end() - 1;
        }
        e.kind = Expr::Kind::symbol;
        e.symbol = static_cast<int>(it - names_.begin());
        return e;
    }

    Expr primary() {
        if (is("(")) {
            ++p_;
            Expr e = product();
            expect(")");
            return e;
        }
        if (is("[")) {
            ++p_;
            Expr e;
            e.kind = Expr::Kind::bracket;
            e.children.push_back(product());
            while (is(",")) {
                ++p_;
                e.children.push_back(product());
            }
            if (e.children.size() < 2) fail("a bracket needs at least two entries");
            expect("]");
            return e;
        }
        return symbol_expr();
    }

    bool exponent_follows() const {
        if (!is("^")) return false;
        const Token& k = peek(1);
        if (k.kind == Tok::integer) return true;
        if (k.kind == Tok::ident) return k.text == "n";
        return k.kind == Tok::sym && (k.text == "-" || k.text == "{");
    }

    ExponentExpr exponent() {
        ++p_;  // '^'
        if (is("{")) {
            ++p_;
            ExponentExpr e = linear();
            expect("}");
            return e;
        }
        if (is("-")) {
            ++p_;
            if (peek().kind != Tok::integer) fail("expected an integer exponent");
            ExponentExpr e;
            e.add(-mpz_class(next().text), 0);
            return e;
        }
        if (peek().kind == Tok::integer) {
            ExponentExpr e;
            e.add(mpz_class(next().text), 0);
            return e;
        }
        ++p_;  // n
        ExponentExpr e;
        e.add(1, 1);
        return e;
    }

    Expr factor() {
        if (is("^")) {
            ++p_;
            Expr by;
            if (is("{")) {
                ++p_;
                by = product();
                expect("}");
            } else {
                by = symbol_expr();
            }
            Expr target = factor();
            Expr e;
            e.kind = Expr::Kind::conjugate;
            e.children.push_back(std::move(by));
            e.children.push_back(std::move(target));
            return e;
        }
        if (!starts_factor()) fail("expected a group expression");
        Expr e = primary();
        while (exponent_follows()) {
            Expr p;
            p.kind = Expr::Kind::power;
            p.exponent = exponent();
            p.children.push_back(std::move(e));
            e = std::move(p);
        }
        return e;
    }

    ExponentExpr lin_factor() {
        if (peek().kind == Tok::integer) {
            ExponentExpr e;
            e.add(mpz_class(next().text), 0);
            return e;
        }
        if (peek().kind == Tok::ident && peek().text == "n") {
            ++p_;
            ExponentExpr e;
            e.add(1, 1);
            return e;
        }
        if (peek().kind == Tok::ident && peek().text == "C") {
            ++p_;
            expect("(");
            if (!(peek().kind == Tok::ident && peek().text == "n")) fail("expected 'n'");
            ++p_;
            expect(",");
            if (peek().kind != Tok::integer) fail("expected an integer");
            const int k = std::stoi(next().text);
            expect(")");
            ExponentExpr e;
            e.add(1, k);
            return e;
        }
        if (is("(")) {
            ++p_;
            ExponentExpr e = linear();
            expect(")");
            return e;
        }
        fail("expected an exponent term");
    }

    ExponentExpr lin_term() {
        ExponentExpr e = lin_factor();
        while (is("*")) {
            ++p_;
            ExponentExpr f = lin_factor();
            if (!e.is_constant() && !f.is_constant()) fail("exponent must be linear in the binomials");
            const ExponentExpr& c = e.is_constant() ? e : f;
            const ExponentExpr& v = e.is_constant() ? f : e;
            const mpz_class s = c.is_zero() ? mpz_class(0) : c.terms[0].first;
            ExponentExpr r;
            for (const auto& [a, k] : v.terms) r.add(a * s, k);
            e = std::move(r);
        }
        return e;
    }
};

void remap(Expr& e, const std::vector<int>& to) {
    if (e.kind == Expr::Kind::symbol) e.symbol = to[e.symbol];
    for (Expr& c : e.children) remap(c, to);
}

}  // namespace

std::vector<IdentityTemplate> parse_identities(const std::string& text) {
    std::vector<IdentityTemplate> out;
    Parser ps(lex(text), {}, true);
    while (!ps.at_end()) {
        const Token start = ps.peek();
        IdentityTemplate t;
        t.label = ps.statement_label();
        t.lhs = ps.product();
        ps.expect("==");
        t.rhs = ps.product();
        t.nil_class = ps.class_suffix();
        if (t.nil_class < 1) throw ParseError("class must be positive", start.line, start.col);
        if (t.label.empty()) t.label = "identity" + std::to_string(out.size() + 1);
        out.push_back(std::move(t));
    }
    // Symbols are shared across a file's statements only through their names;
    // each template gets its own alphabetical generator order.
    const std::vector<std::string>& all = ps.names();
    for (IdentityTemplate& t : out) {
        std::set<int> used;
        auto collect_used = [&](auto&& self, const Expr& e) -> void {
            if (e.kind == Expr::Kind::symbol) used.insert(e.symbol);
            for (const Expr& c : e.children) self(self, c);
        };
        collect_used(collect_used, t.lhs);
        collect_used(collect_used, t.rhs);
        std::vector<std::pair<std::string, int>> order;
        for (int u : used) order.push_back({all[u], u});
        std::sort(order.begin(), order.end());
        std::vector<int> to(all.size(), -1);
        for (std::size_t i = 0; i < order.size(); ++i) {
            t.symbols.push_back(order[i].first);
            to[order[i].second] = static_cast<int>(i);
        }
        remap(t.lhs, to);
        remap(t.rhs, to);
        if (t.symbols.empty()) throw ValidationError("identity '" + t.label + "' has no generators");
    }
    return out;
}

std::vector<IdentityTemplate> read_identity_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_identities(ss.str());
}

Expr parse_expr(const std::string& text, const std::vector<std::string>& symbols) {
    Parser p(lex(text), symbols, false);
    Expr e = p.product();
    if (!p.at_end()) p.fail("trailing input");
    return e;
}

// --------------------------------------------------------------- evaluation

MagnusSeries evaluate(const Expr& e, const FreeNilpotentGroup& f, const mpz_class& n) {
    switch (e.kind) {
        case Expr::Kind::identity:
            return f.series_one();
        case Expr::Kind::symbol:
            return f.series_generator(e.symbol);
        case Expr::Kind::product: {
            MagnusSeries s = evaluate(e.children[0], f, n);
            for (std::size_t i = 1; i < e.children.size(); ++i) s = s * evaluate(e.children[i], f, n);
            return s;
        }
        case Expr::Kind::bracket: {
            MagnusSeries v = evaluate(e.children.back(), f, n);
            for (std::size_t i = e.children.size() - 1; i-- > 0;) v = group_commutator(evaluate(e.children[i], f, n), v);
            return v;
        }
        case Expr::Kind::power:
            return evaluate(e.children[0], f, n).pow(e.exponent.eval(n));
        case Expr::Kind::conjugate:
            return group_conjugate(evaluate(e.children[0], f, n), evaluate(e.children[1], f, n));
    }
    throw InternalError("unhandled expression kind");
}

static void check_class(int c) {
    if (c < 1) throw ValidationError("class must be positive");
    if (c > max_free_class)
        throw ResourceError("class " + std::to_string(c) + " exceeds the supported maximum " + std::to_string(max_free_class));
}

FreeNilElement collect(const Expr& e, const FreeNilpotentGroup& f, const mpz_class& n) {
    return f.coordinates(evaluate(e, f, n));
}

FreeNilElement collect(const std::string& text, const std::vector<std::string>& symbols, int nil_class) {
    check_class(nil_class);
    FreeNilpotentGroup f(static_cast<int>(symbols.size()), nil_class);
    return collect(parse_expr(text, symbols), f);
}

Word expand_word(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::identity:
            return {};
        case Expr::Kind::symbol:
            return {{e.symbol, 1}};
        case Expr::Kind::product: {
            Word w;
            for (const Expr& c : e.children) w = free_reduce(concat(w, expand_word(c)));
            return w;
        }
        case Expr::Kind::bracket: {
            Word v = expand_word(e.children.back());
            for (std::size_t i = e.children.size() - 1; i-- > 0;) v = commutator_word(expand_word(e.children[i]), v);
            return v;
        }
        case Expr::Kind::power: {
            if (!e.exponent.is_constant()) throw ValidationError("cannot expand a parametric power");
            const mpz_class k = e.exponent.eval(0);
            if (abs(k) > 64) throw ResourceError("power too large for free-group expansion");
            Word base = expand_word(e.children[0]);
            if (k < 0) base = inverse(base);
            Word w;
            for (long i = 0, m = mpz_class(abs(k)).get_si(); i < m; ++i) w = free_reduce(concat(w, base));
            return w;
        }
        case Expr::Kind::conjugate:
            return conjugate_word(expand_word(e.children[0]), expand_word(e.children[1]));
    }
    throw InternalError("unhandled expression kind");
}

// --------------------------------------------------------------- degree bound

namespace {

// rho: every Hall coordinate of weight w is a polynomial in n of degree <= rho*w.
// mu: the expression lies in gamma_mu of the free group (mu > c means trivial).
struct Growth {
    mpq_class rho;
    int mu;
};

Growth growth(const Expr& e, int c) {
    switch (e.kind) {
        case Expr::Kind::identity:
            return {0, c + 1};
        case Expr::Kind::symbol:
            return {0, 1};
        case Expr::Kind::product: {
            Growth g{0, c + 1};
            for (const Expr& x : e.children) {
                Growth h = growth(x, c);
                if (h.mu > c) continue;
                g.rho = std::max(g.rho, h.rho);
                g.mu = std::min(g.mu, h.mu);
            }
            return g;
        }
        case Expr::Kind::bracket: {
            Growth v = growth(e.children.back(), c);
            for (std::size_t i = e.children.size() - 1; i-- > 0;) {
                Growth x = growth(e.children[i], c);
                v = {std::max(x.rho, v.rho), std::min(c + 1, x.mu + v.mu)};
            }
            return v.mu > c ? Growth{0, c + 1} : v;
        }
        case Expr::Kind::power: {
            Growth b = growth(e.children[0], c);
            if (b.mu > c || e.exponent.is_zero()) return {0, c + 1};
            return {b.rho + mpq_class(std::max(0, e.exponent.degree()), b.mu), b.mu};
        }
        case Expr::Kind::conjugate: {
            Growth x = growth(e.children[0], c), t = growth(e.children[1], c);
            if (t.mu > c) return {0, c + 1};
            return {std::max(x.mu > c ? mpq_class(0) : x.rho, t.rho), t.mu};
        }
    }
    throw InternalError("unhandled expression kind");
}

std::string join_points(const std::vector<long>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + std::to_string(pts[i]);
    return s;
}

}  // namespace

int degree_bound(const IdentityTemplate& t) {
    const int c = t.nil_class;
    mpq_class rho = std::max(growth(t.lhs, c).rho, growth(t.rhs, c).rho);
    mpz_class d = rho.get_num() * c / rho.get_den();  // floor, rho >= 0
    return static_cast<int>(d.get_si());
}

std::vector<long> default_points(const IdentityTemplate& t) {
    std::vector<long> pts;
    for (long i = 0; i <= t.nil_class + 2; ++i) pts.push_back(i);
    return pts;
}

VerificationReport verify_identity(const IdentityTemplate& t) { return verify_identity(t, default_points(t)); }

VerificationReport verify_identity(const IdentityTemplate& t, const std::vector<long>& points) {
    check_class(t.nil_class);
    VerificationReport r;
    r.label = t.label;
    r.rank = t.rank();
    r.nil_class = t.nil_class;
    r.parametric = t.uses_parameter();
    FreeNilpotentGroup f(t.rank(), t.nil_class);

    auto compare = [&](long n) {
        PointVerdict v;
        v.n = n;
        FreeNilElement a = collect(t.lhs, f, n), b = collect(t.rhs, f, n);
        v.equal = a == b;
        if (!v.equal) {
            for (std::size_t i = 0; i < a.exponents.size(); ++i)
                if (a.exponents[i] != b.exponents[i]) {
                    v.first_mismatch = i;
                    v.mismatch_label = f.basis().label(i, t.symbols);
                    break;
                }
            v.lhs = a.exponents;
            v.rhs = b.exponents;
        }
        return v;
    };

    if (!r.parametric) {
        r.degree_bound = 0;
        r.points.push_back(compare(0));
        r.all_equal = r.points[0].equal;
        r.free_group_equal = free_reduce(expand_word(t.lhs)) == free_reduce(expand_word(t.rhs));
        r.certified = r.all_equal;
        r.argument = "no parameter: a single collection in class " + std::to_string(t.nil_class) +
                     ", plus free reduction of both sides in the free group";
        return r;
    }

    std::set<long> distinct;
    for (long n : points) {
        if (n < 0) throw ValidationError("sample points must be nonnegative");
        distinct.insert(n);
    }
    if (static_cast<int>(distinct.size()) < t.nil_class + 2)
        throw ValidationError("need at least " + std::to_string(t.nil_class + 2) + " distinct sample points, got " +
                              std::to_string(distinct.size()));
    r.degree_bound = degree_bound(t);
    r.all_equal = true;
    for (long n : distinct) {
        r.points.push_back(compare(n));
        r.all_equal = r.all_equal && r.points.back().equal;
    }
    r.certified = r.all_equal && static_cast<int>(distinct.size()) >= r.degree_bound + 1;
    r.argument = "Hall coordinates of a product are weighted-homogeneous polynomials in the coordinates of the "
                 "factors, so every coordinate of either side is a polynomial in n of degree at most " +
                 std::to_string(r.degree_bound) + "; agreement at " + std::to_string(distinct.size()) +
                 " distinct points {" + join_points({distinct.begin(), distinct.end()}) + "} " +
                 (static_cast<int>(distinct.size()) >= r.degree_bound + 1 ? "forces equality for every integer n"
                                                                           : "is not enough to certify it");
    return r;
}

std::string format_report(const VerificationReport& r) {
    std::ostringstream os;
    os << r.label << " (rank " << r.rank << ", class " << r.nil_class << "): "
       << (r.certified ? "holds" : r.all_equal ? "uncertified" : "FAILS") << "\n";
    if (r.free_group_equal) os << "  free group: " << (*r.free_group_equal ? "equal" : "different") << "\n";
    for (const PointVerdict& v : r.points) {
        if (r.parametric) os << "  n=" << v.n << ": ";
        else os << "  ";
        os << (v.equal ? "equal" : "differs") << "\n";
        if (!v.equal) {
            os << "    first difference at basis element " << *v.first_mismatch << " " << v.mismatch_label << "\n";
            os << "    lhs:";
            for (const auto& x : v.lhs) os << " " << x.get_str();
            os << "\n    rhs:";
            for (const auto& x : v.rhs) os << " " << x.get_str();
            os << "\n";
        }
    }
    os << "  " << r.argument << "\n";
    return os.str();
}

}  // namespace schurkit
