#include "schurkit/free_nilpotent.hpp"

#include "schurkit/errors.hpp"

namespace schurkit {

static std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

MagnusSeries::MagnusSeries(int rank, int max_degree) : rank_(rank), deg_(max_degree), coeffs_(max_degree + 1) {
    for (int k = 0; k <= deg_; ++k) coeffs_[k].assign(ipow(rank, k), 0);
}

MagnusSeries MagnusSeries::one(int rank, int max_degree) {
    MagnusSeries s(rank, max_degree);
    s.coeffs_[0][0] = 1;
    return s;
}

MagnusSeries MagnusSeries::generator(int rank, int max_degree, int i) {
    MagnusSeries s = one(rank, max_degree);
    if (max_degree >= 1) s.coeffs_[1][i] = 1;
    return s;
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& o) const {
    MagnusSeries out(rank_, deg_);
    for (int i = 0; i <= deg_; ++i) {
        const auto& a = coeffs_[i];
        std::vector<std::size_t> nz;
        for (std::size_t u = 0; u < a.size(); ++u)
            if (sgn(a[u])) nz.push_back(u);
        if (nz.empty()) continue;
        for (int j = 0; i + j <= deg_; ++j) {
            const auto& b = o.coeffs_[j];
            auto& c = out.coeffs_[i + j];
            const std::size_t shift = b.size();
            for (std::size_t v = 0; v < b.size(); ++v) {
                if (!sgn(b[v])) continue;
                for (std::size_t u : nz) mpz_addmul(c[u * shift + v].get_mpz_t(), a[u].get_mpz_t(), b[v].get_mpz_t());
            }
        }
    }
    return out;
}

int MagnusSeries::valuation() const {
    for (int k = 1; k <= deg_; ++k)
        for (const auto& x : coeffs_[k])
            if (sgn(x)) return k;
    return deg_ + 1;
}

MagnusSeries MagnusSeries::pow(const mpz_class& e) const {
    if (coeffs_[0][0] != 1) throw InternalError("power of a series without unit constant term");
    MagnusSeries y = *this;
    y.coeffs_[0][0] = 0;
    const int v = y.valuation();
    MagnusSeries out = one(rank_, deg_);
    MagnusSeries yk = one(rank_, deg_);
    mpz_class binom = 1;
    for (int k = 1; k * v <= deg_; ++k) {
        yk = yk * y;
        binom *= e - (k - 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k));
        if (binom == 0) break;
        for (int d = 0; d <= deg_; ++d)
            for (std::size_t u = 0; u < yk.coeffs_[d].size(); ++u)
                if (sgn(yk.coeffs_[d][u]))
                    mpz_addmul(out.coeffs_[d][u].get_mpz_t(), binom.get_mpz_t(), yk.coeffs_[d][u].get_mpz_t());
    }
    return out;
}

MagnusSeries MagnusSeries::inverse() const { return pow(-1); }

MagnusSeries group_commutator(const MagnusSeries& a, const MagnusSeries& b) {
    return a * b * a.inverse() * b.inverse();
}

MagnusSeries group_conjugate(const MagnusSeries& a, const MagnusSeries& b) { return a * b * a.inverse(); }

// Solves P = sum_b e_b L(b) over the basic commutators of one weight, where
// L(b) is the lowest-degree part of the image of b.
struct FreeNilpotentGroup::WeightSolver {
    std::size_t first = 0, count = 0;
    std::vector<std::vector<mpz_class>> columns;     // L(b), length r^w each
    std::vector<std::size_t> pivot_rows;
    std::vector<std::vector<mpq_class>> inverse;     // count x count

    std::vector<mpz_class> solve(const std::vector<mpz_class>& p) const {
        std::vector<mpz_class> e(count);
        for (std::size_t i = 0; i < count; ++i) {
            mpq_class s = 0;
            for (std::size_t j = 0; j < count; ++j) s += inverse[i][j] * p[pivot_rows[j]];
            s.canonicalize();
            if (s.get_den() != 1) throw InternalError("Hall coordinate is not an integer");
            e[i] = s.get_num();
        }
        for (std::size_t row = 0; row < p.size(); ++row) {
            mpz_class s = 0;
            for (std::size_t i = 0; i < count; ++i) s += columns[i][row] * e[i];
            if (s != p[row]) throw InternalError("series is not in the image of the free nilpotent group");
        }
        return e;
    }
};

FreeNilpotentGroup::FreeNilpotentGroup(int rank, int max_class) : basis_(hall_basis(rank, max_class)) {
    const int r = rank, c = max_class;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const BasicCommutator& b = basis_.elements[i];
        if (b.generator >= 0)
            basic_series_.push_back(MagnusSeries::generator(r, c, b.generator));
        else
            basic_series_.push_back(group_commutator(basic_series_[b.left], basic_series_[b.right]));
    }
    solvers_.resize(c + 1);
    for (int w = 1; w <= c; ++w) {
        auto s = std::make_shared<WeightSolver>();
        s->first = basis_.weight_begin[w];
        s->count = basis_.count(w);
        for (std::size_t i = 0; i < s->count; ++i) s->columns.push_back(basic_series_[s->first + i].degree(w));
        const std::size_t rows = ipow(r, w);
        // greedy choice of independent rows
        std::vector<std::vector<mpq_class>> echelon;
        std::vector<std::size_t> lead;
        for (std::size_t row = 0; row < rows && s->pivot_rows.size() < s->count; ++row) {
            std::vector<mpq_class> v(s->count);
            for (std::size_t i = 0; i < s->count; ++i) v[i] = s->columns[i][row];
            for (std::size_t k = 0; k < echelon.size(); ++k) {
                if (sgn(v[lead[k]]) == 0) continue;
                mpq_class f = v[lead[k]] / echelon[k][lead[k]];
                for (std::size_t i = 0; i < s->count; ++i) v[i] -= f * echelon[k][i];
            }
            std::size_t l = 0;
            while (l < s->count && sgn(v[l]) == 0) ++l;
            if (l == s->count) continue;
            echelon.push_back(v);
            lead.push_back(l);
            s->pivot_rows.push_back(row);
        }
        if (s->pivot_rows.size() != s->count) throw InternalError("basic commutators are not independent");
        // invert the square submatrix by Gauss-Jordan
        const std::size_t n = s->count;
        std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t i = 0; i < n; ++i) m[a][i] = s->columns[i][s->pivot_rows[a]];
            m[a][n + a] = 1;
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (sgn(m[piv][col]) == 0) ++piv;
            std::swap(m[piv], m[col]);
            mpq_class inv = 1 / m[col][col];
            for (auto& x : m[col]) x *= inv;
            for (std::size_t a = 0; a < n; ++a) {
                if (a == col || sgn(m[a][col]) == 0) continue;
                mpq_class f = m[a][col];
                for (std::size_t i = 0; i < 2 * n; ++i) m[a][i] -= f * m[col][i];
            }
        }
        s->inverse.assign(n, std::vector<mpq_class>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t i = 0; i < n; ++i) s->inverse[a][i] = m[a][n + i];
        solvers_[w] = std::move(s);
    }
}

const FreeNilpotentGroup::WeightSolver& FreeNilpotentGroup::solver(int weight) const { return *solvers_[weight]; }

MagnusSeries FreeNilpotentGroup::series_one() const { return MagnusSeries::one(rank(), max_class()); }

MagnusSeries FreeNilpotentGroup::series_generator(int i) const {
    if (i < 0 || i >= rank()) throw ValidationError("generator index out of range");
    return MagnusSeries::generator(rank(), max_class(), i);
}

FreeNilElement FreeNilpotentGroup::identity() const { return {std::vector<mpz_class>(basis_.size(), 0)}; }

FreeNilElement FreeNilpotentGroup::generator(int i) const {
    if (i < 0 || i >= rank()) throw ValidationError("generator index out of range");
    FreeNilElement e = identity();
    e.exponents[i] = 1;
    return e;
}

MagnusSeries FreeNilpotentGroup::series(const FreeNilElement& a) const {
    if (a.exponents.size() != basis_.size()) throw ValidationError("element of a different free nilpotent group");
    MagnusSeries s = series_one();
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (sgn(a.exponents[i])) s = s * basic_series_[i].pow(a.exponents[i]);
    return s;
}

FreeNilElement FreeNilpotentGroup::coordinates(const MagnusSeries& s) const {
    if (s.rank() != rank() || s.max_degree() != max_class()) throw ValidationError("series of a different algebra");
    FreeNilElement out = identity();
    MagnusSeries cur = s;
    if (cur.degree(0)[0] != 1) throw InternalError("series without unit constant term");
    for (int w = 1; w <= max_class(); ++w) {
        for (int d = 1; d < w; ++d)
            for (const auto& x : cur.degree(d))
                if (sgn(x)) throw InternalError("peeling left a lower-degree residue");
        const WeightSolver& sv = solver(w);
        std::vector<mpz_class> e = sv.solve(cur.degree(w));
        MagnusSeries layer = series_one();
        for (std::size_t i = 0; i < sv.count; ++i) {
            out.exponents[sv.first + i] = e[i];
            if (sgn(e[i])) layer = layer * basic_series_[sv.first + i].pow(e[i]);
        }
        cur = layer.inverse() * cur;
    }
    if (!(cur == series_one())) throw InternalError("peeling did not reach the identity");
    return out;
}

FreeNilElement FreeNilpotentGroup::multiply(const FreeNilElement& a, const FreeNilElement& b) const {
    return coordinates(series(a) * series(b));
}

FreeNilElement FreeNilpotentGroup::invert(const FreeNilElement& a) const { return coordinates(series(a).inverse()); }

FreeNilElement FreeNilpotentGroup::power(const FreeNilElement& a, const mpz_class& e) const {
    return coordinates(series(a).pow(e));
}

FreeNilElement FreeNilpotentGroup::commutator(const FreeNilElement& a, const FreeNilElement& b) const {
    return coordinates(group_commutator(series(a), series(b)));
}

}  // namespace schurkit
