#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "schurkit/hall_basis.hpp"

namespace schurkit {

// Element of Z<X_1..X_r> truncated above degree c; coefficients stored by
// degree, monomials encoded base r with the first letter most significant.
class MagnusSeries {
  public:
    MagnusSeries(int rank, int max_degree);
    static MagnusSeries one(int rank, int max_degree);
    // 1 + X_i
    static MagnusSeries generator(int rank, int max_degree, int i);

    int rank() const { return rank_; }
    int max_degree() const { return deg_; }
    std::vector<mpz_class>& degree(int k) { return coeffs_[k]; }
    const std::vector<mpz_class>& degree(int k) const { return coeffs_[k]; }
    bool operator==(const MagnusSeries& o) const { return coeffs_ == o.coeffs_; }

    MagnusSeries operator*(const MagnusSeries& o) const;
    // Requires constant term 1.
    MagnusSeries inverse() const;
    // (1 + Y)^e = sum_k C(e, k) Y^k; exact for every integer e.
    MagnusSeries pow(const mpz_class& e) const;
    // lowest k >= 1 with a nonzero degree-k part, or max_degree + 1
    int valuation() const;

  private:
    int rank_;
    int deg_;
    std::vector<std::vector<mpz_class>> coeffs_;
};

MagnusSeries group_commutator(const MagnusSeries& a, const MagnusSeries& b);  // a b a^-1 b^-1
MagnusSeries group_conjugate(const MagnusSeries& a, const MagnusSeries& b);   // a b a^-1

// Hall-basis normal form b_1^{e_1} b_2^{e_2} ... of the free nilpotent group.
struct FreeNilElement {
    std::vector<mpz_class> exponents;
    bool operator==(const FreeNilElement&) const = default;
};

// The free nilpotent group of rank r and class c, computed through the Magnus
// embedding x_i -> 1 + X_i, which is faithful modulo degree c + 1.
class FreeNilpotentGroup {
  public:
    FreeNilpotentGroup(int rank, int max_class);

    int rank() const { return basis_.rank; }
    int max_class() const { return basis_.max_class; }
    const HallBasis& basis() const { return basis_; }

    FreeNilElement identity() const;
    FreeNilElement generator(int i) const;
    FreeNilElement multiply(const FreeNilElement& a, const FreeNilElement& b) const;
    FreeNilElement invert(const FreeNilElement& a) const;
    FreeNilElement power(const FreeNilElement& a, const mpz_class& e) const;
    FreeNilElement commutator(const FreeNilElement& a, const FreeNilElement& b) const;

    MagnusSeries series(const FreeNilElement& a) const;
    MagnusSeries series_generator(int i) const;
    MagnusSeries series_one() const;
    // Hall coordinates of a series in the image of the embedding; throws
    // InternalError when it is not.
    FreeNilElement coordinates(const MagnusSeries& s) const;

  private:
    HallBasis basis_;
    std::vector<MagnusSeries> basic_series_;  // image of each basic commutator
    struct WeightSolver;
    std::vector<std::shared_ptr<WeightSolver>> solvers_;  // indexed by weight
    const WeightSolver& solver(int weight) const;
};

}  // namespace schurkit
