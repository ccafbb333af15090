#ifndef GKM_UNIPOTENT_HPP
#define GKM_UNIPOTENT_HPP

#include <optional>
#include <random>

#include "gkm/hessenberg.hpp"
#include "gkm/matrix.hpp"
#include "gkm/permutation.hpp"

namespace gkm {

// Position of a nonzero entry below the staircase, i.e. at (row, col) with
// row > h(col). 1-based.
struct HessViolation {
  int row = 0;
  int col = 0;
};

// Membership in the space of matrices vanishing below the staircase:
// b[i][j] = 0 whenever i > h(j).
bool in_hess_space(const HessenbergFunction& h, const IntMatrix& m);
std::optional<HessViolation> hess_space_violation(const HessenbergFunction& h,
                                                  const IntMatrix& m);

// 0/1 matrix of w with 1 at (w(k), k).
IntMatrix perm_matrix(const Perm& w);

// g^{-1} E_{ij} g for a permutation matrix g: the single 1 moves to
// (w^{-1}(i), w^{-1}(j)). Throws on i = j.
IntMatrix conjugate_elementary(const Perm& g, int i, int j);

// Same conjugation for an arbitrary invertible integer matrix, computed over
// the rationals.
QMatrix conjugate_elementary(const IntMatrix& g, int i, int j);

// Exhaustive search over S_n (lexicographic order) for a permutation matrix g
// with g^{-1} E_{ij} g outside the staircase space. nullopt when none exists.
std::optional<Perm> find_witness(const HessenbergFunction& h, int i, int j);

// The violation realized by a witness found above.
std::optional<HessViolation> witness_violation(const HessenbergFunction& h,
                                               const Perm& g, int i, int j);

// cofactor(a_{in}) * a_{j1}; for det(g) = 1 this equals the (n,1) entry of
// g^{-1} E_{ij} g. Throws on singular g.
Rational cofactor_entry(const IntMatrix& g, int i, int j);

// Product of `ops` elementary row operations with coefficients in
// [-bound, bound]; determinant 1 by construction.
IntMatrix random_sl(int n, int ops, int bound, std::mt19937& rng);

}  // namespace gkm

#endif
