#ifndef GKM_LATTICE_MAP_HPP
#define GKM_LATTICE_MAP_HPP

#include <optional>
#include <vector>

#include "gkm/matrix.hpp"
#include "gkm/permutation.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

// An integer matrix acting on the t-basis of the full character lattice,
// phi(t_j) = sum_i m[i][j] t_i, restricted to maps that carry the sum-zero
// sublattice into itself. Validity means the restriction to the sum-zero
// sublattice is invertible over the integers (determinant +-1 in the
// simple-root basis s_j = t_j - t_{j+1}); the full matrix need not be
// invertible.
class LatticeMap {
 public:
  static LatticeMap identity(int n);
  // t_i -> t_{sigma(i)}.
  static LatticeMap from_permutation(const Perm& sigma);
  // t_i -> -t_{n+1-i}.
  static LatticeMap longest_negation(int n);
  explicit LatticeMap(IntMatrix m);

  // Builds the map determined on the sum-zero sublattice by the images of
  // the simple roots s_j = t_j - t_{j+1}, extended to the full lattice by a
  // canonical integral extension. Returns nullopt when the images are not
  // integral, not sum-zero, or the restriction is not unimodular.
  static std::optional<LatticeMap> from_simple_root_images(
      const std::vector<LinearForm>& images);

  int n() const { return n_; }
  const IntMatrix& matrix() const { return m_; }

  bool preserves_sum_zero() const;   // all column sums equal
  bool unimodular_on_sum_zero() const;
  bool is_valid() const { return preserves_sum_zero() && unimodular_on_sum_zero(); }
  bool is_identity_on_sum_zero() const;

  LinearForm apply(const LinearForm& l) const;
  // Ring homomorphism t_i -> phi(t_i) on the full polynomial ring.
  Polynomial apply(const Polynomial& p) const;

  // (this o other): apply other first.
  LatticeMap compose(const LatticeMap& other) const;

  // Action matrix in the simple-root basis, (n-1) x (n-1).
  IntMatrix simple_root_matrix() const;

  // Inverse as an automorphism of the sum-zero sublattice, stored with the
  // canonical extension. Throws when not unimodular there.
  LatticeMap inverse_on_sum_zero() const;
  // Inverse of the full matrix when it is invertible over the integers;
  // needed to act on full-lattice polynomial values.
  std::optional<LatticeMap> inverse_full() const;

  // Substitution images of t_1..t_{n-1} for the induced ring action on
  // sum-zero-lattice polynomials written in the coordinates where
  // t_n = -(t_1 + ... + t_{n-1}). Independent of the extension choice.
  std::vector<Polynomial> reduced_action_images() const;

  // Equality as automorphisms of the sum-zero sublattice.
  bool same_on_sum_zero(const LatticeMap& o) const;

  // Re-extends from the sum-zero restriction by the canonical rule
  // (per-coordinate lower median); idempotent, identity on the natural
  // matrices of the permutation and longest-negation maps.
  LatticeMap canonicalized() const;

  bool operator==(const LatticeMap& o) const { return m_ == o.m_; }

 private:
  int n_;
  IntMatrix m_;
};

}  // namespace gkm

#endif
