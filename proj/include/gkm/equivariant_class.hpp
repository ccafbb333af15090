#ifndef GKM_EQUIVARIANT_CLASS_HPP
#define GKM_EQUIVARIANT_CLASS_HPP

#include <vector>

#include "gkm/gkm_graph.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

// Which character lattice polynomial values live in. T_hat is the full
// lattice with t_1..t_n free; T is the sum-zero sublattice, with values kept
// in the reduced coordinates where t_n = -(t_1 + ... + t_{n-1}) and the
// variable t_n never occurs.
enum class Lattice { T, That };

// Number of free polynomial variables for the given lattice.
int free_vars(const GkmGraph& g, Lattice lattice);

// The edge label as seen by the given lattice (reduced coordinates for T).
LinearForm label_in_lattice(const GkmGraph& g, const LinearForm& label, Lattice lattice);

// A vertex-indexed tuple of homogeneous polynomials. Cohomological degree is
// 2 * degree.
class EquivariantClass {
 public:
  EquivariantClass(const GkmGraph* graph, Lattice lattice, int degree,
                   std::vector<Polynomial> values);

  const GkmGraph& graph() const { return *graph_; }
  Lattice lattice() const { return lattice_; }
  int degree() const { return degree_; }
  const Polynomial& value(int vertex) const { return values_[vertex]; }
  const std::vector<Polynomial>& values() const { return values_; }

  // True iff value(i(e)) - value(t(e)) is divisible by alpha(e) on every edge.
  bool satisfies_congruences() const;

  EquivariantClass operator+(const EquivariantClass& o) const;
  EquivariantClass operator-(const EquivariantClass& o) const;
  EquivariantClass operator*(const Rational& c) const;
  // Vertexwise product; degrees add.
  EquivariantClass operator*(const EquivariantClass& o) const;
  bool operator==(const EquivariantClass& o) const;
  bool is_zero() const;

  static EquivariantClass zero(const GkmGraph* graph, Lattice lattice, int degree);
  // The constant class with the given homogeneous polynomial at every vertex.
  static EquivariantClass constant(const GkmGraph* graph, Lattice lattice,
                                   const Polynomial& p);

 private:
  const GkmGraph* graph_;
  Lattice lattice_;
  int degree_;
  std::vector<Polynomial> values_;
};

// Restriction of a full-lattice class to sum-zero coordinates: composes every
// value with t_n -> -(t_1 + ... + t_{n-1}).
EquivariantClass to_T_lattice(const EquivariantClass& c);

}  // namespace gkm

#endif
