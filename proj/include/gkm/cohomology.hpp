#ifndef GKM_COHOMOLOGY_HPP
#define GKM_COHOMOLOGY_HPP

#include <map>
#include <memory>
#include <vector>

#include "gkm/automorphism.hpp"
#include "gkm/equivariant_class.hpp"
#include "gkm/gkm_graph.hpp"
#include "gkm/matrix.hpp"

namespace gkm {

// Dimension of the degree-j part of a polynomial ring in f variables,
// C(j + f - 1, f - 1).
int polynomial_space_dim(int f, int j);

// Exact solver for the congruence conditions defining equivariant graph
// cohomology, one instance per (graph, lattice). Degree arguments are
// polynomial degrees k (cohomological degree 2k); everything is cached.
class CohomologyContext {
 public:
  CohomologyContext(const GkmGraph& g, Lattice lattice);

  const GkmGraph& graph() const { return *g_; }
  Lattice lattice() const { return lattice_; }

  // dim of the space of vertex->polynomial maps satisfying all congruences.
  int dim_equivariant(int k);
  // Canonical basis of that space. Constant maps always lie in its span.
  const std::vector<EquivariantClass>& equivariant_basis(int k);
  // dim of degree k after quotienting by products with positive-degree
  // constants (the ordinary graph cohomology in degree 2k).
  int ordinary_dim(int k);
  // Matrix of the pullback action on the ordinary degree-2k quotient in the
  // canonical quotient basis (column j = image of the j-th representative).
  QMatrix action_matrix(const GkmAutomorphism& a, int k);
  // Coordinates of an equivariant class in the ordinary quotient basis.
  QVector ordinary_coordinates(const EquivariantClass& c);

  // (b_0, b_2, ..., b_{2d}) with d the regular out-degree. Throws on
  // disconnected graphs; compute per component instead.
  std::vector<int> betti_numbers();

  // Coordinate vector of a class over the vertex x monomial grid.
  QVector class_coordinates(const EquivariantClass& c, int k);

 private:
  struct DegreeData {
    std::vector<Exponents> monomials;
    std::map<Exponents, int, GradedLexGreater> monomial_index;
    std::shared_ptr<RowReducer> constraints;
    int dim = -1;
    bool basis_done = false;
    std::vector<EquivariantClass> basis;
    std::vector<QVector> basis_vectors;
    bool quotient_done = false;
    int ordinary = -1;
    std::shared_ptr<RowReducer> quotient;  // width: coords + #reps, augmented
    std::vector<int> rep_basis_index;      // which basis vectors represent the quotient
  };

  DegreeData& degree_data(int k);
  void ensure_constraints(int k);
  void ensure_basis(int k);
  void ensure_quotient(int k);
  EquivariantClass class_from_coordinates(const QVector& v, int k);

  const GkmGraph* g_;
  Lattice lattice_;
  int free_vars_;
  std::map<int, DegreeData> degrees_;
};

// All substituted monomials for the given exponent vectors (over the first
// f variables): entry m is the polynomial obtained from monomial m by
// substituting t_i -> images[i-1]. Shared-subproduct evaluation.
std::vector<Polynomial> substituted_monomials(const std::vector<Exponents>& monomials,
                                              const std::vector<Polynomial>& images,
                                              int n_vars);

// Degree-k exponent vectors over the first f of n variables, graded-lex order.
std::vector<Exponents> degree_monomials(int n_vars, int f, int k);

// The n tautological degree-2 classes on a graph over S_n: value t_{w(i)} at
// vertex w, in the full character lattice.
std::vector<EquivariantClass> x_classes(const GkmGraph& g);

// Automorphisms acting as the identity on the ordinary quotient in every
// degree k <= up_to_degree. Requires up_to_degree at least the regular
// out-degree for the classification to be meaningful.
std::vector<GkmAutomorphism> aut_star(const GkmGraph& g, int up_to_degree);
std::vector<GkmAutomorphism> aut_star(const std::vector<GkmAutomorphism>& auts,
                                      CohomologyContext& ctx, int up_to_degree);

}  // namespace gkm

#endif
