#ifndef GKM_AUTOMORPHISM_HPP
#define GKM_AUTOMORPHISM_HPP

#include <vector>

#include "gkm/equivariant_class.hpp"
#include "gkm/gkm_graph.hpp"
#include "gkm/hessenberg.hpp"
#include "gkm/lattice_map.hpp"
#include "gkm/permutation.hpp"

namespace gkm {

// A pair (vertex bijection, character-lattice automorphism) such that every
// edge (p, q, l) maps to an edge (phi(p), phi(q)) labelled lattice(l).
class GkmAutomorphism {
 public:
  GkmAutomorphism(const GkmGraph* graph, std::vector<int> vertex_map,
                  LatticeMap lattice_map);

  const GkmGraph& graph() const { return *graph_; }
  int map_vertex(int v) const { return vertex_map_[v]; }
  const std::vector<int>& vertex_map() const { return vertex_map_; }
  const LatticeMap& lattice_map() const { return lattice_map_; }

  // Re-checks the defining edge condition from scratch.
  bool satisfies_invariant() const;

  GkmAutomorphism compose(const GkmAutomorphism& o) const;  // this after o
  GkmAutomorphism inverse() const;
  bool is_identity() const;

  // Equality as automorphisms: same vertex map and same action on the
  // sum-zero sublattice (the stored full-lattice matrices may differ in
  // their integral extension).
  bool operator==(const GkmAutomorphism& o) const;
  bool operator!=(const GkmAutomorphism& o) const { return !(*this == o); }
  bool operator<(const GkmAutomorphism& o) const;  // deterministic order

 private:
  const GkmGraph* graph_;
  std::vector<int> vertex_map_;
  LatticeMap lattice_map_;
};

// Left translation w -> sigma w with character map t_i -> t_{sigma(i)}.
// Requires a graph built on S_n one-line vertex ids.
GkmAutomorphism phi_sigma(const GkmGraph& g, const Perm& sigma);

// The involution w -> w0 w w0 with t_i -> -t_{n+1-i}. Throws when the
// staircase of h is not anti-diagonally symmetric, in which case the vertex
// map does not preserve edges.
GkmAutomorphism phi_zero(const GkmGraph& g, const HessenbergFunction& h);

// Complete list of automorphisms, deterministically ordered. Fixes the
// lexicographically least vertex as base; for each candidate image and each
// compatible assignment of a spanning subset of the base star, solves for
// the lattice map, then propagates the vertex map by BFS (forced at every
// step by pairwise independence of labels) and keeps globally consistent
// solutions. Throws unless the graph is connected and of full rank.
std::vector<GkmAutomorphism> enumerate_aut(const GkmGraph& g);

// Pullback ((phi,lat)^* xi)(p) = lat^{-1}(xi(phi(p))). Contravariant.
EquivariantClass act_on_map(const GkmAutomorphism& a, const EquivariantClass& xi);

// Substitution images realizing the inverse character action on class values:
// the full matrix inverse for the full lattice, the intrinsic reduced action
// for the sum-zero lattice.
std::vector<Polynomial> class_action_images(const LatticeMap& lat, Lattice lattice,
                                            int n);

// Tymoczko dot action (tau . xi)(w) = tau(xi(tau^{-1} w)) on graphs over S_n.
EquivariantClass dot_action(const Perm& tau, const EquivariantClass& xi);

}  // namespace gkm

#endif
