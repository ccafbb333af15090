#ifndef GKM_GKM_GRAPH_HPP
#define GKM_GKM_GRAPH_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gkm/polynomial.hpp"

namespace gkm {

struct OrientedEdge {
  int src = -1;
  int dst = -1;
  LinearForm label;
  int reverse = -1;  // index of the opposite orientation, -1 when unpaired
};

// A finite graph with oriented edges labelled by linear forms. Immutable
// once finalized; the validation axioms live in validate(), so deliberately
// broken graphs can still be constructed and inspected.
class GkmGraph {
 public:
  GkmGraph(int n_vars, std::vector<std::string> vertices);

  // Adds both orientations of an edge between u and v; the (u,v) direction
  // carries `label`, the reverse carries its negation.
  void add_edge_pair(const std::string& u, const std::string& v, LinearForm label);
  // Adds a single orientation. Pairing is resolved in finalize().
  void add_oriented_edge(const std::string& u, const std::string& v, LinearForm label);
  // Matches reverse orientations and freezes adjacency. Must be called
  // before queries; unpaired edges keep reverse = -1.
  void finalize();

  int n_vars() const { return n_vars_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex_id(int i) const { return vertices_[i]; }
  int index_of(const std::string& id) const;           // -1 when absent
  const std::vector<OrientedEdge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_edges_[v].size()); }

  // Labels on the out-edges of vertex v (the star Lambda_v).
  std::vector<LinearForm> star(int v) const;
  // Index of the unique out-edge of v carrying exactly this label, or -1.
  int find_out_edge(int v, const LinearForm& label) const;

 private:
  int n_vars_;
  bool finalized_ = false;
  std::vector<std::string> vertices_;
  std::unordered_map<std::string, int> index_;
  std::vector<OrientedEdge> edges_;
  std::vector<std::vector<int>> out_edges_;
};

struct AxiomReport {
  bool ok = true;
  std::string witness;  // offending edge or vertex when ok is false
};

struct ValidationReport {
  AxiomReport pairing;       // axiom (1): closed under orientation reversal
  AxiomReport independence;  // axiom (2): stars pairwise linearly independent
  AxiomReport congruence;    // axiom (3): stars congruent along each edge
  AxiomReport regularity;    // constant out-degree
  bool all_ok() const {
    return pairing.ok && independence.ok && congruence.ok && regularity.ok;
  }
  std::string to_string() const;
};

// Checks the three axial-function axioms plus regularity. Axiom (3) is an
// existence statement, decided by bipartite perfect matching between the two
// stars with congruence mod the edge label as compatibility.
ValidationReport validate(const GkmGraph& g);

// True iff the labels at every vertex span the sum-zero lattice (rank n-1).
bool is_full_rank(const GkmGraph& g);

// Partition of the vertex set by underlying-graph connectivity; components
// and their members are sorted by vertex id.
std::vector<std::vector<std::string>> connected_components(const GkmGraph& g);

// Connected component of `base` in the subgraph of edges whose labels lie in
// the linear span of the given forms. Throws when base is not a vertex.
GkmGraph fixed_subgraph(const GkmGraph& g, const std::vector<LinearForm>& span,
                        const std::string& base);

// True iff the underlying simple graph is K_{3,3}.
bool is_k33(const GkmGraph& g);

}  // namespace gkm

#endif
