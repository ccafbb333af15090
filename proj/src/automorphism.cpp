#include "gkm/automorphism.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "gkm/matrix.hpp"

namespace gkm {

GkmAutomorphism::GkmAutomorphism(const GkmGraph* graph, std::vector<int> vertex_map,
                                 LatticeMap lattice_map)
    : graph_(graph), vertex_map_(std::move(vertex_map)),
      lattice_map_(std::move(lattice_map)) {
  if (static_cast<int>(vertex_map_.size()) != graph_->vertex_count())
    throw std::invalid_argument("vertex map size mismatch");
}

bool GkmAutomorphism::satisfies_invariant() const {
  std::vector<bool> hit(vertex_map_.size(), false);
  for (int v : vertex_map_) {
    if (v < 0 || v >= static_cast<int>(hit.size()) || hit[v]) return false;
    hit[v] = true;
  }
  for (const auto& e : graph_->edges()) {
    const LinearForm want = lattice_map_.apply(e.label);
    if (graph_->find_out_edge(vertex_map_[e.src], want) < 0) return false;
    const int img = graph_->find_out_edge(vertex_map_[e.src], want);
    if (graph_->edges()[img].dst != vertex_map_[e.dst]) return false;
  }
  return true;
}

GkmAutomorphism GkmAutomorphism::compose(const GkmAutomorphism& o) const {
  if (graph_ != o.graph_) throw std::invalid_argument("composing over different graphs");
  std::vector<int> vm(vertex_map_.size());
  for (std::size_t v = 0; v < vm.size(); ++v) vm[v] = vertex_map_[o.vertex_map_[v]];
  return GkmAutomorphism(graph_, std::move(vm), lattice_map_.compose(o.lattice_map_));
}

GkmAutomorphism GkmAutomorphism::inverse() const {
  std::vector<int> vm(vertex_map_.size());
  for (std::size_t v = 0; v < vm.size(); ++v) vm[vertex_map_[v]] = static_cast<int>(v);
  auto full = lattice_map_.inverse_full();
  return GkmAutomorphism(graph_, std::move(vm),
                         full ? *full : lattice_map_.inverse_on_sum_zero());
}

bool GkmAutomorphism::is_identity() const {
  for (std::size_t v = 0; v < vertex_map_.size(); ++v)
    if (vertex_map_[v] != static_cast<int>(v)) return false;
  return lattice_map_.is_identity_on_sum_zero();
}

bool GkmAutomorphism::operator==(const GkmAutomorphism& o) const {
  return graph_ == o.graph_ && vertex_map_ == o.vertex_map_ &&
         lattice_map_.same_on_sum_zero(o.lattice_map_);
}

bool GkmAutomorphism::operator<(const GkmAutomorphism& o) const {
  if (vertex_map_ != o.vertex_map_) return vertex_map_ < o.vertex_map_;
  return lattice_map_.simple_root_matrix() < o.lattice_map_.simple_root_matrix();
}

GkmAutomorphism phi_sigma(const GkmGraph& g, const Perm& sigma) {
  std::vector<int> vm(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Perm w = Perm::from_string(g.vertex_id(v));
    const int img = g.index_of(sigma.compose(w).to_string());
    if (img < 0) throw std::invalid_argument("graph vertices are not S_n");
    vm[v] = img;
  }
  return GkmAutomorphism(&g, std::move(vm), LatticeMap::from_permutation(sigma));
}

GkmAutomorphism phi_zero(const GkmGraph& g, const HessenbergFunction& h) {
  if (!h.star_condition())
    throw std::invalid_argument(
        "staircase is not anti-diagonally symmetric; w -> w0 w w0 is not a graph "
        "automorphism here");
  const Perm w0 = Perm::longest(h.n());
  std::vector<int> vm(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Perm w = Perm::from_string(g.vertex_id(v));
    vm[v] = g.index_of(w0.compose(w).compose(w0).to_string());
  }
  return GkmAutomorphism(&g, std::move(vm), LatticeMap::longest_negation(h.n()));
}

namespace {

// Solve for the lattice map sending chosen base labels to assigned targets:
// returns the simple-root images, or nullopt when the system has no solution
// with the full star landing on the target star.
std::optional<LatticeMap> solve_lattice_map(
    const GkmGraph& g, const std::vector<LinearForm>& base_spanning,
    const std::vector<LinearForm>& targets) {
  const int n = g.n_vars();
  const int k = n - 1;
  // Express s_j in terms of the spanning labels: solve B^T x = s_j where the
  // columns of B^T are the spanning labels' coefficient vectors.
  QMatrix bt(n, QVector(k, Rational(0)));
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) bt[r][c] = base_spanning[c].coeff(r);
  // Augment with every simple root on the right and reduce.
  QMatrix aug(n, QVector(k + k, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < k; ++c) aug[r][c] = bt[r][c];
  for (int j = 0; j < k; ++j) {
    aug[j][k + j] = 1;
    aug[j + 1][k + j] = -1;
  }
  RowReducer red(2 * k);
  for (const auto& row : aug) red.add_row(to_sparse(row));
  // Solvability requires the left block to have full rank k.
  QMatrix left(n, QVector(k, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < k; ++c) left[r][c] = bt[r][c];
  if (matrix_rank(left) != k) return std::nullopt;
  red.make_reduced();
  // In reduced form every left column is a pivot, so each pivot row reads
  // x_pivot = (entry in the right block for each rhs). A pivot in the right
  // block would mean some s_j is outside the span.
  QMatrix coords(k, QVector(k, Rational(0)));  // coords[p][j]: coeff of label p in s_j
  for (const auto& [pivot, row] : red.rows()) {
    if (pivot >= k) return std::nullopt;
    for (const auto& [c, v] : row)
      if (c >= k) coords[pivot][c - k] = v;
  }
  // phi(s_j) = sum_p coords[p][j] * targets[p].
  std::vector<LinearForm> images;
  images.reserve(k);
  for (int j = 0; j < k; ++j) {
    LinearForm img(n);
    for (int p = 0; p < k; ++p)
      if (coords[p][j] != 0) img = img + targets[p] * coords[p][j];
    images.push_back(std::move(img));
  }
  return LatticeMap::from_simple_root_images(images);
}

}  // namespace

std::vector<GkmAutomorphism> enumerate_aut(const GkmGraph& g) {
  if (!is_full_rank(g))
    throw std::invalid_argument("axial function is not of full rank; the "
                                "automorphism group need not be finite");
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("automorphism search requires a connected graph");
  for (const auto& e : g.edges())
    if (!e.label.sum_zero())
      throw std::invalid_argument("labels must lie in the sum-zero lattice");

  const int base = 0;  // vertices are sorted, so 0 is the lexicographic least
  const auto base_star = g.star(base);
  const int d = static_cast<int>(base_star.size());
  const int k = g.n_vars() - 1;

  // A spanning subset of the base star: first k linearly independent labels.
  std::vector<int> spanning_idx;
  {
    RowReducer red(g.n_vars());
    for (int i = 0; i < d && static_cast<int>(spanning_idx.size()) < k; ++i)
      if (red.add_row(to_sparse(base_star[i].coeffs()))) spanning_idx.push_back(i);
  }
  std::vector<LinearForm> spanning;
  for (int i : spanning_idx) spanning.push_back(base_star[i]);

  auto try_candidate = [&](int q, const LatticeMap& lat,
                           std::vector<GkmAutomorphism>& found) {
    // The whole base star must land on the star of q.
    for (const auto& l : base_star)
      if (g.find_out_edge(q, lat.apply(l)) < 0) return;
    // BFS propagation; the image edge is forced by the lattice map.
    std::vector<int> vm(g.vertex_count(), -1);
    vm[base] = q;
    std::queue<int> queue;
    queue.push(base);
    while (!queue.empty()) {
      const int p = queue.front();
      queue.pop();
      for (int e : g.out_edges(p)) {
        const auto& edge = g.edges()[e];
        const int img_edge = g.find_out_edge(vm[p], lat.apply(edge.label));
        if (img_edge < 0) return;
        const int img_dst = g.edges()[img_edge].dst;
        if (vm[edge.dst] < 0) {
          vm[edge.dst] = img_dst;
          queue.push(edge.dst);
        } else if (vm[edge.dst] != img_dst) {
          return;
        }
      }
    }
    GkmAutomorphism candidate(&g, std::move(vm), lat);
    if (candidate.satisfies_invariant()) found.push_back(std::move(candidate));
  };

  // Image candidates for the base vertex are independent search branches.
  std::vector<std::vector<GkmAutomorphism>> per_candidate(g.vertex_count());
  parallel_for(g.vertex_count(), [&](int q) {
    const auto target_star = g.star(q);
    // All injective assignments of the spanning labels into the target star.
    std::vector<LinearForm> targets(k, LinearForm(g.n_vars()));
    std::vector<bool> used(d, false);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == k) {
        if (auto lat = solve_lattice_map(g, spanning, targets))
          try_candidate(q, *lat, per_candidate[q]);
        return;
      }
      for (int t = 0; t < d; ++t) {
        if (used[t]) continue;
        used[t] = true;
        targets[pos] = target_star[t];
        self(self, pos + 1);
        used[t] = false;
      }
    };
    rec(rec, 0);
  });

  std::vector<GkmAutomorphism> found;
  for (auto& branch : per_candidate)
    for (auto& a : branch) found.push_back(std::move(a));
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<Polynomial> class_action_images(const LatticeMap& lat, Lattice lattice,
                                            int n) {
  if (lattice == Lattice::That) {
    auto inv = lat.inverse_full();
    if (!inv)
      throw std::invalid_argument(
          "lattice map is not invertible on the full character lattice");
    std::vector<Polynomial> images;
    images.reserve(n);
    for (int c = 0; c < n; ++c) {
      Polynomial img(n);
      for (int r = 0; r < n; ++r) {
        const Int& v = inv->matrix()[r][c];
        if (v != 0) img += Polynomial::variable(n, r + 1) * Rational(v);
      }
      images.push_back(std::move(img));
    }
    return images;
  }
  auto images = lat.inverse_on_sum_zero().reduced_action_images();
  images.push_back(Polynomial(n));  // t_n never occurs in reduced values
  return images;
}

EquivariantClass act_on_map(const GkmAutomorphism& a, const EquivariantClass& xi) {
  if (&a.graph() != &xi.graph())
    throw std::invalid_argument("automorphism and class live on different graphs");
  const int n = xi.graph().n_vars();
  const auto images = class_action_images(a.lattice_map(), xi.lattice(), n);
  std::vector<Polynomial> vals;
  vals.reserve(xi.values().size());
  for (int v = 0; v < xi.graph().vertex_count(); ++v)
    vals.push_back(xi.value(a.map_vertex(v)).substitute_all(images));
  return EquivariantClass(&xi.graph(), xi.lattice(), xi.degree(), std::move(vals));
}

EquivariantClass dot_action(const Perm& tau, const EquivariantClass& xi) {
  const GkmGraph& g = xi.graph();
  const int n = g.n_vars();
  const Perm tau_inv = tau.inverse();
  const LatticeMap lat = LatticeMap::from_permutation(tau);
  std::vector<Polynomial> images;
  if (xi.lattice() == Lattice::That) {
    for (int c = 1; c <= n; ++c) images.push_back(Polynomial::variable(n, tau(c)));
  } else {
    images = lat.reduced_action_images();
    images.push_back(Polynomial(n));
  }
  std::vector<Polynomial> vals;
  vals.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Perm w = Perm::from_string(g.vertex_id(v));
    const int src = g.index_of(tau_inv.compose(w).to_string());
    if (src < 0) throw std::invalid_argument("dot action requires S_n vertex ids");
    vals.push_back(xi.value(src).substitute_all(images));
  }
  return EquivariantClass(&g, xi.lattice(), xi.degree(), std::move(vals));
}

}  // namespace gkm
