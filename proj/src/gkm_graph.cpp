#include "gkm/gkm_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gkm/matrix.hpp"

namespace gkm {

GkmGraph::GkmGraph(int n_vars, std::vector<std::string> vertices)
    : n_vars_(n_vars), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    if (!index_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("duplicate vertex id '" + vertices_[i] + "'");
  }
  out_edges_.resize(vertices_.size());
}

int GkmGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

void GkmGraph::add_oriented_edge(const std::string& u, const std::string& v,
                                 LinearForm label) {
  if (finalized_) throw std::logic_error("graph already finalized");
  const int ui = index_of(u), vi = index_of(v);
  if (ui < 0 || vi < 0) throw std::invalid_argument("edge endpoint is not a vertex");
  if (label.n_vars() != n_vars_) throw std::invalid_argument("label arity mismatch");
  edges_.push_back(OrientedEdge{ui, vi, std::move(label), -1});
}

void GkmGraph::add_edge_pair(const std::string& u, const std::string& v,
                             LinearForm label) {
  add_oriented_edge(u, v, label);
  add_oriented_edge(v, u, -label);
}

void GkmGraph::finalize() {
  if (finalized_) return;
  // Pair each oriented edge with an unmatched reverse (dst, src, -label).
  std::map<std::pair<int, int>, std::vector<int>> by_endpoints;
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
    by_endpoints[{edges_[i].src, edges_[i].dst}].push_back(i);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    if (edges_[i].reverse >= 0) continue;
    auto it = by_endpoints.find({edges_[i].dst, edges_[i].src});
    if (it == by_endpoints.end()) continue;
    const LinearForm want = -edges_[i].label;
    for (int j : it->second) {
      if (j == i || edges_[j].reverse >= 0) continue;
      if (edges_[j].label == want) {
        edges_[i].reverse = j;
        edges_[j].reverse = i;
        break;
      }
    }
  }
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
    out_edges_[edges_[i].src].push_back(i);
  finalized_ = true;
}

std::vector<LinearForm> GkmGraph::star(int v) const {
  std::vector<LinearForm> labels;
  labels.reserve(out_edges_[v].size());
  for (int e : out_edges_[v]) labels.push_back(edges_[e].label);
  return labels;
}

int GkmGraph::find_out_edge(int v, const LinearForm& label) const {
  for (int e : out_edges_[v])
    if (edges_[e].label == label) return e;
  return -1;
}

namespace {

std::string edge_desc(const GkmGraph& g, int e) {
  const auto& edge = g.edges()[e];
  return "(" + g.vertex_id(edge.src) + " -> " + g.vertex_id(edge.dst) +
         ", " + edge.label.to_string() + ")";
}

// Perfect matching in a bipartite compatibility relation via augmenting paths.
bool has_perfect_matching(const std::vector<std::vector<int>>& adj, int right_size) {
  const int left_size = static_cast<int>(adj.size());
  if (left_size != right_size) return false;
  std::vector<int> match_right(right_size, -1);
  std::vector<bool> visited;
  std::function<bool(int)> try_augment = [&](int u) -> bool {
    for (int v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = true;
      if (match_right[v] < 0 || try_augment(match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < left_size; ++u) {
    visited.assign(right_size, false);
    if (!try_augment(u)) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate(const GkmGraph& g) {
  ValidationReport report;

  for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
    const auto& e = g.edges()[i];
    if (e.reverse < 0) {
      report.pairing = {false, "unpaired oriented edge " + edge_desc(g, i)};
      break;
    }
    const auto& r = g.edges()[e.reverse];
    if (r.src != e.dst || r.dst != e.src || r.label != -e.label) {
      report.pairing = {false, "bad reverse for edge " + edge_desc(g, i)};
      break;
    }
  }

  for (int v = 0; v < g.vertex_count() && report.independence.ok; ++v) {
    const auto labels = g.star(v);
    for (std::size_t a = 0; a < labels.size() && report.independence.ok; ++a) {
      if (labels[a].is_zero()) {
        report.independence = {false, "zero label at vertex " + g.vertex_id(v)};
        break;
      }
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        if (labels[a].proportional_to(labels[b])) {
          report.independence = {false,
                                 "proportional labels " + labels[a].to_string() +
                                     " and " + labels[b].to_string() +
                                     " at vertex " + g.vertex_id(v)};
          break;
        }
      }
    }
  }

  if (report.pairing.ok && report.independence.ok) {
    for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
      const auto& e = g.edges()[i];
      const auto left = g.star(e.src);
      const auto right = g.star(e.dst);
      if (left.size() != right.size()) {
        report.congruence = {false, "star sizes differ along edge " + edge_desc(g, i)};
        break;
      }
      std::vector<std::vector<int>> compat(left.size());
      for (std::size_t a = 0; a < left.size(); ++a)
        for (std::size_t b = 0; b < right.size(); ++b)
          if (LinearForm::congruent_mod(left[a], right[b], e.label))
            compat[a].push_back(static_cast<int>(b));
      if (!has_perfect_matching(compat, static_cast<int>(right.size()))) {
        report.congruence = {false,
                             "no congruence bijection along edge " + edge_desc(g, i)};
        break;
      }
    }
  }

  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) != g.out_degree(0)) {
      report.regularity = {false, "out-degree differs at vertex " + g.vertex_id(v)};
      break;
    }
  }

  return report;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  auto line = [&](const char* name, const AxiomReport& a) {
    os << name << ": " << (a.ok ? "pass" : "FAIL " + a.witness) << "\n";
  };
  line("pairing", pairing);
  line("independence", independence);
  line("congruence", congruence);
  line("regularity", regularity);
  return os.str();
}

bool is_full_rank(const GkmGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    QMatrix rows;
    for (const auto& l : g.star(v)) rows.push_back(l.coeffs());
    if (matrix_rank(rows) != g.n_vars() - 1) return false;
  }
  return g.vertex_count() > 0;
}

std::vector<std::vector<std::string>> connected_components(const GkmGraph& g) {
  std::vector<int> component(g.vertex_count(), -1);
  int n_components = 0;
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (component[start] >= 0) continue;
    const int c = n_components++;
    std::queue<int> queue;
    queue.push(start);
    component[start] = c;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int e : g.out_edges(v)) {
        const int w = g.edges()[e].dst;
        if (component[w] < 0) {
          component[w] = c;
          queue.push(w);
        }
      }
      // Unpaired incoming edges still connect.
      for (const auto& e : g.edges()) {
        if (e.dst == v && component[e.src] < 0) {
          component[e.src] = c;
          queue.push(e.src);
        }
      }
    }
  }
  std::vector<std::vector<std::string>> out(n_components);
  for (int v = 0; v < g.vertex_count(); ++v)
    out[component[v]].push_back(g.vertex_id(v));
  return out;
}

GkmGraph fixed_subgraph(const GkmGraph& g, const std::vector<LinearForm>& span,
                        const std::string& base) {
  const int base_idx = g.index_of(base);
  if (base_idx < 0) throw std::invalid_argument("base vertex '" + base + "' not found");
  QMatrix span_rows;
  for (const auto& l : span) span_rows.push_back(l.coeffs());
  const int span_rank = matrix_rank(span_rows);
  auto in_span = [&](const LinearForm& l) {
    QMatrix rows = span_rows;
    rows.push_back(l.coeffs());
    return matrix_rank(rows) == span_rank;
  };

  // BFS over span-labelled edges from the base vertex.
  std::vector<bool> keep_vertex(g.vertex_count(), false);
  keep_vertex[base_idx] = true;
  std::queue<int> queue;
  queue.push(base_idx);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int e : g.out_edges(v)) {
      const auto& edge = g.edges()[e];
      if (!in_span(edge.label)) continue;
      if (!keep_vertex[edge.dst]) {
        keep_vertex[edge.dst] = true;
        queue.push(edge.dst);
      }
    }
  }

  std::vector<std::string> vertices;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (keep_vertex[v]) vertices.push_back(g.vertex_id(v));
  GkmGraph sub(g.n_vars(), vertices);
  for (const auto& edge : g.edges()) {
    if (!keep_vertex[edge.src] || !keep_vertex[edge.dst]) continue;
    if (!in_span(edge.label)) continue;
    sub.add_oriented_edge(g.vertex_id(edge.src), g.vertex_id(edge.dst), edge.label);
  }
  sub.finalize();
  return sub;
}

bool is_k33(const GkmGraph& g) {
  if (g.vertex_count() != 6) return false;
  std::set<std::pair<int, int>> simple_edges;
  for (const auto& e : g.edges())
    simple_edges.insert({std::min(e.src, e.dst), std::max(e.src, e.dst)});
  std::vector<std::set<int>> adj(6);
  for (const auto& [a, b] : simple_edges) {
    if (a == b) return false;
    adj[a].insert(b);
    adj[b].insert(a);
  }
  for (int v = 0; v < 6; ++v)
    if (adj[v].size() != 3) return false;
  // 2-color; then check completeness across the parts.
  std::vector<int> color(6, -1);
  color[0] = 0;
  std::queue<int> queue;
  queue.push(0);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int w : adj[v]) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        queue.push(w);
      } else if (color[w] == color[v]) {
        return false;
      }
    }
  }
  std::vector<int> part_a, part_b;
  for (int v = 0; v < 6; ++v) {
    if (color[v] < 0) return false;  // disconnected
    (color[v] == 0 ? part_a : part_b).push_back(v);
  }
  if (part_a.size() != 3 || part_b.size() != 3) return false;
  for (int a : part_a)
    for (int b : part_b)
      if (!adj[a].count(b)) return false;
  return true;
}

}  // namespace gkm
