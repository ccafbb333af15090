#include "gkm/serialization.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace gkm {

nlohmann::json graph_to_json(const GkmGraph& g) {
  nlohmann::json j;
  j["n_vars"] = g.n_vars();
  j["vertices"] = g.vertices();
  auto edges = nlohmann::json::array();
  // Deterministic: oriented edges are grouped per source in insertion order;
  // emit the direction with the lexicographically smaller endpoint first.
  std::vector<const OrientedEdge*> picked;
  for (const auto& e : g.edges()) {
    if (e.reverse >= 0 && g.vertex_id(e.src) > g.vertex_id(e.dst)) continue;
    picked.push_back(&e);
  }
  std::sort(picked.begin(), picked.end(), [&](const OrientedEdge* a, const OrientedEdge* b) {
    const auto ka = std::make_tuple(g.vertex_id(a->src), g.vertex_id(a->dst),
                                    a->label.to_string());
    const auto kb = std::make_tuple(g.vertex_id(b->src), g.vertex_id(b->dst),
                                    b->label.to_string());
    return ka < kb;
  });
  for (const OrientedEdge* e : picked) {
    nlohmann::json edge;
    edge["src"] = g.vertex_id(e->src);
    edge["dst"] = g.vertex_id(e->dst);
    auto label = nlohmann::json::array();
    for (const auto& c : e->label.coeffs()) label.push_back(rational_to_string(c));
    edge["label"] = std::move(label);
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  return j;
}

GkmGraph graph_from_json(const nlohmann::json& j) {
  const int n_vars = j.at("n_vars").get<int>();
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  GkmGraph g(n_vars, std::move(vertices));
  for (const auto& edge : j.at("edges")) {
    std::vector<Rational> coeffs;
    for (const auto& c : edge.at("label"))
      coeffs.push_back(parse_rational(c.get<std::string>()));
    if (static_cast<int>(coeffs.size()) != n_vars)
      throw std::invalid_argument("label arity mismatch in graph file");
    g.add_edge_pair(edge.at("src").get<std::string>(),
                    edge.at("dst").get<std::string>(), LinearForm(std::move(coeffs)));
  }
  g.finalize();
  return g;
}

std::string graph_to_dot(const GkmGraph& g) {
  std::ostringstream os;
  os << "graph gkm {\n";
  for (const auto& v : g.vertices()) os << "  \"" << v << "\";\n";
  for (const auto& e : g.edges()) {
    if (e.reverse >= 0 && g.vertex_id(e.src) > g.vertex_id(e.dst)) continue;
    os << "  \"" << g.vertex_id(e.src) << "\" -- \"" << g.vertex_id(e.dst)
       << "\" [label=\"" << e.label.to_string() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json automorphism_to_json(const GkmAutomorphism& a) {
  nlohmann::json j;
  nlohmann::json vm;
  const GkmGraph& g = a.graph();
  for (int v = 0; v < g.vertex_count(); ++v)
    vm[g.vertex_id(v)] = g.vertex_id(a.map_vertex(v));
  j["vertex_map"] = std::move(vm);
  auto rows = nlohmann::json::array();
  for (const auto& row : a.lattice_map().matrix()) {
    auto r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(static_cast<long long>(x));
    rows.push_back(std::move(r));
  }
  j["lattice_map"] = std::move(rows);
  return j;
}

nlohmann::json witness_certificate(const HessenbergFunction& h, int i, int j) {
  nlohmann::json cert;
  cert["h"] = h.values();
  cert["i"] = i;
  cert["j"] = j;
  const auto witness = find_witness(h, i, j);
  if (witness) {
    cert["witness"] = witness->to_string();
    const auto violation = witness_violation(h, *witness, i, j);
    cert["violating_entry"] = {violation->row, violation->col};
  } else {
    cert["witness"] = nullptr;
    cert["violating_entry"] = nullptr;
  }
  return cert;
}

}  // namespace gkm
