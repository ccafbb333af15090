#ifndef GKM_SERIALIZATION_HPP
#define GKM_SERIALIZATION_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gkm/automorphism.hpp"
#include "gkm/gkm_graph.hpp"
#include "gkm/hessenberg.hpp"
#include "gkm/unipotent.hpp"

namespace gkm {

// {"n_vars": int, "vertices": [...], "edges": [{"src","dst","label":[...]}]}.
// Each unordered edge appears once (src < dst); labels are coefficient
// vectors of rational strings over t_1..t_n.
nlohmann::json graph_to_json(const GkmGraph& g);
GkmGraph graph_from_json(const nlohmann::json& j);

// Undirected DOT with the canonical polynomial text as edge label.
std::string graph_to_dot(const GkmGraph& g);

// {"vertex_map": {v: v'}, "lattice_map": [[int]]}.
nlohmann::json automorphism_to_json(const GkmAutomorphism& a);

// {"h": [...], "i": int, "j": int, "witness": "..."|null,
//  "violating_entry": [row, col]|null}.
nlohmann::json witness_certificate(const HessenbergFunction& h, int i, int j);

}  // namespace gkm

#endif
