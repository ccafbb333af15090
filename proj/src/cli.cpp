#include "gkm/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gkm/cohomology.hpp"
#include "gkm/serialization.hpp"
#include "gkm/unipotent.hpp"
#include "gkm/verification.hpp"

namespace gkm {

namespace {

constexpr int kBuildGuard = 6;
constexpr int kSweepGuard = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HessenbergFunction parse_h_or_throw(const std::string& spec) {
  try {
    return HessenbergFunction::parse(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_guard(int n, int guard, bool unsafe_large, const char* what) {
  if (n <= guard) return;
  if (unsafe_large && n <= kBuildGuard) return;
  throw UsageError(std::string(what) + " capped at n = " + std::to_string(guard) +
                   " (pass --unsafe-large to override up to " +
                   std::to_string(kBuildGuard) + ")");
}

int cmd_graph_build(const std::string& h_spec, const std::string& out_file,
                    const std::string& format, std::ostream& out) {
  const auto h = parse_h_or_throw(h_spec);
  check_guard(h.n(), kBuildGuard, false, "graph building");
  const GkmGraph g = build_gkm_graph(h);
  std::string payload;
  if (format == "dot") {
    payload = graph_to_dot(g);
  } else if (format == "json") {
    payload = graph_to_json(g).dump(2) + "\n";
  } else {
    throw UsageError("unknown format '" + format + "'");
  }
  if (out_file.empty()) {
    out << payload;
  } else {
    std::ofstream f(out_file);
    if (!f) throw UsageError("cannot open '" + out_file + "' for writing");
    f << payload;
  }
  return 0;
}

int cmd_graph_validate(const std::string& in_file, std::ostream& out) {
  std::ifstream f(in_file);
  if (!f) throw UsageError("cannot read '" + in_file + "'");
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed graph file: " + std::string(e.what()));
  }
  GkmGraph g = [&] {
    try {
      return graph_from_json(j);
    } catch (const std::exception& e) {
      throw UsageError("malformed graph file: " + std::string(e.what()));
    }
  }();
  const auto report = validate(g);
  nlohmann::json result;
  auto axiom = [](const AxiomReport& a) {
    nlohmann::json x;
    x["ok"] = a.ok;
    if (!a.ok) x["witness"] = a.witness;
    return x;
  };
  result["pairing"] = axiom(report.pairing);
  result["independence"] = axiom(report.independence);
  result["congruence"] = axiom(report.congruence);
  result["regularity"] = axiom(report.regularity);
  result["valid"] = report.all_ok();
  out << result.dump(2) << "\n";
  return report.all_ok() ? 0 : 1;
}

int cmd_aut_enumerate(const std::string& h_spec, bool count_only, bool unsafe_large,
                      std::ostream& out) {
  const auto h = parse_h_or_throw(h_spec);
  check_guard(h.n(), kSweepGuard, unsafe_large, "automorphism enumeration");
  const GkmGraph g = build_gkm_graph(h);
  const auto auts = enumerate_aut(g);
  if (count_only) {
    out << auts.size() << "\n";
    return 0;
  }
  auto arr = nlohmann::json::array();
  for (const auto& a : auts) arr.push_back(automorphism_to_json(a));
  out << arr.dump(2) << "\n";
  return 0;
}

int cmd_aut_star(const std::string& h_spec, int max_degree, bool unsafe_large,
                 std::ostream& out) {
  const auto h = parse_h_or_throw(h_spec);
  check_guard(h.n(), kSweepGuard, unsafe_large, "cohomology action sweeps");
  if (max_degree < h.complex_dimension())
    throw UsageError("--max-degree must be at least the complex dimension " +
                     std::to_string(h.complex_dimension()));
  const GkmGraph g = build_gkm_graph(h);
  const auto stars = aut_star(g, max_degree);
  auto arr = nlohmann::json::array();
  for (const auto& a : stars) arr.push_back(automorphism_to_json(a));
  out << arr.dump(2) << "\n";
  return 0;
}

int cmd_star_condition(const std::string& h_spec, std::ostream& out) {
  const auto h = parse_h_or_throw(h_spec);
  out << (h.star_condition() ? "true" : "false") << "\n";
  return 0;
}

int cmd_betti(const std::string& h_spec, bool unsafe_large, std::ostream& out) {
  const auto h = parse_h_or_throw(h_spec);
  check_guard(h.n(), kSweepGuard, unsafe_large, "cohomology computations");
  if (!h.is_connected())
    throw UsageError("h = " + h.to_string() +
                     " is disconnected; compute per component instead");
  const GkmGraph g = build_gkm_graph(h);
  CohomologyContext ctx(g, Lattice::T);
  const auto betti = ctx.betti_numbers();
  out << nlohmann::json(betti).dump() << "\n";
  return 0;
}

int cmd_equivariant(const std::string& h_spec, int degree, const std::string& lattice,
                    bool unsafe_large, std::ostream& out) {
  const auto h = parse_h_or_throw(h_spec);
  check_guard(h.n(), kSweepGuard, unsafe_large, "cohomology computations");
  if (degree < 0) throw UsageError("--degree must be nonnegative");
  Lattice lat;
  if (lattice == "t") {
    lat = Lattice::T;
  } else if (lattice == "that") {
    lat = Lattice::That;
  } else {
    throw UsageError("--lattice must be 't' or 'that'");
  }
  const GkmGraph g = build_gkm_graph(h);
  auto arr = nlohmann::json::array();
  if (degree % 2 == 0) {  // odd cohomological degrees vanish identically
    CohomologyContext ctx(g, lat);
    for (const auto& xi : ctx.equivariant_basis(degree / 2)) {
      nlohmann::json entry;
      for (int v = 0; v < g.vertex_count(); ++v)
        entry[g.vertex_id(v)] = xi.value(v).to_string();
      arr.push_back(std::move(entry));
    }
  }
  out << arr.dump(2) << "\n";
  return 0;
}

int cmd_unipotent_sweep(int n, std::ostream& out) {
  if (n < 2 || n > kSweepGuard)
    throw UsageError("--n must be between 2 and " + std::to_string(kSweepGuard));
  auto arr = nlohmann::json::array();
  for (const auto& h : HessenbergFunction::all(n)) {
    if (h.is_full_flag()) continue;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        arr.push_back(witness_certificate(h, i, j));
      }
  }
  out << arr.dump(2) << "\n";
  return 0;
}

int cmd_verify(int n, std::ostream& out, std::ostream& err) {
  if (n < 1) throw UsageError("--n must be positive");
  if (n > kSweepGuard)
    throw UsageError("verification capped at n = " + std::to_string(kSweepGuard));
  const auto results = run_acceptance(n, err);
  print_results(results, out);
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"GKM graphs of regular semisimple Hessenberg varieties: exact "
               "construction, automorphisms, graph cohomology, and verification"};
  app.require_subcommand(1);
  // --h is a data flag here, so help must not claim the short -h.
  app.set_help_flag("--help", "print help");
  app.option_defaults()->ignore_case(false);

  std::string h_spec, in_file, out_file, format = "json", lattice = "t";
  int degree = 0, max_degree = -1, n = 4;
  bool count_only = false, unsafe_large = false;

  auto* graph = app.add_subcommand("graph", "build and validate labelled graphs");
  graph->require_subcommand(1);
  auto* graph_build = graph->add_subcommand("build", "construct the graph of h");
  graph_build->add_option("--h", h_spec, "Hessenberg function, e.g. 2,3,3")->required();
  graph_build->add_option("--out", out_file, "output file (default stdout)");
  graph_build->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  auto* graph_validate = graph->add_subcommand("validate", "check the axioms");
  graph_validate->add_option("--in", in_file, "graph JSON file")->required();

  auto* aut = app.add_subcommand("aut", "automorphism groups");
  aut->require_subcommand(1);
  auto* aut_enumerate = aut->add_subcommand("enumerate", "list all automorphisms");
  aut_enumerate->add_option("--h", h_spec)->required();
  aut_enumerate->add_flag("--count-only", count_only, "print only the count");
  aut_enumerate->add_flag("--unsafe-large", unsafe_large);
  auto* aut_star_cmd = aut->add_subcommand(
      "star", "automorphisms acting trivially on the ordinary quotient");
  aut_star_cmd->add_option("--h", h_spec)->required();
  aut_star_cmd->add_option("--max-degree", max_degree, "top polynomial degree checked")
      ->required();
  aut_star_cmd->add_flag("--unsafe-large", unsafe_large);

  auto* star = app.add_subcommand("star-condition",
                                  "anti-diagonal symmetry of the staircase");
  star->add_option("--h", h_spec)->required();

  auto* cohomology = app.add_subcommand("cohomology", "graph cohomology");
  cohomology->require_subcommand(1);
  auto* betti = cohomology->add_subcommand("betti", "ordinary Betti numbers");
  betti->add_option("--h", h_spec)->required();
  betti->add_flag("--unsafe-large", unsafe_large);
  auto* equivariant =
      cohomology->add_subcommand("equivariant", "basis of the congruence solutions");
  equivariant->add_option("--h", h_spec)->required();
  equivariant->add_option("--degree", degree, "cohomological degree 2k")->required();
  equivariant->add_option("--lattice", lattice, "t or that")
      ->check(CLI::IsMember({"t", "that"}));
  equivariant->add_flag("--unsafe-large", unsafe_large);

  auto* unipotent = app.add_subcommand("unipotent", "staircase-space certificates");
  unipotent->require_subcommand(1);
  auto* sweep = unipotent->add_subcommand(
      "sweep", "witnesses for every h below the full flag and every (i,j)");
  sweep->add_option("--n", n)->required();

  auto* verify = app.add_subcommand("verify", "run the verification battery");
  verify->require_subcommand(1);
  auto* verify_all = verify->add_subcommand("all", "all criteria up to --n");
  verify_all->add_option("--n", n)->required();

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (graph_build->parsed()) return cmd_graph_build(h_spec, out_file, format, out);
    if (graph_validate->parsed()) return cmd_graph_validate(in_file, out);
    if (aut_enumerate->parsed())
      return cmd_aut_enumerate(h_spec, count_only, unsafe_large, out);
    if (aut_star_cmd->parsed())
      return cmd_aut_star(h_spec, max_degree, unsafe_large, out);
    if (star->parsed()) return cmd_star_condition(h_spec, out);
    if (betti->parsed()) return cmd_betti(h_spec, unsafe_large, out);
    if (equivariant->parsed())
      return cmd_equivariant(h_spec, degree, lattice, unsafe_large, out);
    if (sweep->parsed()) return cmd_unipotent_sweep(n, out);
    if (verify_all->parsed()) return cmd_verify(n, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace gkm
