// Command-line front end: graph/file I/O, generator windows, space and
// decomposition queries, and the experiment runner with JSON reports.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "edgespace/generators.hpp"
#include "edgespace/io.hpp"
#include "edgespace/spaces.hpp"
#include "edgespace/verify.hpp"

namespace {

using namespace edgespace;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitBound = 4;

Limits limits_from_env() {
  Limits limits;
  if (const char* env = std::getenv("EDGESPACE_BOUND")) {
    try {
      limits.vertex_bound = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("EDGESPACE_BOUND is not an integer");
    }
  }
  return limits;
}

std::vector<int> parse_radii(const std::string& text) {
  std::vector<int> out;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    int a = std::stoi(text.substr(0, dots));
    int b = std::stoi(text.substr(dots + 2));
    for (int r = a; r <= b; ++r) out.push_back(r);
  } else {
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("empty radii list");
  return out;
}

EdgeSet parse_set_flag(const std::string& set_flag,
                       const std::string& set_file) {
  std::vector<EdgeId> ids;
  if (!set_file.empty()) {
    std::ifstream in(set_file);
    if (!in) throw std::invalid_argument("cannot open '" + set_file + "'");
    std::string tok;
    while (in >> tok) {
      if (tok == "d") continue;
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      ids.push_back(std::stoll(tok));
    }
  }
  std::string item;
  std::istringstream is(set_flag);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) ids.push_back(std::stoll(item));
  }
  return EdgeSet(std::move(ids));
}

void print_basis(const Basis& basis) {
  std::cout << "dimension " << basis.dimension() << "\n";
  for (std::size_t i = 0; i < basis.vectors().size(); ++i) {
    std::cout << "basis[" << i << "] =";
    for (EdgeId e : basis.vectors()[i]) std::cout << " " << e;
    std::cout << "\n";
  }
}

int cmd_spaces(const std::string& input, const std::string& space) {
  auto tag = parse_space_tag(space);
  if (!tag) {
    std::cerr << "error: unknown space '" << space
              << "' (expected C_fin, C_top, C_alg, B, B_fin, B_sk)\n";
    return kExitUsage;
  }
  GraphFile file = load_graph_file(input);
  std::cout << "graph " << file.name << ": " << file.graph.vertex_count()
            << " vertices, " << file.graph.edge_count() << " edges\n";
  auto comps = components(file.graph);
  if (comps.size() != 1) {
    std::cerr << "error: graph is not connected";
    if (comps.size() > 1) {
      std::cerr << " (vertex " << comps[1].front()
                << " is unreachable from vertex " << comps[0].front() << ")";
    }
    std::cerr << "\n";
    return kExitDisconnected;
  }
  std::cout << "space " << to_string(*tag) << "\n";
  switch (*tag) {
    case SpaceTag::c_fin:
      print_basis(cycle_space_basis(file.graph));
      break;
    case SpaceTag::c_top:
    case SpaceTag::c_alg:
      std::cout << "note: coincides with C_fin on finite graphs\n";
      print_basis(cycle_space_basis(file.graph));
      break;
    case SpaceTag::cuts:
      print_basis(cut_space_basis(file.graph));
      break;
    case SpaceTag::cuts_fin:
    case SpaceTag::cuts_skew:
      std::cout << "note: coincides with B on finite graphs\n";
      print_basis(cut_space_basis(file.graph));
      break;
  }
  return kExitOk;
}

int cmd_check(const std::string& input, const std::string& set_flag,
              const std::string& set_file, const std::string& space,
              bool exhaustive) {
  Limits limits = limits_from_env();
  GraphFile file = load_graph_file(input);
  EdgeSet D = parse_set_flag(set_flag, set_file);
  if (D.empty() && !file.distinguished.empty()) D = file.distinguished;
  for (EdgeId e : D) {
    if (!file.graph.has_edge(e)) {
      std::cerr << "error: unknown edge id " << e << " in --set\n";
      return kExitUsage;
    }
  }
  auto tag = parse_space_tag(space);
  if (!tag) {
    std::cerr << "error: unknown space '" << space << "'\n";
    return kExitUsage;
  }
  std::cout << "graph " << file.name << ": " << file.graph.vertex_count()
            << " vertices, " << file.graph.edge_count() << " edges\n";
  std::cout << "set = " << D.to_string() << "\n";

  MembershipResult mem = membership(*tag, file.graph, D, limits);
  std::cout << "membership " << to_string(*tag) << ": "
            << (mem.member ? "member" : "non-member") << " (" << mem.note
            << ")\n";
  if (mem.coordinates) {
    std::cout << "  coordinates =";
    for (std::size_t i : *mem.coordinates) std::cout << " " << i;
    std::cout << "\n";
  }
  if (mem.odd_vertex) {
    std::cout << "  odd-degree vertex witness: " << *mem.odd_vertex << "\n";
  }
  if (mem.violating_cut) {
    std::cout << "  violating cut witness: " << mem.violating_cut->to_string()
              << "\n";
  }

  bool over_bound = file.graph.vertex_count() >
                    static_cast<std::size_t>(limits.vertex_bound);
  if (over_bound) {
    if (exhaustive) {
      std::cerr << "error: bound exceeded (" << file.graph.vertex_count()
                << " vertices > " << limits.vertex_bound
                << "; set EDGESPACE_BOUND to raise)\n";
      return kExitBound;
    }
    std::cout << "orthogonality audit skipped: vertex bound "
              << limits.vertex_bound << " exceeded\n";
    return kExitOk;
  }
  Report rep = verify_minimal_orthogonality_finite(file.graph, D, limits);
  std::cout << rep.human_summary();
  return rep.has_failure() ? kExitCheckFailed : kExitOk;
}

int cmd_generate(const std::string& name, int radius,
                 const std::string& out_path) {
  auto gen = find_generator(name);
  if (!gen) {
    std::cerr << "error: unknown generator '" << name << "'; catalog:";
    for (const auto& g : generator_catalog()) std::cerr << " " << g->name();
    std::cerr << "\n";
    return kExitUsage;
  }
  Window w = make_window(*gen, radius);
  GraphFile file{name + "_r" + std::to_string(radius), w.graph,
                 w.distinguished};
  std::string text = serialize_graph_file(file);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    out << text;
  }
  return kExitOk;
}

int cmd_verify(const std::string& experiment, const std::string& input,
               const std::string& set_flag, const std::string& set_file,
               const std::string& generator, const std::string& radii_flag,
               int k, int s_radius, int bound, int margin,
               const std::string& mode, const std::string& json_path) {
  Limits limits = limits_from_env();
  const std::vector<std::string> known = {
      "duality_finite", "cor_finite", "ce_bond",    "ce_ctop",       "ce_calg",
      "fan_growth",     "padded",     "end_degree", "theorem_window"};
  if (std::find(known.begin(), known.end(), experiment) == known.end()) {
    std::cerr << "error: unknown experiment '" << experiment
              << "'; known:";
    for (const auto& name : known) std::cerr << " " << name;
    std::cerr << "\n";
    return kExitUsage;
  }

  auto need_generator = [&]() -> std::shared_ptr<const GeneratorGraph> {
    auto gen = find_generator(generator);
    if (!gen) {
      std::cerr << "error: experiment '" << experiment
                << "' needs --generator (one of:";
      for (const auto& g : generator_catalog()) std::cerr << " " << g->name();
      std::cerr << ")\n";
    }
    return gen;
  };
  auto radii_or = [&](const char* fallback) {
    return parse_radii(radii_flag.empty() ? fallback : radii_flag);
  };

  std::optional<Report> rep;
  if (experiment == "duality_finite" || experiment == "cor_finite") {
    if (input.empty()) {
      std::cerr << "error: experiment '" << experiment << "' needs --input\n";
      return kExitUsage;
    }
    GraphFile file = load_graph_file(input);
    if (experiment == "duality_finite") {
      rep = verify_duality_finite(file.graph, limits);
    } else {
      EdgeSet D = parse_set_flag(set_flag, set_file);
      if (D.empty() && !file.distinguished.empty()) D = file.distinguished;
      for (EdgeId e : D) {
        if (!file.graph.has_edge(e)) {
          std::cerr << "error: unknown edge id " << e << " in --set\n";
          return kExitUsage;
        }
      }
      rep = verify_minimal_orthogonality_finite(file.graph, D, limits);
    }
  } else if (experiment == "ce_bond") {
    if (!generator.empty() && generator != "doubled_grid") {
      std::cerr << "error: generator mismatch: ce_bond runs on doubled_grid\n";
      return kExitUsage;
    }
    rep = verify_counterexample_bond(radii_or("3..7"), limits);
  } else if (experiment == "ce_ctop" || experiment == "ce_calg") {
    if (!generator.empty() && generator != "subdivided_ladder") {
      std::cerr << "error: generator mismatch: " << experiment
                << " runs on subdivided_ladder\n";
      return kExitUsage;
    }
    auto radii = radii_or("3..8");
    rep = experiment == "ce_ctop" ? verify_counterexample_ctop(radii, limits)
                                  : verify_counterexample_calg(radii, limits);
  } else if (experiment == "fan_growth") {
    auto gen = need_generator();
    if (!gen) return kExitUsage;
    GrowthMode gm = GrowthMode::fans;
    if (mode == "linkages") {
      gm = GrowthMode::linkages;
    } else if (!mode.empty() && mode != "fans") {
      std::cerr << "error: --mode must be fans or linkages\n";
      return kExitUsage;
    }
    rep = fan_growth_study(*gen, k, radii_or("3..8"), gm);
  } else if (experiment == "padded") {
    auto gen = need_generator();
    if (!gen) return kExitUsage;
    rep = padded_witness_radius(*gen, 0, k, s_radius, bound, margin);
  } else if (experiment == "end_degree") {
    auto gen = need_generator();
    if (!gen) return kExitUsage;
    rep = end_degree_estimate(*gen, 0, radii_or("2..8"));
  } else if (experiment == "theorem_window") {
    auto gen = need_generator();
    if (!gen) return kExitUsage;
    rep = verify_theorem_window(*gen, radii_or("3..6"), limits);
  }

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << json_path << "'\n";
      return kExitUsage;
    }
    out << rep->to_json().dump(2) << "\n";
  }
  std::cout << rep->human_summary();
  return rep->has_failure() ? kExitCheckFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GF(2) edge-space toolkit: cycle/cut spaces, decompositions, "
               "Menger fans, and window experiments on finitely presented "
               "infinite graphs"};
  app.require_subcommand(1);

  std::string input, space = "C_fin", set_flag, set_file;
  bool exhaustive = false;
  std::string gen_name, out_path;
  int radius = 3;
  std::string experiment, radii_flag, mode, json_path;
  int k = 3, s_radius = 2, bound = 12, margin = 4;
  std::string verify_generator;

  auto* spaces = app.add_subcommand("spaces", "Print a space basis");
  spaces->add_option("--input", input, "graph file")->required();
  spaces->add_option("--space", space, "C_fin, C_top, C_alg, B, B_fin, B_sk");

  auto* check = app.add_subcommand(
      "check", "Membership and minimal-element orthogonality audit");
  check->add_option("--input", input, "graph file")->required();
  check->add_option("--set", set_flag, "comma-separated edge ids");
  check->add_option("--set-file", set_file, "file with edge ids or d-lines");
  check->add_option("--space", space, "space tag for the membership check");
  check->add_flag("--exhaustive", exhaustive,
                  "fail instead of skipping when the audit bound is exceeded");

  auto* generate =
      app.add_subcommand("generate", "Write a generator window as a graph file");
  generate->add_option("--generator", gen_name, "generator name")->required();
  generate->add_option("--radius", radius, "window radius")->required();
  generate->add_option("--out", out_path, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run an experiment");
  verify->add_option("--experiment", experiment, "experiment name")->required();
  verify->add_option("--input", input, "graph file (finite experiments)");
  verify->add_option("--set", set_flag, "edge set (cor_finite)");
  verify->add_option("--set-file", set_file, "edge set file (cor_finite)");
  verify->add_option("--generator", verify_generator, "generator name");
  verify->add_option("--radii", radii_flag, "radius range a..b or list");
  verify->add_option("--k", k, "fan/linkage arity");
  verify->add_option("--s-radius", s_radius, "separator ball radius (padded)");
  verify->add_option("--bound", bound, "search bound (padded)");
  verify->add_option("--margin", margin, "window margin (padded)");
  verify->add_option("--mode", mode, "fans or linkages (fan_growth)");
  verify->add_option("--json", json_path, "write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (spaces->parsed()) return cmd_spaces(input, space);
    if (check->parsed()) {
      return cmd_check(input, set_flag, set_file, space, exhaustive);
    }
    if (generate->parsed()) return cmd_generate(gen_name, radius, out_path);
    if (verify->parsed()) {
      return cmd_verify(experiment, input, set_flag, set_file,
                        verify_generator, radii_flag, k, s_radius, bound,
                        margin, mode, json_path);
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bound_exceeded& e) {
    std::cerr << "error: " << e.what()
              << " (set EDGESPACE_BOUND to raise)\n";
    return kExitBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
