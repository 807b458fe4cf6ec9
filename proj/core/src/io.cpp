#include "edgespace/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace edgespace {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_int(const std::string& tok, int line, const char* what) {
  try {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw parse_error(line, std::string("expected ") + what + ", got '" + tok +
                                "'");
  }
}

}  // namespace

GraphFile parse_graph_file(std::istream& in) {
  std::string name;
  bool have_header = false;
  std::vector<VertexId> vertices;
  std::vector<EdgeRec> edges;
  std::vector<VertexId> boundary;
  std::vector<EdgeId> dset;
  std::set<VertexId> vset;
  std::set<EdgeId> eset;
  std::set<EdgeId> dseen;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0][0] == '#') {
      if (toks.size() >= 2 && toks[0] == "#" && toks[1] == "boundary:") {
        for (std::size_t i = 2; i < toks.size(); ++i) {
          boundary.push_back(parse_int(toks[i], lineno, "boundary vertex id"));
        }
      }
      continue;
    }
    if (toks[0] == "graph") {
      if (have_header) throw parse_error(lineno, "duplicate graph header");
      if (toks.size() != 2) throw parse_error(lineno, "usage: graph <name>");
      name = toks[1];
      have_header = true;
    } else if (toks[0] == "v") {
      if (toks.size() != 2) throw parse_error(lineno, "usage: v <id>");
      VertexId v = parse_int(toks[1], lineno, "vertex id");
      if (!vset.insert(v).second) {
        throw parse_error(lineno, "duplicate vertex id " + std::to_string(v));
      }
      vertices.push_back(v);
    } else if (toks[0] == "e") {
      if (toks.size() != 4) {
        throw parse_error(lineno, "usage: e <id> <endpoint> <endpoint>");
      }
      EdgeId id = parse_int(toks[1], lineno, "edge id");
      VertexId u = parse_int(toks[2], lineno, "endpoint id");
      VertexId v = parse_int(toks[3], lineno, "endpoint id");
      if (!eset.insert(id).second) {
        throw parse_error(lineno, "duplicate edge id " + std::to_string(id));
      }
      if (u == v) {
        throw parse_error(lineno,
                          "loop at vertex " + std::to_string(u) + " rejected");
      }
      for (VertexId w : {u, v}) {
        if (!vset.count(w)) {
          throw parse_error(lineno, "endpoint " + std::to_string(w) +
                                        " not declared before use");
        }
      }
      edges.push_back({id, u, v});
    } else if (toks[0] == "d") {
      if (toks.size() != 2) throw parse_error(lineno, "usage: d <edge-id>");
      EdgeId id = parse_int(toks[1], lineno, "edge id");
      if (!eset.count(id)) {
        throw parse_error(lineno, "d-line references unknown edge " +
                                      std::to_string(id));
      }
      if (!dseen.insert(id).second) {
        throw parse_error(lineno, "duplicate d-line for edge " +
                                      std::to_string(id));
      }
      dset.push_back(id);
    } else {
      throw parse_error(lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_header) throw parse_error(lineno, "missing 'graph <name>' header");
  for (VertexId b : boundary) {
    if (!vset.count(b)) {
      throw parse_error(lineno, "boundary vertex " + std::to_string(b) +
                                    " not declared");
    }
  }

  GraphFile file;
  file.name = std::move(name);
  file.graph =
      MultiGraph(std::move(vertices), std::move(edges), std::move(boundary));
  std::sort(dset.begin(), dset.end());
  file.distinguished = EdgeSet::from_sorted(std::move(dset));
  return file;
}

GraphFile load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return parse_graph_file(in);
}

std::string serialize_graph_file(const GraphFile& file) {
  std::ostringstream os;
  os << "graph " << file.name << "\n";
  if (!file.graph.boundary().empty()) {
    os << "# boundary:";
    for (VertexId b : file.graph.boundary()) os << " " << b;
    os << "\n";
  }
  for (VertexId v : file.graph.vertices()) os << "v " << v << "\n";
  for (const auto& e : file.graph.edges()) {
    os << "e " << e.id << " " << std::min(e.u, e.v) << " " << std::max(e.u, e.v)
       << "\n";
  }
  for (EdgeId d : file.distinguished) os << "d " << d << "\n";
  return os.str();
}

}  // namespace edgespace
