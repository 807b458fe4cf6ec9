#pragma once

#include <iosfwd>
#include <string>

#include "edgespace/f2.hpp"
#include "edgespace/graph.hpp"

namespace edgespace {

// Plain text graph format:
//
//   graph <name>
//   # boundary: 6 7          (optional; parsed back into boundary marks)
//   v <vertex-id>
//   e <edge-id> <u> <v>
//   d <edge-id>              (optional distinguished-set lines)
//
// '#' starts a comment; the "# boundary:" form is recognized on read and
// re-emitted on write, so serialize(parse(file)) == file on canonical files
// (header, boundary, vertices ascending, edges ascending, d-lines ascending).
struct GraphFile {
  std::string name;
  MultiGraph graph;
  EdgeSet distinguished;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

GraphFile parse_graph_file(std::istream& in);
GraphFile load_graph_file(const std::string& path);  // throws parse_error

std::string serialize_graph_file(const GraphFile& file);

}  // namespace edgespace
