#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edgespace {

// Vertex and edge identities are opaque, totally ordered integers. All
// iteration orders and tie-breaks in the library are keyed on them.
using VertexId = std::int64_t;
using EdgeId = std::int64_t;

// Budgets for the enumeration-backed operations. Exceeding a budget raises
// bound_exceeded; nothing is ever silently sampled instead.
struct Limits {
  int vertex_bound = 12;          // whole-graph circuit/bond enumeration
  int subset_size_bound = 4;      // finite-side size for interior cut scans
  int circuit_length_bound = 16;  // edge-length cap for window circuit scans
};

class bound_exceeded : public std::runtime_error {
 public:
  explicit bound_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edgespace
