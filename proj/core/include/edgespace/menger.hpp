#pragma once

#include <optional>
#include <vector>

#include "edgespace/graph.hpp"

namespace edgespace {

struct Path {
  std::vector<VertexId> vertices;  // at least one vertex
  std::vector<EdgeId> edges;       // one fewer than vertices

  VertexId first() const { return vertices.front(); }
  VertexId last() const { return vertices.back(); }
};

// Result of a Menger computation: a maximum family of pairwise
// vertex-disjoint X-Y paths plus a vertex separator of equal size meeting
// every X-Y path that avoids `forbidden`.
struct MengerResult {
  std::vector<Path> paths;
  std::vector<VertexId> separator;
};

// Maximum family of pairwise vertex-disjoint X-Y paths avoiding `forbidden`,
// computed by unit-vertex-capacity max flow. Paths meet Y only at their last
// vertex. X and Y must be nonempty; forbidden must be disjoint from both.
MengerResult vertex_disjoint_paths(const MultiGraph& g,
                                   const std::vector<VertexId>& X,
                                   const std::vector<VertexId>& Y,
                                   const std::vector<VertexId>& forbidden = {});

// A subdivided k-star: k paths from `center` to the target set, pairwise
// disjoint except at the center, each meeting the target only at its last
// vertex. Path vertices include the center.
struct Fan {
  VertexId center;
  std::vector<Path> paths;
};

struct FanSearch {
  std::optional<Fan> fan;
  // When absent: a vertex separator between the center's neighborhood and Y
  // certifying that fewer than k disjoint paths exist, and the number of
  // distinct neighbors of the center (paths must use distinct first edges,
  // so this bounds any fan).
  std::vector<VertexId> separator;
  std::size_t neighbor_limit = 0;
};

FanSearch k_fan(const MultiGraph& g, VertexId u,
                const std::vector<VertexId>& Y, int k);

// k internally disjoint x-y paths.
struct Linkage {
  VertexId x, y;
  std::vector<Path> paths;
};

struct LinkageSearch {
  std::optional<Linkage> linkage;
  std::vector<VertexId> separator;  // internal-vertex part of a blocking cut
  std::size_t direct_edges_in_cut = 0;
};

LinkageSearch k_linkage(const MultiGraph& g, VertexId x, VertexId y, int k);

// Greedy maximal family of pairwise vertex-disjoint k-fans with distinct
// centers from `sources`, processed in the given order; each accepted fan
// removes its vertices from play.
struct DisjointFanFamily {
  std::vector<Fan> fans;
  struct Miss {
    VertexId source;
    std::vector<VertexId> separator;
    std::size_t neighbor_limit;
  };
  std::vector<Miss> misses;
  std::vector<VertexId> used;  // sorted vertices of all accepted fans
};

DisjointFanFamily max_disjoint_fans(const MultiGraph& g,
                                    const std::vector<VertexId>& sources,
                                    const std::vector<VertexId>& Y, int k);

// Re-verification helpers (used by tests and self-checking reports).
bool validate_path(const MultiGraph& g, const Path& p);
bool validate_fan(const MultiGraph& g, const Fan& fan,
                  const std::vector<VertexId>& Y);
bool validate_linkage(const MultiGraph& g, const Linkage& l);

}  // namespace edgespace
