#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgespace/graph.hpp"

namespace edgespace {

// The finite induced subgraph on the radius-r ball around a generator's root.
// Boundary vertices are those with a generator neighbor outside the ball;
// identities are stable across radii, so Window(r) embeds in Window(r') for
// r < r' with identical ids.
struct Window {
  int radius = 0;
  VertexId root = 0;
  MultiGraph graph;
  std::map<VertexId, int> distance;  // from the root
  EdgeSet distinguished;             // generator's D restricted to the window
};

struct EndInfo {
  std::optional<int> vertex_degree;  // nullopt: unbounded
  int disjoint_ray_limit;            // canonical disjoint rays available
};

// A finitely presented locally finite infinite graph: a symmetric neighbor
// oracle with a root, end metadata with canonical rays, an optional
// distinguished edge set given by a membership predicate, and study plans
// (fan sources / linkage partner pairs) used by the experiment layer.
class GeneratorGraph {
 public:
  virtual ~GeneratorGraph() = default;

  virtual std::string name() const = 0;
  virtual VertexId root() const = 0;
  // Incident (edge id, neighbor) pairs sorted by edge id. Symmetric: u lists
  // v with edge e iff v lists u with edge e.
  virtual std::vector<NeighborEntry> neighbors(VertexId v) const = 0;
  virtual std::string vertex_label(VertexId v) const = 0;

  virtual int end_count() const { return 1; }
  virtual EndInfo end_info(int end) const = 0;
  // First `length` vertices of the indexed canonical ray, origin first.
  // Rays of distinct index are pairwise vertex-disjoint.
  virtual std::vector<VertexId> ray_prefix(int end, int index,
                                           int length) const = 0;

  virtual bool has_distinguished_set() const { return false; }
  virtual bool in_distinguished_set(EdgeId) const { return false; }

  // Study plans (empty where a generator has none).
  virtual std::vector<VertexId> fan_sources(const Window&) const { return {}; }
  virtual int fan_target_ray(int) const { return 0; }
  virtual std::vector<std::pair<VertexId, VertexId>> linkage_pairs(
      const Window&) const {
    return {};
  }
};

// Breadth-first ball of the given radius around the root.
Window make_window(const GeneratorGraph& gen, int radius);

// The five built-in generators: ladder, subdivided_ladder, grid_NZ,
// doubled_grid, clique_chain.
const std::vector<std::shared_ptr<const GeneratorGraph>>& generator_catalog();
std::shared_ptr<const GeneratorGraph> find_generator(const std::string& name);

struct RayPath {
  int end = 0;
  int index = 0;
  std::vector<VertexId> vertices;
};

// Maximal prefix of the canonical ray inside an existing window.
std::vector<VertexId> ray_in_window(const GeneratorGraph& gen, const Window& w,
                                    int end, int index);

// Maximal truncation of the indexed canonical ray inside window(radius).
RayPath truncate_ray(const GeneratorGraph& gen, int end, int index, int radius);

// `count` pairwise vertex-disjoint ray truncations reaching the boundary of
// window(radius). Throws std::invalid_argument when the generator cannot
// supply that many disjoint rays (metadata limit or window too small).
std::vector<RayPath> disjoint_rays(const GeneratorGraph& gen, int end,
                                   int count, int radius);

// Vertices of the component of window minus S that contains the deepest
// in-window vertex of the end's canonical ray. Throws std::invalid_argument
// when S swallows the ray's window tail (increase the radius).
std::vector<VertexId> ray_component(const GeneratorGraph& gen, const Window& w,
                                    const std::vector<VertexId>& S, int end);

// Closed-form vertex identities of the built-in generators, for callers that
// need to address specific coordinates (witness constructions, tests).
namespace gen_ids {

VertexId ladder(std::int64_t n, int side);

VertexId subdivided_rail(std::int64_t n, int side);
VertexId subdivided_mid(std::int64_t n);
bool subdivided_is_mid(VertexId v);

VertexId grid(std::int64_t n, std::int64_t z);

VertexId doubled_grid(std::int64_t n, std::int64_t z);
VertexId doubled_mid(std::int64_t z);
bool doubled_is_mid(VertexId v);

VertexId clique(std::int64_t i, std::int64_t j);  // j == 0: shared vertex s_i

}  // namespace gen_ids

}  // namespace edgespace
