#include "edgespace/generators.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

namespace edgespace {

namespace {

// Szudzik pairing: a bijection N x N -> N, monotone enough to keep window
// identities small.
std::int64_t pair64(std::int64_t a, std::int64_t b) {
  assert(a >= 0 && b >= 0);
  return a >= b ? a * a + a + b : b * b + a;
}

std::pair<std::int64_t, std::int64_t> unpair64(std::int64_t t) {
  assert(t >= 0);
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(t)));
  while (s * s > t) --s;
  while ((s + 1) * (s + 1) <= t) ++s;
  std::int64_t r = t - s * s;
  if (r < s) return {r, s};
  return {s, r - s};
}

std::int64_t zigzag(std::int64_t z) { return z >= 0 ? 2 * z : -2 * z - 1; }
std::int64_t unzigzag(std::int64_t n) {
  return n % 2 == 0 ? n / 2 : -(n + 1) / 2;
}

EdgeId edge_between(VertexId a, VertexId b) {
  return pair64(std::min(a, b), std::max(a, b));
}

std::vector<NeighborEntry> sorted_entries(
    std::vector<std::pair<VertexId, VertexId>> pairs, VertexId self) {
  std::vector<NeighborEntry> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    VertexId other = a == self ? b : a;
    out.push_back({edge_between(a, b), other});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// ladder: vertices (n, s) with n >= 0, s in {0,1}; rungs (n,0)-(n,1) and
// rails (n,s)-(n+1,s). One end of vertex-degree 2; the two rails are the
// canonical rays.
class Ladder : public GeneratorGraph {
 public:
  static VertexId vid(std::int64_t n, int s) { return 2 * n + s; }

  std::string name() const override { return "ladder"; }
  VertexId root() const override { return vid(0, 0); }

  std::vector<NeighborEntry> neighbors(VertexId v) const override {
    std::int64_t n = v / 2;
    int s = static_cast<int>(v % 2);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.push_back({v, vid(n, 1 - s)});               // rung
    pairs.push_back({v, vid(n + 1, s)});               // rail right
    if (n > 0) pairs.push_back({v, vid(n - 1, s)});    // rail left
    return sorted_entries(std::move(pairs), v);
  }

  std::string vertex_label(VertexId v) const override {
    std::ostringstream os;
    os << "(" << v / 2 << "," << v % 2 << ")";
    return os.str();
  }

  EndInfo end_info(int) const override { return {2, 2}; }

  std::vector<VertexId> ray_prefix(int, int index, int length) const override {
    std::vector<VertexId> out;
    for (int i = 0; i < length; ++i) out.push_back(vid(i, index));
    return out;
  }

  std::vector<VertexId> fan_sources(const Window& w) const override {
    std::vector<VertexId> out;
    for (std::int64_t n = 0; w.distance.count(vid(n, 1)); ++n) {
      out.push_back(vid(n, 1));
    }
    return out;
  }

  std::vector<std::pair<VertexId, VertexId>> linkage_pairs(
      const Window& w) const override {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::int64_t n = 0;
         w.distance.count(vid(n, 0)) && w.distance.count(vid(n, 1)); ++n) {
      out.push_back({vid(n, 0), vid(n, 1)});
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// subdivided_ladder: the ladder with every rung subdivided. The subdivided
// edge family (an infinite bond of the ladder: the set of all rungs) is the
// documented convention. Vertices: (n,0) -> 3n, (n,1) -> 3n+1, midpoint of
// rung n -> 3n+2. The distinguished set D holds the edges incident with the
// midpoints, i.e. both halves of every rung.
class SubdividedLadder : public GeneratorGraph {
 public:
  static VertexId rail(std::int64_t n, int s) { return 3 * n + s; }
  static VertexId mid(std::int64_t n) { return 3 * n + 2; }

  std::string name() const override { return "subdivided_ladder"; }
  VertexId root() const override { return rail(0, 0); }

  std::vector<NeighborEntry> neighbors(VertexId v) const override {
    std::int64_t n = v / 3;
    int kind = static_cast<int>(v % 3);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (kind == 2) {
      pairs.push_back({v, rail(n, 0)});
      pairs.push_back({v, rail(n, 1)});
    } else {
      pairs.push_back({v, mid(n)});
      pairs.push_back({v, rail(n + 1, kind)});
      if (n > 0) pairs.push_back({v, rail(n - 1, kind)});
    }
    return sorted_entries(std::move(pairs), v);
  }

  std::string vertex_label(VertexId v) const override {
    std::ostringstream os;
    std::int64_t n = v / 3;
    if (v % 3 == 2) {
      os << "m_" << n;
    } else {
      os << "(" << n << "," << v % 3 << ")";
    }
    return os.str();
  }

  EndInfo end_info(int) const override { return {2, 2}; }

  std::vector<VertexId> ray_prefix(int, int index, int length) const override {
    std::vector<VertexId> out;
    for (int i = 0; i < length; ++i) out.push_back(rail(i, index));
    return out;
  }

  bool has_distinguished_set() const override { return true; }
  bool in_distinguished_set(EdgeId e) const override {
    auto [a, b] = unpair64(e);
    return a % 3 == 2 || b % 3 == 2;
  }

  std::vector<VertexId> fan_sources(const Window& w) const override {
    std::vector<VertexId> out;
    for (std::int64_t n = 0; w.distance.count(mid(n)); ++n) {
      out.push_back(mid(n));
    }
    return out;
  }

  std::vector<std::pair<VertexId, VertexId>> linkage_pairs(
      const Window& w) const override {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::int64_t n = 0;
         w.distance.count(rail(n, 0)) && w.distance.count(rail(n, 1)); ++n) {
      out.push_back({rail(n, 0), rail(n, 1)});
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// grid_NZ: the quarter-infinite strip N x Z; vertices (n, z) with n >= 0,
// z in Z. One end of unbounded vertex-degree; canonical ray i climbs
// column i from row 0.
class GridNZ : public GeneratorGraph {
 public:
  static VertexId vid(std::int64_t n, std::int64_t z) {
    return pair64(n, zigzag(z));
  }
  static std::pair<std::int64_t, std::int64_t> coords(VertexId v) {
    auto [n, zz] = unpair64(v);
    return {n, unzigzag(zz)};
  }

  std::string name() const override { return "grid_NZ"; }
  VertexId root() const override { return vid(0, 0); }

  std::vector<NeighborEntry> neighbors(VertexId v) const override {
    auto [n, z] = coords(v);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.push_back({v, vid(n + 1, z)});
    if (n > 0) pairs.push_back({v, vid(n - 1, z)});
    pairs.push_back({v, vid(n, z + 1)});
    pairs.push_back({v, vid(n, z - 1)});
    return sorted_entries(std::move(pairs), v);
  }

  std::string vertex_label(VertexId v) const override {
    auto [n, z] = coords(v);
    std::ostringstream os;
    os << "(" << n << "," << z << ")";
    return os.str();
  }

  EndInfo end_info(int) const override {
    return {std::nullopt, std::numeric_limits<int>::max()};
  }

  std::vector<VertexId> ray_prefix(int, int index, int length) const override {
    std::vector<VertexId> out;
    for (int i = 0; i < length; ++i) out.push_back(vid(index, i));
    return out;
  }

  // Fan sources climb the diagonal away from the target column, so greedy
  // fan families have room to stay disjoint.
  std::vector<VertexId> fan_sources(const Window& w) const override {
    std::vector<VertexId> out;
    for (std::int64_t n = 1; w.distance.count(vid(n, n)); ++n) {
      out.push_back(vid(n, n));
    }
    return out;
  }

  std::vector<std::pair<VertexId, VertexId>> linkage_pairs(
      const Window& w) const override {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::int64_t n = 0;
         w.distance.count(vid(n, 1)) && w.distance.count(vid(n, -1)); ++n) {
      out.push_back({vid(n, 1), vid(n, -1)});
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// doubled_grid: from grid_NZ, every edge between two degree-3 vertices (the
// column-0 verticals) gains a second copy, and each new copy is subdivided by
// a midpoint m_z. The distinguished set D holds the edges lying in a
// triangle: the column-0 verticals and both halves of every subdivided copy.
class DoubledGrid : public GeneratorGraph {
 public:
  static VertexId grid(std::int64_t n, std::int64_t z) {
    return 2 * pair64(n, zigzag(z));
  }
  static VertexId mid(std::int64_t z) { return 2 * zigzag(z) + 1; }

  static bool is_mid(VertexId v) { return v % 2 != 0; }
  static std::pair<std::int64_t, std::int64_t> grid_coords(VertexId v) {
    auto [n, zz] = unpair64(v / 2);
    return {n, unzigzag(zz)};
  }
  static std::int64_t mid_coord(VertexId v) { return unzigzag(v / 2); }

  std::string name() const override { return "doubled_grid"; }
  VertexId root() const override { return grid(0, 0); }

  std::vector<NeighborEntry> neighbors(VertexId v) const override {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (is_mid(v)) {
      std::int64_t z = mid_coord(v);
      pairs.push_back({v, grid(0, z)});
      pairs.push_back({v, grid(0, z + 1)});
    } else {
      auto [n, z] = grid_coords(v);
      pairs.push_back({v, grid(n + 1, z)});
      if (n > 0) pairs.push_back({v, grid(n - 1, z)});
      pairs.push_back({v, grid(n, z + 1)});
      pairs.push_back({v, grid(n, z - 1)});
      if (n == 0) {
        pairs.push_back({v, mid(z)});
        pairs.push_back({v, mid(z - 1)});
      }
    }
    return sorted_entries(std::move(pairs), v);
  }

  std::string vertex_label(VertexId v) const override {
    std::ostringstream os;
    if (is_mid(v)) {
      os << "m_" << mid_coord(v);
    } else {
      auto [n, z] = grid_coords(v);
      os << "(" << n << "," << z << ")";
    }
    return os.str();
  }

  EndInfo end_info(int) const override {
    return {std::nullopt, std::numeric_limits<int>::max()};
  }

  std::vector<VertexId> ray_prefix(int, int index, int length) const override {
    std::vector<VertexId> out;
    for (int i = 0; i < length; ++i) out.push_back(grid(index, i));
    return out;
  }

  bool has_distinguished_set() const override { return true; }
  bool in_distinguished_set(EdgeId e) const override {
    auto [a, b] = unpair64(e);
    if (is_mid(a) || is_mid(b)) return true;  // half of a subdivided copy
    auto [na, za] = grid_coords(a);
    auto [nb, zb] = grid_coords(b);
    return na == 0 && nb == 0 && std::abs(za - zb) == 1;  // column-0 vertical
  }

  std::vector<VertexId> fan_sources(const Window& w) const override {
    std::vector<VertexId> out;
    for (std::int64_t i = 0;; ++i) {
      std::int64_t z = unzigzag(i);
      if (!w.distance.count(mid(z))) break;
      out.push_back(mid(z));
    }
    return out;
  }

  int fan_target_ray(int) const override { return 1; }

  std::vector<std::pair<VertexId, VertexId>> linkage_pairs(
      const Window& w) const override {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::int64_t n = 0;
         w.distance.count(grid(n, 1)) && w.distance.count(grid(n, -1)); ++n) {
      out.push_back({grid(n, 1), grid(n, -1)});
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// clique_chain: complete graphs K_1, K_2, ... with |K_i| = i, each meeting
// the next in exactly one vertex. Vertices: s_i = (i,0) is shared by K_i and
// K_{i+1}; the interior of K_i is (i,j) for j = 1..i-2. The single end has
// vertex-degree 1 (every ray passes through all but finitely many s_i). The
// canonical ray walks every clique through all but its last interior vertex;
// the skipped vertices are the fan-study sources.
class CliqueChain : public GeneratorGraph {
 public:
  static VertexId vid(std::int64_t i, std::int64_t j) { return pair64(i, j); }
  static std::pair<std::int64_t, std::int64_t> coords(VertexId v) {
    return unpair64(v);
  }

  std::string name() const override { return "clique_chain"; }
  VertexId root() const override { return vid(1, 0); }

  // Members of K_i (i >= 2): s_{i-1}, interiors, s_i.
  static std::vector<VertexId> clique_members(std::int64_t i) {
    std::vector<VertexId> out;
    out.push_back(vid(i - 1, 0));
    for (std::int64_t j = 1; j + 1 < i; ++j) out.push_back(vid(i, j));
    out.push_back(vid(i, 0));
    return out;
  }

  std::vector<NeighborEntry> neighbors(VertexId v) const override {
    auto [i, j] = coords(v);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    auto add_clique = [&](std::int64_t c) {
      for (VertexId w : clique_members(c)) {
        if (w != v) pairs.push_back({v, w});
      }
    };
    if (j == 0) {
      if (i >= 2) add_clique(i);  // s_i inside K_i
      add_clique(i + 1);          // and K_{i+1}
    } else {
      add_clique(i);
    }
    return sorted_entries(std::move(pairs), v);
  }

  std::string vertex_label(VertexId v) const override {
    auto [i, j] = coords(v);
    std::ostringstream os;
    if (j == 0) {
      os << "s_" << i;
    } else {
      os << "x_" << i << "_" << j;
    }
    return os.str();
  }

  EndInfo end_info(int) const override { return {1, 1}; }

  std::vector<VertexId> ray_prefix(int, int index, int length) const override {
    if (index != 0) return {};
    std::vector<VertexId> out;
    out.push_back(vid(1, 0));
    std::int64_t i = 2;
    while (static_cast<int>(out.size()) < length) {
      // Walk K_i: interiors 1..i-3, then s_i (the last interior is skipped).
      for (std::int64_t j = 1; j + 2 < i && static_cast<int>(out.size()) < length;
           ++j) {
        out.push_back(vid(i, j));
      }
      if (static_cast<int>(out.size()) < length) out.push_back(vid(i, 0));
      ++i;
    }
    return out;
  }

  std::vector<VertexId> fan_sources(const Window& w) const override {
    std::vector<VertexId> out;
    for (std::int64_t i = 3; w.distance.count(vid(i, i - 2)); ++i) {
      out.push_back(vid(i, i - 2));
    }
    return out;
  }
};

}  // namespace

Window make_window(const GeneratorGraph& gen, int radius) {
  if (radius < 0) throw std::invalid_argument("make_window: negative radius");
  Window w;
  w.radius = radius;
  w.root = gen.root();
  w.distance[w.root] = 0;
  std::deque<VertexId> queue{w.root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (w.distance[v] == radius) continue;
    for (const auto& [e, to] : gen.neighbors(v)) {
      if (!w.distance.count(to)) {
        w.distance[to] = w.distance[v] + 1;
        queue.push_back(to);
      }
    }
  }

  std::vector<VertexId> vertices;
  std::vector<VertexId> boundary;
  std::map<EdgeId, EdgeRec> edges;
  for (const auto& [v, d] : w.distance) {
    vertices.push_back(v);
    bool incomplete = false;
    for (const auto& [e, to] : gen.neighbors(v)) {
      if (w.distance.count(to)) {
        if (v < to) edges.emplace(e, EdgeRec{e, v, to});
      } else {
        incomplete = true;
      }
    }
    if (incomplete) boundary.push_back(v);
  }
  std::vector<EdgeRec> edge_list;
  edge_list.reserve(edges.size());
  std::vector<EdgeId> dset;
  for (const auto& [id, rec] : edges) {
    edge_list.push_back(rec);
    if (gen.has_distinguished_set() && gen.in_distinguished_set(id)) {
      dset.push_back(id);
    }
  }
  w.graph = MultiGraph(std::move(vertices), std::move(edge_list),
                       std::move(boundary));
  w.distinguished = EdgeSet::from_sorted(std::move(dset));
  return w;
}

const std::vector<std::shared_ptr<const GeneratorGraph>>& generator_catalog() {
  static const std::vector<std::shared_ptr<const GeneratorGraph>> catalog = {
      std::make_shared<Ladder>(),
      std::make_shared<SubdividedLadder>(),
      std::make_shared<GridNZ>(),
      std::make_shared<DoubledGrid>(),
      std::make_shared<CliqueChain>(),
  };
  return catalog;
}

std::shared_ptr<const GeneratorGraph> find_generator(const std::string& name) {
  for (const auto& gen : generator_catalog()) {
    if (gen->name() == name) return gen;
  }
  return nullptr;
}

std::vector<VertexId> ray_in_window(const GeneratorGraph& gen, const Window& w,
                                    int end, int index) {
  std::vector<VertexId> out;
  int budget = 16;
  const int cap = static_cast<int>(w.graph.vertex_count()) + 2;
  while (true) {
    std::vector<VertexId> prefix = gen.ray_prefix(end, index, budget);
    out.clear();
    for (VertexId v : prefix) {
      if (!w.distance.count(v)) return out;
      out.push_back(v);
    }
    if (static_cast<int>(prefix.size()) < budget) return out;  // ray exhausted
    if (budget > cap) return out;  // ray never leaves the window
    budget *= 2;
  }
}

RayPath truncate_ray(const GeneratorGraph& gen, int end, int index,
                     int radius) {
  Window w = make_window(gen, radius);
  RayPath ray{end, index, ray_in_window(gen, w, end, index)};
  return ray;
}

std::vector<RayPath> disjoint_rays(const GeneratorGraph& gen, int end,
                                   int count, int radius) {
  if (count <= 0) throw std::invalid_argument("disjoint_rays: count <= 0");
  EndInfo info = gen.end_info(end);
  if (count > info.disjoint_ray_limit) {
    throw std::invalid_argument(
        "disjoint_rays: " + gen.name() + " cannot supply " +
        std::to_string(count) + " disjoint rays (limit " +
        std::to_string(info.disjoint_ray_limit) + ")");
  }
  Window w = make_window(gen, radius);
  std::vector<RayPath> rays;
  std::set<VertexId> seen;
  for (int i = 0; i < count; ++i) {
    RayPath ray{end, i, ray_in_window(gen, w, end, i)};
    if (ray.vertices.empty()) {
      throw std::invalid_argument(
          "disjoint_rays: ray " + std::to_string(i) +
          " does not enter window(" + std::to_string(radius) + ")");
    }
    int deepest = 0;
    for (VertexId v : ray.vertices) {
      deepest = std::max(deepest, w.distance.at(v));
      if (!seen.insert(v).second) {
        throw std::logic_error("disjoint_rays: canonical rays intersect");
      }
    }
    if (deepest < radius) {
      throw std::invalid_argument(
          "disjoint_rays: ray " + std::to_string(i) +
          " does not reach the boundary of window(" + std::to_string(radius) +
          ")");
    }
    rays.push_back(std::move(ray));
  }
  return rays;
}

namespace gen_ids {

VertexId ladder(std::int64_t n, int side) { return Ladder::vid(n, side); }

VertexId subdivided_rail(std::int64_t n, int side) {
  return SubdividedLadder::rail(n, side);
}
VertexId subdivided_mid(std::int64_t n) { return SubdividedLadder::mid(n); }
bool subdivided_is_mid(VertexId v) { return v % 3 == 2; }

VertexId grid(std::int64_t n, std::int64_t z) { return GridNZ::vid(n, z); }

VertexId doubled_grid(std::int64_t n, std::int64_t z) {
  return DoubledGrid::grid(n, z);
}
VertexId doubled_mid(std::int64_t z) { return DoubledGrid::mid(z); }
bool doubled_is_mid(VertexId v) { return DoubledGrid::is_mid(v); }

VertexId clique(std::int64_t i, std::int64_t j) {
  return CliqueChain::vid(i, j);
}

}  // namespace gen_ids

std::vector<VertexId> ray_component(const GeneratorGraph& gen, const Window& w,
                                    const std::vector<VertexId>& S, int end) {
  for (VertexId v : S) {
    if (!w.distance.count(v)) {
      throw std::invalid_argument("ray_component: S vertex " +
                                  std::to_string(v) + " outside the window");
    }
  }
  std::vector<VertexId> ray = ray_in_window(gen, w, end, 0);
  if (ray.empty()) {
    throw std::invalid_argument("ray_component: ray absent from the window");
  }
  std::set<VertexId> cut(S.begin(), S.end());
  VertexId tail = ray.back();
  if (cut.count(tail)) {
    throw std::invalid_argument(
        "ray_component: the canonical ray is absorbed by S in this window; "
        "increase r");
  }
  MultiGraph rest = w.graph.minus_vertices(S);
  for (const auto& comp : components(rest)) {
    if (std::binary_search(comp.begin(), comp.end(), tail)) return comp;
  }
  throw std::logic_error("ray_component: tail vertex lost");
}

}  // namespace edgespace
