#include "edgespace/spaces.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

namespace edgespace {

std::string to_string(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::c_fin: return "C_fin";
    case SpaceTag::c_top: return "C_top";
    case SpaceTag::c_alg: return "C_alg";
    case SpaceTag::cuts: return "B";
    case SpaceTag::cuts_fin: return "B_fin";
    case SpaceTag::cuts_skew: return "B_sk";
  }
  return "?";
}

std::optional<SpaceTag> parse_space_tag(const std::string& name) {
  if (name == "C_fin") return SpaceTag::c_fin;
  if (name == "C_top") return SpaceTag::c_top;
  if (name == "C_alg") return SpaceTag::c_alg;
  if (name == "B") return SpaceTag::cuts;
  if (name == "B_fin") return SpaceTag::cuts_fin;
  if (name == "B_sk") return SpaceTag::cuts_skew;
  return std::nullopt;
}

Basis cycle_space_basis(const MultiGraph& g) {
  EdgeSet tree = spanning_tree(g);
  std::vector<EdgeSet> circuits;
  for (const auto& e : g.edges()) {
    if (!tree.contains(e.id)) {
      circuits.push_back(fundamental_circuit(g, tree, e.id));
    }
  }
  return Basis(std::move(circuits), g.edge_ids());
}

Basis cut_space_basis(const MultiGraph& g) {
  EdgeSet tree = spanning_tree(g);
  std::vector<EdgeSet> cuts;
  for (EdgeId e : tree) {
    cuts.push_back(fundamental_cut(g, tree, e));
  }
  return Basis(std::move(cuts), g.edge_ids());
}

std::vector<EdgeSet> enumerate_bonds(const MultiGraph& g,
                                     const Limits& limits) {
  const std::size_t n = g.vertex_count();
  if (n > static_cast<std::size_t>(limits.vertex_bound)) {
    throw bound_exceeded("enumerate_bonds: " + std::to_string(n) +
                         " vertices exceed the bound of " +
                         std::to_string(limits.vertex_bound));
  }
  std::set<EdgeSet> found;
  if (n >= 2) {
    const auto& vs = g.vertices();
    // Fix the least vertex outside A to halve the bipartitions.
    std::uint64_t masks = 1ull << (n - 1);
    for (std::uint64_t m = 1; m < masks; ++m) {
      std::vector<VertexId> A;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (m & (1ull << i)) A.push_back(vs[i + 1]);
      }
      EdgeSet F = cut_from_bipartition(g, A);
      if (!F.empty() && is_bond(g, F)) found.insert(std::move(F));
    }
  }
  std::vector<EdgeSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

// Expands a vertex cycle into all edge-level circuits by choosing one of the
// parallel edges per step.
void expand_parallel_choices(const MultiGraph& g,
                             const std::vector<VertexId>& cycle,
                             std::vector<EdgeSet>& out) {
  std::size_t len = cycle.size();
  std::vector<std::vector<EdgeId>> options(len);
  for (std::size_t i = 0; i < len; ++i) {
    VertexId a = cycle[i], b = cycle[(i + 1) % len];
    for (const auto& [eid, to] : g.adjacency(a)) {
      if (to == b) options[i].push_back(eid);
    }
  }
  std::vector<EdgeId> pick(len);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == len) {
      out.push_back(EdgeSet(std::vector<EdgeId>(pick)));
      return;
    }
    for (EdgeId e : options[i]) {
      pick[i] = e;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<EdgeSet> enumerate_circuits(const MultiGraph& g,
                                        const Limits& limits, int max_len) {
  if (max_len == 0 &&
      g.vertex_count() > static_cast<std::size_t>(limits.vertex_bound)) {
    throw bound_exceeded("enumerate_circuits: " +
                         std::to_string(g.vertex_count()) +
                         " vertices exceed the bound of " +
                         std::to_string(limits.vertex_bound));
  }
  std::vector<EdgeSet> out;

  // 2-edge circuits from parallel pairs.
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> parallel;
  for (const auto& e : g.edges()) {
    parallel[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.id);
  }
  for (const auto& [pair, ids] : parallel) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (max_len == 0 || max_len >= 2) {
          out.push_back(EdgeSet({ids[i], ids[j]}));
        }
      }
    }
  }

  // Vertex cycles of length >= 3: DFS from each start over larger vertices,
  // direction canonicalized by path[1] < path.back().
  const auto& vs = g.vertices();
  std::vector<VertexId> path;
  std::set<VertexId> on_path;
  auto dfs = [&](auto&& self, VertexId start, VertexId v) -> void {
    for (VertexId w : g.neighbors(v)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        expand_parallel_choices(g, path, out);
      }
      if (w <= start || on_path.count(w)) continue;
      if (max_len > 0 && path.size() >= static_cast<std::size_t>(max_len)) {
        continue;
      }
      path.push_back(w);
      on_path.insert(w);
      self(self, start, w);
      on_path.erase(w);
      path.pop_back();
    }
  };
  for (VertexId start : vs) {
    path = {start};
    on_path = {start};
    dfs(dfs, start, start);
  }

  std::sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_circuit(const MultiGraph& g, const EdgeSet& F) {
  if (F.empty()) return false;
  std::map<VertexId, int> deg;
  for (EdgeId eid : F) {
    if (!g.has_edge(eid)) return false;
    const EdgeRec& e = g.edge(eid);
    deg[e.u]++;
    deg[e.v]++;
  }
  for (const auto& [v, d] : deg) {
    if (d != 2) return false;
  }
  // Connectivity over the touched vertices using only F edges.
  std::set<VertexId> seen;
  std::deque<VertexId> queue{deg.begin()->first};
  seen.insert(deg.begin()->first);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& [eid, w] : g.adjacency(v)) {
      if (!F.contains(eid)) continue;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen.size() == deg.size();
}

namespace {

// Circuit inside D through the least edge of D. Requires every D-degree even;
// the path from one endpoint back to the other inside D minus the edge always
// exists then.
EdgeSet extract_circuit_through_least(const MultiGraph& g, const EdgeSet& D) {
  assert(!D.empty());
  EdgeId e0 = D.min_id();
  const EdgeRec& e = g.edge(e0);

  // BFS from e.v to e.u inside D - e0.
  std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
  parent[e.v] = {e.v, -1};
  std::deque<VertexId> queue{e.v};
  while (!queue.empty() && !parent.count(e.u)) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& [eid, w] : g.adjacency(v)) {
      if (eid == e0 || !D.contains(eid)) continue;
      if (!parent.count(w)) {
        parent[w] = {v, eid};
        queue.push_back(w);
      }
    }
  }
  if (!parent.count(e.u)) {
    throw std::logic_error(
        "extract_circuit_through_least: no return path; odd degrees?");
  }
  std::vector<EdgeId> circuit{e0};
  for (VertexId v = e.u; v != e.v; v = parent[v].first) {
    circuit.push_back(parent[v].second);
  }
  return EdgeSet(std::move(circuit));
}

// One bond inside the cut R: take the component K of g - R holding the least
// R-incident vertex; the edges from K to the least adjacent component of
// g - K form a bond contained in R.
EdgeSet extract_bond_inside(const MultiGraph& g, const EdgeSet& R) {
  assert(!R.empty());
  const EdgeRec& e0 = g.edge(R.min_id());
  VertexId v0 = std::min(e0.u, e0.v);

  std::set<VertexId> K{v0};
  std::deque<VertexId> queue{v0};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& [eid, w] : g.adjacency(v)) {
      if (R.contains(eid)) continue;
      if (K.insert(w).second) queue.push_back(w);
    }
  }

  MultiGraph rest = g.minus_vertices({K.begin(), K.end()});
  auto comps = components(rest);
  for (const auto& comp : comps) {
    std::set<VertexId> side(comp.begin(), comp.end());
    std::vector<EdgeId> crossing;
    for (const auto& rec : g.edges()) {
      bool ku = K.count(rec.u) > 0, kv = K.count(rec.v) > 0;
      if (ku && !kv && side.count(rec.v)) crossing.push_back(rec.id);
      if (kv && !ku && side.count(rec.u)) crossing.push_back(rec.id);
    }
    if (!crossing.empty()) return EdgeSet(std::move(crossing));
  }
  throw std::logic_error("extract_bond_inside: no crossing edges found");
}

std::vector<DecompositionPart> peel_bonds(const MultiGraph& g,
                                          const EdgeSet& F) {
  std::vector<DecompositionPart> parts;
  EdgeSet rest = F;
  while (!rest.empty()) {
    EdgeSet bond = extract_bond_inside(g, rest);
    assert(bond.is_subset_of(rest));
    rest ^= bond;
    parts.push_back({std::move(bond), PartKind::bond});
  }
  return parts;
}

}  // namespace

Decomposition peel_minimal_decomposition(SpaceTag space, const MultiGraph& g,
                                         const EdgeSet& F) {
  if (space != SpaceTag::c_fin && space != SpaceTag::cuts) {
    throw std::invalid_argument(
        "peel_minimal_decomposition: space must be C_fin or B");
  }
  Decomposition result;
  result.disjoint = true;
  if (space == SpaceTag::c_fin) {
    if (!in_span(cycle_space_basis(g), F)) {
      throw std::invalid_argument(
          "peel_minimal_decomposition: F is not in the cycle space");
    }
    EdgeSet rest = F;
    while (!rest.empty()) {
      EdgeSet circuit = extract_circuit_through_least(g, rest);
      assert(circuit.is_subset_of(rest));
      rest ^= circuit;
      result.parts.push_back({std::move(circuit), PartKind::circuit});
    }
  } else {
    if (!in_span(cut_space_basis(g), F)) {
      throw std::invalid_argument(
          "peel_minimal_decomposition: F is not in the cut space");
    }
    result.parts = peel_bonds(g, F);
  }
  return result;
}

Decomposition decompose_cut_into_bonds(const MultiGraph& g, const EdgeSet& F) {
  if (!F.empty() && !bipartition_side(g, F)) {
    throw std::invalid_argument("decompose_cut_into_bonds: F is not a cut");
  }
  Decomposition result;
  result.disjoint = true;
  result.parts = peel_bonds(g, F);
  return result;
}

Decomposition decompose_even_set_into_circuits(const MultiGraph& g,
                                               const EdgeSet& D) {
  std::map<VertexId, int> deg;
  for (EdgeId eid : D) {
    const EdgeRec& e = g.edge(eid);
    deg[e.u]++;
    deg[e.v]++;
  }
  for (const auto& [v, d] : deg) {
    if (d % 2 != 0) {
      throw std::invalid_argument(
          "decompose_even_set_into_circuits: odd degree at vertex " +
          std::to_string(v));
    }
  }
  Decomposition result;
  result.disjoint = true;
  EdgeSet rest = D;
  while (!rest.empty()) {
    EdgeSet circuit = extract_circuit_through_least(g, rest);
    rest ^= circuit;
    result.parts.push_back({std::move(circuit), PartKind::circuit});
  }
  return result;
}

Decomposition decompose_into_circuits_and_double_rays(const MultiGraph& g,
                                                      const EdgeSet& D) {
  std::map<VertexId, int> deg;
  for (EdgeId eid : D) {
    const EdgeRec& e = g.edge(eid);
    deg[e.u]++;
    deg[e.v]++;
  }
  for (const auto& [v, d] : deg) {
    if (d % 2 != 0 && !g.is_boundary(v)) {
      throw std::invalid_argument(
          "decompose_into_circuits_and_double_rays: odd degree at interior "
          "vertex " +
          std::to_string(v));
    }
  }

  Decomposition result;
  result.disjoint = true;
  EdgeSet rest = D;

  // Pair off odd boundary vertices with paths inside the remainder; the
  // nearest odd vertex (least id on ties) is the other endpoint.
  auto odd_boundary = [&]() -> std::optional<VertexId> {
    std::map<VertexId, int> d;
    for (EdgeId eid : rest) {
      const EdgeRec& e = g.edge(eid);
      d[e.u]++;
      d[e.v]++;
    }
    for (const auto& [v, dd] : d) {
      if (dd % 2 != 0) return v;  // map iterates ascending
    }
    return std::nullopt;
  };
  while (auto b = odd_boundary()) {
    std::map<VertexId, int> d;
    for (EdgeId eid : rest) {
      const EdgeRec& e = g.edge(eid);
      d[e.u]++;
      d[e.v]++;
    }
    // BFS from b inside rest to the nearest other odd-degree vertex.
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
    parent[*b] = {*b, -1};
    std::deque<VertexId> queue{*b};
    std::optional<VertexId> target;
    while (!queue.empty() && !target) {
      VertexId v = queue.front();
      queue.pop_front();
      for (const auto& [eid, w] : g.adjacency(v)) {
        if (!rest.contains(eid) || parent.count(w)) continue;
        parent[w] = {v, eid};
        if (d[w] % 2 != 0) {
          target = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (!target) {
      throw std::logic_error(
          "decompose_into_circuits_and_double_rays: unmatched odd vertex");
    }
    std::vector<EdgeId> path;
    for (VertexId v = *target; v != *b; v = parent[v].first) {
      path.push_back(parent[v].second);
    }
    EdgeSet part(std::move(path));
    rest ^= part;
    result.parts.push_back({std::move(part), PartKind::boundary_path});
  }

  while (!rest.empty()) {
    EdgeSet circuit = extract_circuit_through_least(g, rest);
    rest ^= circuit;
    result.parts.push_back({std::move(circuit), PartKind::circuit});
  }
  return result;
}

std::vector<std::vector<VertexId>> interior_connected_subsets(
    const MultiGraph& g, int max_size) {
  std::vector<VertexId> interior = g.interior_vertices();
  std::set<VertexId> interior_set(interior.begin(), interior.end());
  std::vector<std::vector<VertexId>> out;

  // Standard connected-subgraph enumeration: grow from each root using only
  // vertices larger than the root with the root excluded from repeats.
  std::vector<VertexId> current;
  auto grow = [&](auto&& self, std::set<VertexId>& frontier,
                  std::set<VertexId>& banned) -> void {
    std::vector<VertexId> sorted_set(current);
    std::sort(sorted_set.begin(), sorted_set.end());
    out.push_back(sorted_set);
    if (static_cast<int>(current.size()) >= max_size) return;
    std::vector<VertexId> candidates(frontier.begin(), frontier.end());
    std::set<VertexId> local_banned;
    for (VertexId w : candidates) {
      if (banned.count(w) || local_banned.count(w)) continue;
      std::set<VertexId> next_frontier = frontier;
      next_frontier.erase(w);
      for (VertexId z : g.neighbors(w)) {
        if (interior_set.count(z) && !banned.count(z) &&
            !local_banned.count(z) &&
            std::find(current.begin(), current.end(), z) == current.end()) {
          next_frontier.insert(z);
        }
      }
      current.push_back(w);
      std::set<VertexId> banned_union = banned;
      banned_union.insert(local_banned.begin(), local_banned.end());
      self(self, next_frontier, banned_union);
      current.pop_back();
      local_banned.insert(w);  // later subsets must not re-add w
    }
  };

  for (std::size_t i = 0; i < interior.size(); ++i) {
    VertexId root = interior[i];
    current = {root};
    std::set<VertexId> banned(interior.begin(), interior.begin() + i);
    std::set<VertexId> frontier;
    for (VertexId w : g.neighbors(root)) {
      if (interior_set.count(w) && !banned.count(w)) frontier.insert(w);
    }
    grow(grow, frontier, banned);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MembershipResult membership(SpaceTag tag, const MultiGraph& g,
                            const EdgeSet& D, const Limits& limits) {
  for (EdgeId e : D) {
    g.edge(e);  // throws on unknown ids
  }
  MembershipResult res;
  res.requested = tag;
  const bool finite = g.boundary().empty();

  auto span_check = [&](const Basis& basis, const char* side) {
    auto coords = in_span(basis, D);
    res.member = coords.has_value();
    if (coords) res.coordinates = std::move(coords);
    res.note = std::string(side);
  };

  switch (tag) {
    case SpaceTag::c_alg: {
      std::map<VertexId, int> deg;
      for (EdgeId eid : D) {
        const EdgeRec& e = g.edge(eid);
        deg[e.u]++;
        deg[e.v]++;
      }
      res.member = true;
      for (const auto& [v, d] : deg) {
        if (d % 2 != 0 && !g.is_boundary(v)) {
          res.member = false;
          res.odd_vertex = v;
          break;
        }
      }
      res.note = finite ? "even-degree test (C_alg = C_fin on finite graphs)"
                        : "even degrees at interior vertices";
      return res;
    }
    case SpaceTag::c_fin:
      span_check(cycle_space_basis(g),
                 "span of the fundamental-circuit basis");
      return res;
    case SpaceTag::cuts:
      span_check(cut_space_basis(g), "span of the fundamental-cut basis");
      return res;
    case SpaceTag::cuts_fin:
      span_check(cut_space_basis(g),
                 finite ? "B_fin = B on finite graphs; span test"
                        : "window approximation: B_fin tested as B span");
      return res;
    case SpaceTag::cuts_skew:
      span_check(cut_space_basis(g),
                 finite ? "B_sk = B on finite graphs; span test"
                        : "window approximation: B_sk tested as B span");
      return res;
    case SpaceTag::c_top: {
      if (finite) {
        span_check(cycle_space_basis(g),
                   "C_top = C_fin on finite graphs; span test");
        return res;
      }
      res.member = true;
      res.note = "orthogonality to interior finite-side cuts (one-sided "
                 "window test, side size <= " +
                 std::to_string(limits.subset_size_bound) + ")";
      for (const auto& A : interior_connected_subsets(
               g, limits.subset_size_bound)) {
        EdgeSet F = cut_from_bipartition(g, A);
        if (!is_orthogonal(D, F)) {
          res.member = false;
          res.violating_cut = std::move(F);
          return res;
        }
      }
      return res;
    }
  }
  return res;
}

}  // namespace edgespace
