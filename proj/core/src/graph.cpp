#include "edgespace/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace edgespace {

MultiGraph::MultiGraph(std::vector<VertexId> vertices,
                       std::vector<EdgeRec> edges,
                       std::vector<VertexId> boundary)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      boundary_(std::move(boundary)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) !=
      vertices_.end()) {
    throw std::invalid_argument("MultiGraph: duplicate vertex id");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
  std::sort(boundary_.begin(), boundary_.end());
  if (std::adjacent_find(boundary_.begin(), boundary_.end()) !=
      boundary_.end()) {
    throw std::invalid_argument("MultiGraph: duplicate boundary vertex");
  }
  for (VertexId b : boundary_) {
    if (!std::binary_search(vertices_.begin(), vertices_.end(), b)) {
      throw std::invalid_argument("MultiGraph: boundary vertex " +
                                  std::to_string(b) + " not declared");
    }
  }

  for (EdgeRec& e : edges_) {
    if (e.v < e.u) std::swap(e.u, e.v);  // endpoints are an unordered pair
  }
  adj_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const EdgeRec& e = edges_[i];
    if (i > 0 && edges_[i - 1].id == e.id) {
      throw std::invalid_argument("MultiGraph: duplicate edge id " +
                                  std::to_string(e.id));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("MultiGraph: loop at vertex " +
                                  std::to_string(e.u) + " (edge " +
                                  std::to_string(e.id) + ")");
    }
    for (VertexId w : {e.u, e.v}) {
      if (!std::binary_search(vertices_.begin(), vertices_.end(), w)) {
        throw std::invalid_argument("MultiGraph: edge " + std::to_string(e.id) +
                                    " endpoint " + std::to_string(w) +
                                    " not declared");
      }
    }
    adj_[index_of(e.u)].push_back({e.id, e.v});
    adj_[index_of(e.v)].push_back({e.id, e.u});
  }
  nbr_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    std::sort(adj_[i].begin(), adj_[i].end());
    for (const auto& [eid, to] : adj_[i]) nbr_[i].push_back(to);
    std::sort(nbr_[i].begin(), nbr_[i].end());
    nbr_[i].erase(std::unique(nbr_[i].begin(), nbr_[i].end()), nbr_[i].end());
  }
}

std::size_t MultiGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw std::invalid_argument("MultiGraph: unknown vertex " +
                                std::to_string(v));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool MultiGraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool MultiGraph::has_edge(EdgeId e) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e,
      [](const EdgeRec& r, EdgeId id) { return r.id < id; });
  return it != edges_.end() && it->id == e;
}

const EdgeRec& MultiGraph::edge(EdgeId e) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e,
      [](const EdgeRec& r, EdgeId id) { return r.id < id; });
  if (it == edges_.end() || it->id != e) {
    throw std::invalid_argument("MultiGraph: unknown edge " +
                                std::to_string(e));
  }
  return *it;
}

const std::vector<NeighborEntry>& MultiGraph::adjacency(VertexId v) const {
  return adj_[index_of(v)];
}

const std::vector<VertexId>& MultiGraph::neighbors(VertexId v) const {
  return nbr_[index_of(v)];
}

bool MultiGraph::is_boundary(VertexId v) const {
  return std::binary_search(boundary_.begin(), boundary_.end(), v);
}

std::vector<VertexId> MultiGraph::interior_vertices() const {
  std::vector<VertexId> out;
  std::set_difference(vertices_.begin(), vertices_.end(), boundary_.begin(),
                      boundary_.end(), std::back_inserter(out));
  return out;
}

EdgeSet MultiGraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const auto& e : edges_) ids.push_back(e.id);
  return EdgeSet::from_sorted(std::move(ids));
}

std::optional<EdgeId> MultiGraph::least_edge_between(VertexId u,
                                                     VertexId v) const {
  for (const auto& [eid, to] : adjacency(u)) {
    if (to == v) return eid;  // adjacency sorted by edge id
  }
  return std::nullopt;
}

MultiGraph MultiGraph::minus_vertices(
    const std::vector<VertexId>& removed) const {
  std::set<VertexId> gone(removed.begin(), removed.end());
  std::vector<VertexId> keep;
  for (VertexId v : vertices_) {
    if (!gone.count(v)) keep.push_back(v);
  }
  return induced(keep);
}

MultiGraph MultiGraph::induced(const std::vector<VertexId>& kept) const {
  std::vector<VertexId> vs(kept);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<EdgeRec> es;
  for (const auto& e : edges_) {
    if (std::binary_search(vs.begin(), vs.end(), e.u) &&
        std::binary_search(vs.begin(), vs.end(), e.v)) {
      es.push_back(e);
    }
  }
  std::vector<VertexId> bd;
  for (VertexId b : boundary_) {
    if (std::binary_search(vs.begin(), vs.end(), b)) bd.push_back(b);
  }
  return MultiGraph(std::move(vs), std::move(es), std::move(bd));
}

std::vector<std::vector<VertexId>> components(const MultiGraph& g) {
  std::set<VertexId> seen;
  std::vector<std::vector<VertexId>> out;
  for (VertexId start : g.vertices()) {
    if (seen.count(start)) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::map<VertexId, int> bfs_distances(const MultiGraph& g, VertexId from) {
  std::map<VertexId, int> dist;
  dist[from] = 0;
  std::deque<VertexId> queue{from};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (!dist.count(w)) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

EdgeSet cut_from_bipartition(const MultiGraph& g,
                             const std::vector<VertexId>& A) {
  std::set<VertexId> side(A.begin(), A.end());
  for (VertexId v : side) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("cut_from_bipartition: unknown vertex " +
                                  std::to_string(v));
    }
  }
  std::vector<EdgeId> out;
  for (const auto& e : g.edges()) {
    if (side.count(e.u) != side.count(e.v)) out.push_back(e.id);
  }
  return EdgeSet::from_sorted(std::move(out));
}

namespace {

// Components of g - F, plus for each vertex its component index.
struct SplitComponents {
  std::vector<std::vector<VertexId>> comps;
  std::map<VertexId, std::size_t> comp_of;
};

SplitComponents split_components(const MultiGraph& g, const EdgeSet& F) {
  SplitComponents sc;
  std::set<VertexId> seen;
  for (VertexId start : g.vertices()) {
    if (seen.count(start)) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (const auto& [eid, w] : g.adjacency(v)) {
        if (F.contains(eid)) continue;
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    std::size_t idx = sc.comps.size();
    for (VertexId v : comp) sc.comp_of[v] = idx;
    sc.comps.push_back(std::move(comp));
  }
  return sc;
}

}  // namespace

std::optional<std::vector<VertexId>> bipartition_side(const MultiGraph& g,
                                                      const EdgeSet& F) {
  for (EdgeId e : F) {
    if (!g.has_edge(e)) {
      throw std::invalid_argument("bipartition_side: unknown edge " +
                                  std::to_string(e));
    }
  }
  SplitComponents sc = split_components(g, F);

  // 2-color the component multigraph whose edges are the F edges. F is a cut
  // iff this coloring exists (no F edge inside one component, no odd cycle).
  std::vector<int> color(sc.comps.size(), -1);
  std::vector<std::vector<std::size_t>> cadj(sc.comps.size());
  for (EdgeId eid : F) {
    const EdgeRec& e = g.edge(eid);
    std::size_t cu = sc.comp_of.at(e.u), cv = sc.comp_of.at(e.v);
    if (cu == cv) return std::nullopt;
    cadj[cu].push_back(cv);
    cadj[cv].push_back(cu);
  }
  for (std::size_t s = 0; s < sc.comps.size(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t c = queue.front();
      queue.pop_front();
      for (std::size_t d : cadj[c]) {
        if (color[d] == -1) {
          color[d] = 1 - color[c];
          queue.push_back(d);
        } else if (color[d] == color[c]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<VertexId> A;
  for (std::size_t c = 0; c < sc.comps.size(); ++c) {
    if (color[c] == 0) {
      A.insert(A.end(), sc.comps[c].begin(), sc.comps[c].end());
    }
  }
  std::sort(A.begin(), A.end());
  return A;
}

bool is_bond(const MultiGraph& g, const EdgeSet& F) {
  if (F.empty()) return false;
  for (EdgeId e : F) {
    if (!g.has_edge(e)) {
      throw std::invalid_argument("is_bond: unknown edge " +
                                  std::to_string(e));
    }
  }
  // F is a bond iff, inside the single component of g touched by F, removing
  // F leaves exactly two pieces and every F edge crosses between them.
  SplitComponents with = split_components(g, EdgeSet{});
  SplitComponents without = split_components(g, F);

  std::size_t touched = SIZE_MAX;
  for (EdgeId eid : F) {
    const EdgeRec& e = g.edge(eid);
    std::size_t c = with.comp_of.at(e.u);
    if (with.comp_of.at(e.v) != c) return false;  // endpoints already split
    if (touched == SIZE_MAX) touched = c;
    if (c != touched) return false;  // F spans several components
  }

  std::set<std::size_t> pieces;
  for (VertexId v : with.comps[touched]) pieces.insert(without.comp_of.at(v));
  if (pieces.size() != 2) return false;
  for (EdgeId eid : F) {
    const EdgeRec& e = g.edge(eid);
    if (without.comp_of.at(e.u) == without.comp_of.at(e.v)) return false;
  }
  return true;
}

EdgeSet spanning_tree(const MultiGraph& g) {
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("spanning_tree: empty graph");
  }
  std::set<VertexId> seen{g.vertices().front()};
  std::vector<EdgeId> tree;
  std::vector<VertexId> layer{g.vertices().front()};
  while (!layer.empty()) {
    std::vector<VertexId> next;
    for (VertexId v : layer) {
      for (const auto& [eid, w] : g.adjacency(v)) {
        if (seen.insert(w).second) {
          tree.push_back(eid);
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  if (seen.size() != g.vertex_count()) {
    throw std::invalid_argument("spanning_tree: graph is disconnected");
  }
  std::sort(tree.begin(), tree.end());
  return EdgeSet::from_sorted(std::move(tree));
}

namespace {

// Path between two vertices using only the given edge set (BFS, least edge id
// first). Returns edge ids; empty when from == to.
std::optional<std::vector<EdgeId>> path_in_edges(const MultiGraph& g,
                                                 const EdgeSet& allowed,
                                                 VertexId from, VertexId to) {
  std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
  parent[from] = {from, -1};
  std::deque<VertexId> queue{from};
  while (!queue.empty() && !parent.count(to)) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& [eid, w] : g.adjacency(v)) {
      if (!allowed.contains(eid)) continue;
      if (!parent.count(w)) {
        parent[w] = {v, eid};
        queue.push_back(w);
      }
    }
  }
  if (!parent.count(to)) return std::nullopt;
  std::vector<EdgeId> path;
  for (VertexId v = to; v != from; v = parent[v].first) {
    path.push_back(parent[v].second);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

EdgeSet fundamental_circuit(const MultiGraph& g, const EdgeSet& tree,
                            EdgeId chord) {
  if (tree.contains(chord)) {
    throw std::invalid_argument("fundamental_circuit: chord lies in the tree");
  }
  const EdgeRec& e = g.edge(chord);
  auto path = path_in_edges(g, tree, e.u, e.v);
  if (!path) {
    throw std::invalid_argument(
        "fundamental_circuit: chord endpoints not tree-connected");
  }
  path->push_back(chord);
  std::sort(path->begin(), path->end());
  return EdgeSet::from_sorted(std::move(*path));
}

EdgeSet fundamental_cut(const MultiGraph& g, const EdgeSet& tree,
                        EdgeId tree_edge) {
  if (!tree.contains(tree_edge)) {
    throw std::invalid_argument("fundamental_cut: edge not in the tree");
  }
  const EdgeRec& e = g.edge(tree_edge);
  EdgeSet rest = tree ^ EdgeSet({tree_edge});
  // Side of the split containing e.u.
  std::set<VertexId> side{e.u};
  std::deque<VertexId> queue{e.u};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& [eid, w] : g.adjacency(v)) {
      if (!rest.contains(eid)) continue;
      if (side.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<EdgeId> cut;
  for (const auto& rec : g.edges()) {
    if (side.count(rec.u) != side.count(rec.v)) cut.push_back(rec.id);
  }
  return EdgeSet::from_sorted(std::move(cut));
}

}  // namespace edgespace
