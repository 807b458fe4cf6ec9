#pragma once

#include <map>
#include <optional>
#include <vector>

#include "edgespace/f2.hpp"
#include "edgespace/types.hpp"

namespace edgespace {

struct EdgeRec {
  EdgeId id;
  VertexId u, v;  // unordered endpoints; loops are rejected
  VertexId other(VertexId w) const { return w == u ? v : u; }
  auto operator<=>(const EdgeRec&) const = default;
};

struct NeighborEntry {
  EdgeId edge;
  VertexId to;
  auto operator<=>(const NeighborEntry&) const = default;
};

// Finite undirected multigraph with stable vertex/edge identities. Parallel
// edges are allowed and keep distinct identities; loops are rejected.
// An optional boundary subset marks window truncation. Immutable once built.
class MultiGraph {
 public:
  MultiGraph() = default;
  // Throws std::invalid_argument on loops, undeclared endpoints, duplicate ids.
  MultiGraph(std::vector<VertexId> vertices, std::vector<EdgeRec> edges,
             std::vector<VertexId> boundary = {});

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<EdgeRec>& edges() const { return edges_; }
  const std::vector<VertexId>& boundary() const { return boundary_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
  const EdgeRec& edge(EdgeId e) const;  // throws if unknown

  // Incident edges sorted by edge id.
  const std::vector<NeighborEntry>& adjacency(VertexId v) const;
  // Distinct adjacent vertices, ascending.
  const std::vector<VertexId>& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return adjacency(v).size(); }

  bool is_boundary(VertexId v) const;
  std::vector<VertexId> interior_vertices() const;

  // All edge ids as an EdgeSet (the ambient of this graph's edge space).
  EdgeSet edge_ids() const;

  // Least id of all edges joining u and v, if any.
  std::optional<EdgeId> least_edge_between(VertexId u, VertexId v) const;

  // Subgraph with the given vertices removed (ids preserved).
  MultiGraph minus_vertices(const std::vector<VertexId>& removed) const;
  // Induced subgraph on the given vertices (ids preserved).
  MultiGraph induced(const std::vector<VertexId>& kept) const;

  bool operator==(const MultiGraph&) const = default;

 private:
  std::size_t index_of(VertexId v) const;  // throws if unknown

  std::vector<VertexId> vertices_;  // sorted
  std::vector<EdgeRec> edges_;      // sorted by id
  std::vector<VertexId> boundary_;  // sorted subset of vertices_
  std::vector<std::vector<NeighborEntry>> adj_;
  std::vector<std::vector<VertexId>> nbr_;
};

// Connected components as sorted vertex lists, ordered by least member.
std::vector<std::vector<VertexId>> components(const MultiGraph& g);

// BFS distances from `from` (edge-count metric); unreachable vertices absent.
std::map<VertexId, int> bfs_distances(const MultiGraph& g, VertexId from);

// All edges with exactly one endpoint in A. A must consist of vertices of g.
EdgeSet cut_from_bipartition(const MultiGraph& g, const std::vector<VertexId>& A);

// True iff F is a minimal nonempty cut of g: equivalently F = E(A,B) for a
// bipartition with both sides inducing connected subgraphs inside one
// component of g.
bool is_bond(const MultiGraph& g, const EdgeSet& F);

// Reconstructs a bipartition side A for a cut F (2-coloring the components of
// g - F along F); nullopt when F is not a cut.
std::optional<std::vector<VertexId>> bipartition_side(const MultiGraph& g,
                                                      const EdgeSet& F);

// Edge set of a deterministic spanning tree (layered BFS from the least
// vertex, least edge id first). Throws std::invalid_argument if g is
// disconnected or empty.
EdgeSet spanning_tree(const MultiGraph& g);

// The unique circuit in tree + chord. chord must not lie in tree.
EdgeSet fundamental_circuit(const MultiGraph& g, const EdgeSet& tree,
                            EdgeId chord);

// The cut induced by the two components of tree - tree_edge.
EdgeSet fundamental_cut(const MultiGraph& g, const EdgeSet& tree,
                        EdgeId tree_edge);

}  // namespace edgespace
