#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "edgespace/graph.hpp"

namespace edgespace::testing {

// K4 on vertices 1..4; edges 1:(1,2) 2:(1,3) 3:(1,4) 4:(2,3) 5:(2,4) 6:(3,4).
inline MultiGraph make_k4() {
  return MultiGraph({1, 2, 3, 4}, {{1, 1, 2},
                                   {2, 1, 3},
                                   {3, 1, 4},
                                   {4, 2, 3},
                                   {5, 2, 4},
                                   {6, 3, 4}});
}

inline MultiGraph make_k3() {
  return MultiGraph({1, 2, 3}, {{1, 1, 2}, {2, 2, 3}, {3, 1, 3}});
}

// C4 on 1..4; edges 1:(1,2) 2:(2,3) 3:(3,4) 4:(1,4).
inline MultiGraph make_c4() {
  return MultiGraph({1, 2, 3, 4}, {{1, 1, 2}, {2, 2, 3}, {3, 3, 4}, {4, 1, 4}});
}

inline MultiGraph make_path(int n) {
  std::vector<VertexId> vs;
  std::vector<EdgeRec> es;
  for (int i = 1; i <= n; ++i) vs.push_back(i);
  for (int i = 1; i < n; ++i) es.push_back({i, i, i + 1});
  return MultiGraph(vs, es);
}

// Two vertices joined by a pair of parallel edges.
inline MultiGraph make_parallel_pair() {
  return MultiGraph({1, 2}, {{1, 1, 2}, {2, 1, 2}});
}

// Two triangles sharing vertex 3 (edge-disjoint).
inline MultiGraph make_bowtie() {
  return MultiGraph({1, 2, 3, 4, 5}, {{1, 1, 2},
                                      {2, 2, 3},
                                      {3, 1, 3},
                                      {4, 3, 4},
                                      {5, 4, 5},
                                      {6, 3, 5}});
}

inline MultiGraph make_complete(int n) {
  std::vector<VertexId> vs;
  std::vector<EdgeRec> es;
  EdgeId id = 1;
  for (int i = 1; i <= n; ++i) vs.push_back(i);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) es.push_back({id++, i, j});
  }
  return MultiGraph(vs, es);
}

inline MultiGraph make_star(int leaves) {
  std::vector<VertexId> vs{0};
  std::vector<EdgeRec> es;
  for (int i = 1; i <= leaves; ++i) {
    vs.push_back(i);
    es.push_back({i, 0, i});
  }
  return MultiGraph(vs, es);
}

// Seeded connected multigraph: a random spanning tree plus extra edges, some
// parallel to existing ones.
inline MultiGraph random_connected_multigraph(std::mt19937_64& rng,
                                              int min_vertices,
                                              int max_vertices,
                                              bool allow_parallel = true) {
  std::uniform_int_distribution<int> nv(min_vertices, max_vertices);
  int n = nv(rng);
  std::vector<VertexId> vs;
  for (int i = 1; i <= n; ++i) vs.push_back(i);
  std::vector<EdgeRec> es;
  EdgeId id = 1;
  for (int i = 2; i <= n; ++i) {
    std::uniform_int_distribution<int> parent(1, i - 1);
    es.push_back({id++, parent(rng), i});
  }
  std::uniform_int_distribution<int> extra_count(0, n);
  std::uniform_int_distribution<int> pick(1, n);
  int extras = extra_count(rng);
  for (int t = 0; t < extras; ++t) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (!allow_parallel) {
      bool exists = false;
      for (const auto& e : es) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) exists = true;
      }
      if (exists) continue;
    }
    es.push_back({id++, u, v});
  }
  return MultiGraph(vs, es);
}

// All connected simple graphs on exactly n labeled vertices 1..n, as edge
// masks over the C(n,2) vertex pairs in lexicographic order.
inline std::vector<MultiGraph> all_connected_simple_graphs(int n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  }
  std::vector<MultiGraph> out;
  std::uint64_t total = 1ull << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<VertexId> vs;
    for (int i = 1; i <= n; ++i) vs.push_back(i);
    std::vector<EdgeRec> es;
    EdgeId id = 1;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (mask & (1ull << p)) es.push_back({id++, pairs[p].first, pairs[p].second});
    }
    MultiGraph g(vs, es);
    if (components(g).size() == 1) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace edgespace::testing
