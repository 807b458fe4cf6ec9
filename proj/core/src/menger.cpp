#include "edgespace/menger.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

namespace edgespace {

namespace {

// Unit-capacity flow network with deterministic arc order. Vertices of the
// underlying graph are split into in/out nodes so flow paths are
// vertex-disjoint.
struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int init;             // original capacity (flow = init - cap on forward arcs)
    std::size_t rev;      // index of the reverse arc in adj[to]
    bool forward;         // false for residual arcs
    EdgeId via_edge;      // graph edge realized by this arc, or -1
    VertexId via_vertex;  // graph vertex realized by this arc, or -1
  };

  explicit FlowNet(int n) : adj(n) {}

  void add_arc(int from, int to, int cap, EdgeId via_edge = -1,
               VertexId via_vertex = -1) {
    adj[from].push_back(
        {to, cap, cap, adj[to].size(), true, via_edge, via_vertex});
    adj[to].push_back(
        {from, 0, 0, adj[from].size() - 1, false, via_edge, via_vertex});
  }

  // Edmonds-Karp; BFS scans arcs in insertion order, so augmenting paths are
  // deterministic (and shortest, which keeps the chosen paths direct).
  int max_flow(int s, int t) {
    int total = 0;
    while (true) {
      std::vector<std::pair<int, std::size_t>> parent(adj.size(),
                                                      {-1, SIZE_MAX});
      parent[s] = {s, SIZE_MAX};
      std::deque<int> queue{s};
      while (!queue.empty() && parent[t].first == -1) {
        int v = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < adj[v].size(); ++i) {
          const Arc& a = adj[v][i];
          if (a.cap > 0 && parent[a.to].first == -1) {
            parent[a.to] = {v, i};
            queue.push_back(a.to);
          }
        }
      }
      if (parent[t].first == -1) break;
      for (int v = t; v != s;) {
        auto [p, i] = parent[v];
        Arc& a = adj[p][i];
        a.cap -= 1;
        adj[a.to][a.rev].cap += 1;
        v = p;
      }
      ++total;
    }
    return total;
  }

  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(adj.size(), false);
    seen[s] = true;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Arc& a : adj[v]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          queue.push_back(a.to);
        }
      }
    }
    return seen;
  }

  // Unit vertex capacities keep the net flow on every forward arc at 0 or 1,
  // and flow cycles vertex-disjoint from the source-sink paths, so a single
  // consumed-flag per arc suffices for path extraction.
  bool carries_flow(int v, std::size_t i) const {
    const Arc& a = adj[v][i];
    return a.forward && a.cap < a.init;
  }

  std::vector<std::vector<Arc>> adj;
};

struct SplitIndex {
  std::map<VertexId, int> in, out;
  int next = 0;

  void add(VertexId v, bool split) {
    in[v] = next++;
    out[v] = split ? next++ : in[v];
  }
};

// Walk one unit of flow from `from` until `sink`, consuming arcs and
// collecting realized vertices/edges.
Path trace_flow_path(FlowNet& net, std::vector<std::vector<bool>>& used,
                     int from, int sink) {
  Path path;
  int v = from;
  while (v != sink) {
    bool advanced = false;
    for (std::size_t i = 0; i < net.adj[v].size(); ++i) {
      if (used[v][i] || !net.carries_flow(v, i)) continue;
      const FlowNet::Arc& a = net.adj[v][i];
      used[v][i] = true;
      if (a.via_vertex != -1) path.vertices.push_back(a.via_vertex);
      if (a.via_edge != -1) path.edges.push_back(a.via_edge);
      v = a.to;
      advanced = true;
      break;
    }
    assert(advanced);
    (void)advanced;
  }
  return path;
}

}  // namespace

MengerResult vertex_disjoint_paths(const MultiGraph& g,
                                   const std::vector<VertexId>& X,
                                   const std::vector<VertexId>& Y,
                                   const std::vector<VertexId>& forbidden) {
  if (X.empty() || Y.empty()) {
    throw std::invalid_argument(
        "vertex_disjoint_paths: X and Y must be nonempty");
  }
  std::set<VertexId> xs(X.begin(), X.end()), ys(Y.begin(), Y.end()),
      bad(forbidden.begin(), forbidden.end());
  for (VertexId v : xs) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("vertex_disjoint_paths: unknown X vertex " +
                                  std::to_string(v));
  }
  for (VertexId v : ys) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("vertex_disjoint_paths: unknown Y vertex " +
                                  std::to_string(v));
  }
  for (VertexId v : bad) {
    if (xs.count(v) || ys.count(v)) {
      throw std::invalid_argument(
          "vertex_disjoint_paths: forbidden vertex inside X or Y");
    }
  }

  // Node layout: an in/out pair per allowed vertex (capacity-1 arc between
  // them), plus source and sink.
  SplitIndex idx;
  std::vector<VertexId> allowed;
  for (VertexId v : g.vertices()) {
    if (!bad.count(v)) {
      allowed.push_back(v);
      idx.add(v, true);
    }
  }
  int S = idx.next++, T = idx.next++;
  FlowNet net(idx.next);

  // Edge arcs carry effectively unlimited capacity so that every minimum cut
  // consists of source, sink and vertex-splitting arcs only; the unit vertex
  // capacities still bound the flow on each edge arc by one.
  const int big = static_cast<int>(g.vertex_count()) + 2;
  for (VertexId v : allowed) net.add_arc(idx.in[v], idx.out[v], 1, -1, v);
  for (VertexId x : xs) net.add_arc(S, idx.in[x], 1);
  for (VertexId y : ys) net.add_arc(idx.out[y], T, 1);
  // Target vertices are terminal: no arcs leave them toward other vertices,
  // so paths meet Y only at their last vertex.
  for (VertexId v : allowed) {
    if (ys.count(v)) continue;
    for (const auto& [eid, w] : g.adjacency(v)) {
      if (bad.count(w)) continue;
      // Parallel edges never help vertex-disjointness; keep the least id.
      if (auto least = g.least_edge_between(v, w); least && *least != eid)
        continue;
      net.add_arc(idx.out[v], idx.in[w], big, eid);
    }
  }

  int flow = net.max_flow(S, T);

  MengerResult result;
  std::vector<std::vector<bool>> used(net.adj.size());
  for (std::size_t v = 0; v < net.adj.size(); ++v) {
    used[v].assign(net.adj[v].size(), false);
  }
  for (std::size_t si = 0; si < net.adj[S].size(); ++si) {
    if (used[S][si] || !net.carries_flow(S, si)) continue;
    used[S][si] = true;
    Path path = trace_flow_path(net, used, net.adj[S][si].to, T);
    result.paths.push_back(std::move(path));
  }
  assert(static_cast<int>(result.paths.size()) == flow);
  std::sort(result.paths.begin(), result.paths.end(),
            [](const Path& a, const Path& b) { return a.first() < b.first(); });

  // Menger separator from the residual min cut. Crossing saturated arcs map
  // to distinct vertices: S->x_in picks x itself, v_in->v_out picks v,
  // y_out->T picks y.
  auto reach = net.residual_reachable(S);
  std::set<VertexId> sep;
  for (VertexId x : xs) {
    if (!reach[idx.in[x]]) sep.insert(x);
  }
  for (VertexId v : allowed) {
    if (reach[idx.in[v]] && !reach[idx.out[v]]) sep.insert(v);
  }
  for (VertexId y : ys) {
    if (reach[idx.out[y]]) sep.insert(y);
  }
  result.separator.assign(sep.begin(), sep.end());
  assert(result.separator.size() == static_cast<std::size_t>(flow));
  return result;
}

FanSearch k_fan(const MultiGraph& g, VertexId u, const std::vector<VertexId>& Y,
                int k) {
  if (k <= 0) throw std::invalid_argument("k_fan: k must be positive");
  std::set<VertexId> ys(Y.begin(), Y.end());
  if (ys.count(u)) {
    throw std::invalid_argument("k_fan: center lies in the target set");
  }
  FanSearch out;
  const auto& nbrs = g.neighbors(u);
  out.neighbor_limit = nbrs.size();
  if (Y.empty() || nbrs.empty()) return out;
  if (static_cast<int>(nbrs.size()) < k) {
    // Fewer than k distinct first edges are available; the neighborhood
    // itself blocks every fan.
    out.separator = nbrs;
    return out;
  }

  MengerResult menger = vertex_disjoint_paths(g, nbrs, Y, {u});
  if (static_cast<int>(menger.paths.size()) < k) {
    out.separator = std::move(menger.separator);
    return out;
  }
  Fan fan{u, {}};
  for (int i = 0; i < k; ++i) {
    Path p = std::move(menger.paths[i]);
    Path full;
    full.vertices.push_back(u);
    auto eid = g.least_edge_between(u, p.first());
    assert(eid);
    full.edges.push_back(*eid);
    full.vertices.insert(full.vertices.end(), p.vertices.begin(),
                         p.vertices.end());
    full.edges.insert(full.edges.end(), p.edges.begin(), p.edges.end());
    fan.paths.push_back(std::move(full));
  }
  out.fan = std::move(fan);
  return out;
}

LinkageSearch k_linkage(const MultiGraph& g, VertexId x, VertexId y, int k) {
  if (k <= 0) throw std::invalid_argument("k_linkage: k must be positive");
  if (x == y) throw std::invalid_argument("k_linkage: endpoints must differ");
  if (!g.has_vertex(x) || !g.has_vertex(y)) {
    throw std::invalid_argument("k_linkage: unknown endpoint");
  }

  SplitIndex idx;
  for (VertexId v : g.vertices()) idx.add(v, v != x && v != y);
  FlowNet net(idx.next);
  for (VertexId v : g.vertices()) {
    if (v != x && v != y) net.add_arc(idx.in[v], idx.out[v], 1, -1, v);
  }
  // One arc pair per edge instance. Direct x-y edges keep unit capacity (each
  // instance is its own length-one path); all other edge arcs are effectively
  // unlimited so minimum cuts cross only splitting and direct arcs.
  const int big = static_cast<int>(g.vertex_count()) + 2;
  for (const auto& e : g.edges()) {
    bool direct = (e.u == x && e.v == y) || (e.u == y && e.v == x);
    int cap = direct ? 1 : big;
    net.add_arc(idx.out[e.u], idx.in[e.v], cap, e.id);
    net.add_arc(idx.out[e.v], idx.in[e.u], cap, e.id);
  }
  int S = idx.out[x], T = idx.in[y];
  int flow = net.max_flow(S, T);

  LinkageSearch out;
  if (flow < k) {
    auto reach = net.residual_reachable(S);
    for (VertexId v : g.vertices()) {
      if (v == x || v == y) continue;
      if (reach[idx.in[v]] && !reach[idx.out[v]]) out.separator.push_back(v);
    }
    for (const auto& e : g.edges()) {
      if ((e.u == x && e.v == y) || (e.u == y && e.v == x)) {
        ++out.direct_edges_in_cut;
      }
    }
    std::sort(out.separator.begin(), out.separator.end());
    return out;
  }

  std::vector<std::vector<bool>> used(net.adj.size());
  for (std::size_t v = 0; v < net.adj.size(); ++v) {
    used[v].assign(net.adj[v].size(), false);
  }
  Linkage linkage{x, y, {}};
  for (int p = 0; p < k; ++p) {
    Path body = trace_flow_path(net, used, S, T);
    Path path;
    path.vertices.push_back(x);
    path.vertices.insert(path.vertices.end(), body.vertices.begin(),
                         body.vertices.end());
    path.vertices.push_back(y);
    path.edges = std::move(body.edges);
    linkage.paths.push_back(std::move(path));
  }
  out.linkage = std::move(linkage);
  return out;
}

DisjointFanFamily max_disjoint_fans(const MultiGraph& g,
                                    const std::vector<VertexId>& sources,
                                    const std::vector<VertexId>& Y, int k) {
  std::set<VertexId> ys(Y.begin(), Y.end());
  for (VertexId s : sources) {
    if (ys.count(s)) {
      throw std::invalid_argument(
          "max_disjoint_fans: source lies in the target set");
    }
  }
  DisjointFanFamily family;
  std::set<VertexId> used;
  for (VertexId s : sources) {
    if (used.count(s)) continue;
    std::vector<VertexId> remaining_y;
    for (VertexId y : Y) {
      if (!used.count(y)) remaining_y.push_back(y);
    }
    if (remaining_y.empty()) break;
    MultiGraph h = g.minus_vertices({used.begin(), used.end()});
    FanSearch search = k_fan(h, s, remaining_y, k);
    if (search.fan) {
      for (const Path& p : search.fan->paths) {
        used.insert(p.vertices.begin(), p.vertices.end());
      }
      used.insert(s);
      family.fans.push_back(std::move(*search.fan));
    } else {
      family.misses.push_back(
          {s, std::move(search.separator), search.neighbor_limit});
    }
  }
  family.used.assign(used.begin(), used.end());
  return family;
}

bool validate_path(const MultiGraph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  if (p.edges.size() + 1 != p.vertices.size()) return false;
  std::set<VertexId> seen(p.vertices.begin(), p.vertices.end());
  if (seen.size() != p.vertices.size()) return false;  // vertex-simple
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (!g.has_edge(p.edges[i])) return false;
    const EdgeRec& e = g.edge(p.edges[i]);
    VertexId a = p.vertices[i], b = p.vertices[i + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
  }
  return true;
}

bool validate_fan(const MultiGraph& g, const Fan& fan,
                  const std::vector<VertexId>& Y) {
  std::set<VertexId> ys(Y.begin(), Y.end());
  if (ys.count(fan.center)) return false;
  std::set<VertexId> interior_seen;
  std::set<EdgeId> first_edges;
  for (const Path& p : fan.paths) {
    if (!validate_path(g, p)) return false;
    if (p.first() != fan.center) return false;
    if (!ys.count(p.last())) return false;
    if (p.edges.empty() || !first_edges.insert(p.edges.front()).second) {
      return false;
    }
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
      VertexId v = p.vertices[i];
      if (i + 1 < p.vertices.size() && ys.count(v)) return false;
      if (!interior_seen.insert(v).second) return false;  // shared vertex
    }
  }
  return true;
}

bool validate_linkage(const MultiGraph& g, const Linkage& l) {
  std::set<VertexId> internal_seen;
  std::set<EdgeId> edges_seen;
  for (const Path& p : l.paths) {
    if (!validate_path(g, p)) return false;
    if (p.first() != l.x || p.last() != l.y) return false;
    for (EdgeId e : p.edges) {
      if (!edges_seen.insert(e).second) return false;
    }
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      if (!internal_seen.insert(p.vertices[i]).second) return false;
    }
  }
  return true;
}

}  // namespace edgespace
