#include "maglap/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace maglap {

namespace {

std::string edge_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

Graph Graph::from_edge_list(int vertex_count, const std::vector<std::pair<int, int>>& pairs) {
  if (vertex_count < 1)
    throw Error(Error::Code::VertexOutOfRange,
                "vertex count must be >= 1, got " + std::to_string(vertex_count));
  Graph g;
  g.n_ = vertex_count;
  g.edges_.reserve(pairs.size());
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
      throw Error(Error::Code::VertexOutOfRange,
                  "edge " + edge_str(a, b) + " out of range for n=" + std::to_string(vertex_count));
    if (a == b) throw Error(Error::Code::LoopEdge, "loop edge at vertex " + std::to_string(a));
    int u = std::min(a, b), v = std::max(a, b);
    if (!seen.insert({u, v}).second)
      throw Error(Error::Code::DuplicateEdge, "duplicate edge " + edge_str(u, v));
    g.edges_.push_back({u, v});
  }
  g.rebuild_incidence();
  return g;
}

void Graph::rebuild_incidence() {
  incident_.assign(n_, {});
  for (EdgeId e = 0; e < edge_count(); ++e) {
    incident_[edges_[e].u].push_back(e);
    incident_[edges_[e].v].push_back(e);
  }
}

const Edge& Graph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count())
    throw Error(Error::Code::BadEdgeId, "edge id " + std::to_string(e) + " out of range");
  return edges_[e];
}

std::span<const EdgeId> Graph::incident_edges(int v) const {
  if (v < 0 || v >= n_)
    throw Error(Error::Code::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  return incident_[v];
}

int Graph::degree(int v) const { return static_cast<int>(incident_edges(v).size()); }

int Graph::opposite_endpoint(EdgeId e, int v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw Error(Error::Code::BadEdgeId,
              "vertex " + std::to_string(v) + " not an endpoint of edge " + std::to_string(e));
}

std::optional<EdgeId> Graph::find_edge(int u, int v) const {
  if (u == v) return std::nullopt;
  int a = std::min(u, v), b = std::max(u, v);
  for (EdgeId e : incident_edges(a))
    if (edges_[e].u == a && edges_[e].v == b) return e;
  return std::nullopt;
}

bool Graph::is_connected() const {
  std::vector<char> seen(n_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (EdgeId e : incident_[v]) {
      int w = opposite_endpoint(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n_;
}

Graph Graph::delete_edge(EdgeId e) const { return delete_edges({e}); }

Graph Graph::delete_edges(std::vector<EdgeId> es) const {
  std::vector<char> drop(edge_count(), 0);
  for (EdgeId e : es) {
    if (e < 0 || e >= edge_count())
      throw Error(Error::Code::BadEdgeId, "edge id " + std::to_string(e) + " out of range");
    drop[e] = 1;
  }
  Graph g;
  g.n_ = n_;
  for (EdgeId e = 0; e < edge_count(); ++e)
    if (!drop[e]) g.edges_.push_back(edges_[e]);
  g.rebuild_incidence();
  return g;
}

SpanningTreeDecomposition::SpanningTreeDecomposition(std::vector<EdgeId> tree_edges,
                                                     std::vector<EdgeId> chords,
                                                     std::vector<ArcPath> fundamental_cycles)
    : tree_edges_(std::move(tree_edges)),
      chords_(std::move(chords)),
      cycles_(std::move(fundamental_cycles)) {}

bool SpanningTreeDecomposition::is_tree_edge(EdgeId e) const {
  return std::binary_search(tree_edges_.begin(), tree_edges_.end(), e);
}

bool SpanningTreeDecomposition::is_chord(EdgeId e) const {
  return std::find(chords_.begin(), chords_.end(), e) != chords_.end();
}

const ArcPath& SpanningTreeDecomposition::fundamental_cycle(EdgeId chord) const {
  auto it = std::find(chords_.begin(), chords_.end(), chord);
  if (it == chords_.end())
    throw Error(Error::Code::NotAChord, "edge " + std::to_string(chord) + " is not a chord");
  return cycles_[static_cast<size_t>(it - chords_.begin())];
}

int arc_tail(const Graph& g, const Arc& a) {
  const Edge& e = g.edge(a.edge);
  return a.forward ? e.u : e.v;
}

int arc_head(const Graph& g, const Arc& a) {
  const Edge& e = g.edge(a.edge);
  return a.forward ? e.v : e.u;
}

bool is_closed_walk(const Graph& g, const ArcPath& path) {
  if (path.empty()) return false;
  int cur = arc_tail(g, path.front());
  int start = cur;
  for (const Arc& a : path) {
    if (arc_tail(g, a) != cur) return false;
    cur = arc_head(g, a);
  }
  return cur == start;
}

namespace {

// Tree path from vertex `from` to vertex `to` as arcs, using
// parent/depth arrays of a rooted spanning tree.
ArcPath tree_path(const Graph& g, const std::vector<int>& parent_vertex,
                  const std::vector<EdgeId>& parent_edge, const std::vector<int>& depth,
                  int from, int to) {
  ArcPath up;   // from -> lca, in traversal order
  ArcPath down; // lca -> to, collected bottom-up then reversed
  int a = from, b = to;
  auto ascend = [&](int& x, ArcPath& out, bool toward) {
    EdgeId e = parent_edge[x];
    int p = parent_vertex[x];
    // arc traversed x -> p when walking up; p -> x when walking down
    bool fwd_up = g.edge(e).u == x;
    out.push_back(toward ? Arc{e, fwd_up} : Arc{e, !fwd_up});
    x = p;
  };
  while (depth[a] > depth[b]) ascend(a, up, true);
  while (depth[b] > depth[a]) ascend(b, down, false);
  while (a != b) {
    ascend(a, up, true);
    ascend(b, down, false);
  }
  std::reverse(down.begin(), down.end());
  up.insert(up.end(), down.begin(), down.end());
  return up;
}

SpanningTreeDecomposition decompose(const Graph& g, const std::vector<char>& in_tree) {
  const int n = g.vertex_count();
  std::vector<int> parent_vertex(n, -1), depth(n, 0);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (EdgeId e : g.incident_edges(v)) {
      if (!in_tree[e]) continue;
      int w = g.opposite_endpoint(e, v);
      if (seen[w]) continue;
      seen[w] = 1;
      parent_vertex[w] = v;
      parent_edge[w] = e;
      depth[w] = depth[v] + 1;
      q.push(w);
    }
  }

  std::vector<EdgeId> tree_edges, chords;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    (in_tree[e] ? tree_edges : chords).push_back(e);

  std::vector<ArcPath> cycles;
  cycles.reserve(chords.size());
  for (EdgeId c : chords) {
    const Edge& ed = g.edge(c);
    ArcPath cycle{Arc{c, true}}; // chord traversed u -> v
    ArcPath back = tree_path(g, parent_vertex, parent_edge, depth, ed.v, ed.u);
    cycle.insert(cycle.end(), back.begin(), back.end());
    cycles.push_back(std::move(cycle));
  }
  return SpanningTreeDecomposition(std::move(tree_edges), std::move(chords), std::move(cycles));
}

} // namespace

SpanningTreeDecomposition spanning_tree(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> in_tree(g.edge_count(), 0), seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    // neighbors in ascending index order, for reproducible trees
    std::vector<std::pair<int, EdgeId>> nbrs;
    for (EdgeId e : g.incident_edges(v)) nbrs.push_back({g.opposite_endpoint(e, v), e});
    std::sort(nbrs.begin(), nbrs.end());
    for (auto [w, e] : nbrs) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++reached;
      in_tree[e] = 1;
      q.push(w);
    }
  }
  if (reached != n) throw Error(Error::Code::Disconnected, "graph is not connected");
  return decompose(g, in_tree);
}

SpanningTreeDecomposition spanning_tree_containing_matching(const Graph& g,
                                                            const std::vector<EdgeId>& matching) {
  const int n = g.vertex_count();
  std::vector<char> covered(n, 0);
  for (EdgeId e : matching) {
    const Edge& ed = g.edge(e); // validates the id
    if (covered[ed.u] || covered[ed.v])
      throw Error(Error::Code::NotAMatching,
                  "edges share vertex " + std::to_string(covered[ed.u] ? ed.u : ed.v));
    covered[ed.u] = covered[ed.v] = 1;
  }

  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };

  std::vector<char> in_tree(g.edge_count(), 0);
  int components = n;
  auto add = [&](EdgeId e) {
    int a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) return;
    root[a] = b;
    in_tree[e] = 1;
    --components;
  };
  for (EdgeId e : matching) add(e);
  for (EdgeId e = 0; e < g.edge_count(); ++e) add(e);
  if (components != 1) throw Error(Error::Code::Disconnected, "graph is not connected");
  return decompose(g, in_tree);
}

} // namespace maglap
