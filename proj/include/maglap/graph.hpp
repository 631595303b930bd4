#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "maglap/error.hpp"

namespace maglap {

using EdgeId = std::int32_t;

/// Undirected edge stored with u < v; the pair order (u,v) is the
/// reference orientation of the edge.
struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One traversal step: edge `edge` walked along its reference
/// orientation when `forward`, against it otherwise.
struct Arc {
  EdgeId edge;
  bool forward;
  friend bool operator==(const Arc&, const Arc&) = default;
};

using ArcPath = std::vector<Arc>;

/// Finite simple undirected graph. Immutable after construction;
/// all operations are pure and safe to share across threads.
class Graph {
public:
  /// Build from (u,v) pairs; pairs are canonicalized to u < v, input
  /// order preserved. Throws LoopEdge, DuplicateEdge, VertexOutOfRange.
  static Graph from_edge_list(int vertex_count, const std::vector<std::pair<int, int>>& pairs);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Edge ids incident to v, ascending.
  std::span<const EdgeId> incident_edges(int v) const;
  int degree(int v) const;

  /// The endpoint of e that is not v.
  int opposite_endpoint(EdgeId e, int v) const;

  std::optional<EdgeId> find_edge(int u, int v) const;

  bool is_connected() const;

  /// Same vertex set, edge e removed; remaining edges keep their
  /// original relative order (ids re-enumerate).
  Graph delete_edge(EdgeId e) const;
  Graph delete_edges(std::vector<EdgeId> es) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  Graph() = default;
  void rebuild_incidence();

  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// A spanning tree of a connected graph together with its chords and
/// their fundamental cycles. Chords index the cycle space (m - n + 1
/// dimensions); each fundamental cycle starts with its chord traversed
/// forward, followed by the tree path closing the walk.
class SpanningTreeDecomposition {
public:
  SpanningTreeDecomposition(std::vector<EdgeId> tree_edges,
                            std::vector<EdgeId> chords,
                            std::vector<ArcPath> fundamental_cycles);

  const std::vector<EdgeId>& tree_edges() const noexcept { return tree_edges_; }
  const std::vector<EdgeId>& chords() const noexcept { return chords_; }
  int chord_count() const noexcept { return static_cast<int>(chords_.size()); }

  bool is_tree_edge(EdgeId e) const;
  bool is_chord(EdgeId e) const;

  /// Fundamental cycle of a chord; throws NotAChord.
  const ArcPath& fundamental_cycle(EdgeId chord) const;
  const std::vector<ArcPath>& fundamental_cycles() const noexcept { return cycles_; }

private:
  std::vector<EdgeId> tree_edges_;
  std::vector<EdgeId> chords_;
  std::vector<ArcPath> cycles_;
};

/// Deterministic spanning tree: BFS from vertex 0, neighbors visited in
/// ascending index order. Throws Disconnected.
SpanningTreeDecomposition spanning_tree(const Graph& g);

/// Spanning tree whose edge set contains the given matching.
/// Throws Disconnected, NotAMatching, BadEdgeId.
SpanningTreeDecomposition spanning_tree_containing_matching(const Graph& g,
                                                            const std::vector<EdgeId>& matching);

/// True when `path` is a closed walk in g (consecutive arcs chain and
/// the walk returns to its start).
bool is_closed_walk(const Graph& g, const ArcPath& path);

/// Start vertex of an arc (tail of the traversal).
int arc_tail(const Graph& g, const Arc& a);
/// End vertex of an arc (head of the traversal).
int arc_head(const Graph& g, const Arc& a);

} // namespace maglap
