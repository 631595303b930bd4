#include "maglap/matching.hpp"

#include <algorithm>

namespace maglap {

namespace {

class MatchingSearch {
public:
  explicit MatchingSearch(const Graph& g) : g_(g), used_(g.vertex_count(), 0) {}

  Matching run() {
    seed_greedy();
    std::vector<EdgeId> current;
    explore(0, current);
    std::sort(best_.begin(), best_.end());
    return {best_};
  }

private:
  void seed_greedy() {
    std::vector<char> used(g_.vertex_count(), 0);
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      const Edge& ed = g_.edge(e);
      if (!used[ed.u] && !used[ed.v]) {
        used[ed.u] = used[ed.v] = 1;
        best_.push_back(e);
      }
    }
  }

  // Upper bound on how many more edges can join the matching: both the
  // free-vertex count bound and a greedy vertex cover of the free subgraph
  // dominate mu of that subgraph.
  int upper_bound() const {
    std::vector<int> free_deg(g_.vertex_count(), 0);
    int free_edges = 0;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      const Edge& ed = g_.edge(e);
      if (!used_[ed.u] && !used_[ed.v]) {
        ++free_deg[ed.u];
        ++free_deg[ed.v];
        ++free_edges;
      }
    }
    int active = 0;
    for (int v = 0; v < g_.vertex_count(); ++v)
      if (free_deg[v] > 0) ++active;
    int bound = active / 2;

    int cover = 0;
    while (free_edges > 0) {
      int v = static_cast<int>(std::max_element(free_deg.begin(), free_deg.end()) -
                               free_deg.begin());
      ++cover;
      if (cover >= bound) break;
      for (EdgeId e : g_.incident_edges(v)) {
        const Edge& ed = g_.edge(e);
        int w = g_.opposite_endpoint(e, v);
        if (!used_[ed.u] && !used_[ed.v] && free_deg[v] > 0 && free_deg[w] > 0) {
          --free_deg[w];
          --free_edges;
        }
      }
      free_deg[v] = 0;
    }
    return std::min(bound, cover);
  }

  void explore(int from_vertex, std::vector<EdgeId>& current) {
    int v = -1;
    for (int x = from_vertex; x < g_.vertex_count(); ++x) {
      if (used_[x]) continue;
      bool has_free_neighbor = false;
      for (EdgeId e : g_.incident_edges(x))
        if (!used_[g_.opposite_endpoint(e, x)]) {
          has_free_neighbor = true;
          break;
        }
      if (has_free_neighbor) {
        v = x;
        break;
      }
    }
    if (v < 0) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (static_cast<int>(current.size()) + upper_bound() <= static_cast<int>(best_.size())) return;

    for (EdgeId e : g_.incident_edges(v)) {
      int w = g_.opposite_endpoint(e, v);
      if (used_[w]) continue;
      used_[v] = used_[w] = 1;
      current.push_back(e);
      explore(v + 1, current);
      current.pop_back();
      used_[v] = used_[w] = 0;
    }
    // or leave v unmatched
    used_[v] = 1;
    explore(v + 1, current);
    used_[v] = 0;
  }

  const Graph& g_;
  std::vector<char> used_;
  std::vector<EdgeId> best_;
};

} // namespace

Matching maximum_matching(const Graph& g) { return MatchingSearch(g).run(); }

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

bool is_matchable(const Graph& g) { return 2 * matching_number(g) == g.vertex_count(); }

bool is_valid_matching(const Graph& g, const std::vector<EdgeId>& edges) {
  std::vector<char> used(g.vertex_count(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (used[ed.u] || used[ed.v]) return false;
    used[ed.u] = used[ed.v] = 1;
  }
  return true;
}

} // namespace maglap
