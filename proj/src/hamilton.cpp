#include "maglap/hamilton.hpp"

#include <algorithm>
#include <string>

namespace maglap {

namespace {

class HamiltonSearch {
public:
  HamiltonSearch(const Graph& g, const HamiltonOptions& opts)
      : g_(g), opts_(opts), n_(g.vertex_count()), on_path_(n_, 0) {
    neighbors_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      for (EdgeId e : g.incident_edges(v)) neighbors_[v].push_back(g.opposite_endpoint(e, v));
      std::sort(neighbors_[v].begin(), neighbors_[v].end());
    }
    budget_limited_ = n_ > opts.exhaustive_max_n;
  }

  HamiltonResult run() {
    HamiltonResult r;
    for (int v = 0; v < n_; ++v)
      if (static_cast<int>(neighbors_[v].size()) < 2) return r; // none: degree < 2
    if (!g_.is_connected()) return r;

    path_.reserve(n_);
    path_.push_back(0);
    on_path_[0] = 1;
    bool completed = extend();
    r.nodes_explored = nodes_;
    if (found_) {
      r.status = HamiltonStatus::found;
      r.cycle = HamiltonianCycle{path_};
    } else if (completed) {
      r.status = HamiltonStatus::none;
    } else {
      r.status = HamiltonStatus::unknown;
    }
    return r;
  }

private:
  // Returns false when the node budget ran out (search incomplete).
  bool extend() {
    if (budget_limited_ && nodes_ >= opts_.node_budget) return false;
    ++nodes_;
    int cur = path_.back();
    if (static_cast<int>(path_.size()) == n_) {
      if (std::binary_search(neighbors_[cur].begin(), neighbors_[cur].end(), 0)) {
        found_ = true;
      }
      return true;
    }
    if (!prune_ok(cur)) return true;
    for (int w : neighbors_[cur]) {
      if (on_path_[w]) continue;
      path_.push_back(w);
      on_path_[w] = 1;
      bool complete = extend();
      if (found_) return true;
      path_.pop_back();
      on_path_[w] = 0;
      if (!complete) return false;
    }
    return true;
  }

  // Cheap feasibility checks on the remaining vertices: every unvisited
  // vertex needs two usable connections (one suffices for the endpoints),
  // and the unvisited region plus both endpoints must be connected.
  bool prune_ok(int cur) const {
    const int start = 0;
    for (int v = 0; v < n_; ++v) {
      if (on_path_[v]) continue;
      int usable = 0;
      for (int w : neighbors_[v])
        if (!on_path_[w] || w == cur || w == start) ++usable;
      if (usable < 2) return false;
    }
    // connectivity of {unvisited} + {cur}
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{cur};
    seen[cur] = 1;
    int want = 1;
    for (int v = 0; v < n_; ++v)
      if (!on_path_[v]) ++want;
    int got = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbors_[v]) {
        if (seen[w]) continue;
        if (on_path_[w] && w != cur) continue;
        seen[w] = 1;
        if (!on_path_[w]) ++got;
        stack.push_back(w);
      }
    }
    return got == want;
  }

  const Graph& g_;
  HamiltonOptions opts_;
  int n_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<char> on_path_;
  std::vector<int> path_;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
  bool budget_limited_ = false;
};

} // namespace

HamiltonResult find_hamiltonian_cycle(const Graph& g, const HamiltonOptions& opts) {
  if (g.vertex_count() < 3)
    throw Error(Error::Code::CycleTooSmall,
                "hamiltonian cycle needs n >= 3, got " + std::to_string(g.vertex_count()));
  return HamiltonSearch(g, opts).run();
}

bool is_valid_hamiltonian_cycle(const Graph& g, const HamiltonianCycle& cycle) {
  const int n = g.vertex_count();
  if (static_cast<int>(cycle.vertices.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : cycle.vertices) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.find_edge(cycle.vertices[i], cycle.vertices[(i + 1) % n])) return false;
  return true;
}

} // namespace maglap
