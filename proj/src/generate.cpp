#include "maglap/generate.hpp"

#include <algorithm>
#include <numeric>

namespace maglap {

namespace {

std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq, int n) {
  std::vector<int> remaining_degree(n, 1);
  for (int x : seq) ++remaining_degree[x];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  std::vector<char> used(n, 0);
  for (int x : seq) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (remaining_degree[v] == 1 && !used[v]) {
        leaf = v;
        break;
      }
    edges.push_back({leaf, x});
    used[leaf] = 1;
    --remaining_degree[x];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (!used[v] && remaining_degree[v] == 1) (a < 0 ? a : b) = v;
  edges.push_back({a, b});
  return edges;
}

} // namespace

Graph random_tree(int n, Rng& rng) {
  if (n == 1) return Graph::from_edge_list(1, {});
  if (n == 2) return Graph::from_edge_list(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = pick(rng);
  return Graph::from_edge_list(n, pruefer_decode(seq, n));
}

Graph random_matchable_tree(int n, Rng& rng) {
  const int k = n / 2;
  n = 2 * k;
  // a tree on k super-nodes, each expanded to a matched pair (2i, 2i+1)
  Graph skeleton = random_tree(k, rng);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) pairs.push_back({2 * i, 2 * i + 1});
  std::uniform_int_distribution<int> coin(0, 1);
  for (const Edge& e : skeleton.edges())
    pairs.push_back({2 * e.u + coin(rng), 2 * e.v + coin(rng)});
  return Graph::from_edge_list(n, pairs);
}

Graph random_connected_graph(int n, int edge_count, Rng& rng) {
  Graph tree = random_tree(n, rng);
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : tree.edges()) pairs.push_back({e.u, e.v});

  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!tree.find_edge(u, v)) candidates.push_back({u, v});
  std::shuffle(candidates.begin(), candidates.end(), rng);

  int extra = std::clamp(edge_count - (n - 1), 0, static_cast<int>(candidates.size()));
  pairs.insert(pairs.end(), candidates.begin(), candidates.begin() + extra);
  return Graph::from_edge_list(n, pairs);
}

PlantedHamiltonian planted_hamiltonian_graph(int n, int extra_edges, Rng& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.push_back({order[i], order[(i + 1) % n]});

  std::vector<std::pair<int, int>> candidates;
  auto on_cycle = [&](int u, int v) {
    for (int i = 0; i < n; ++i) {
      int a = order[i], b = order[(i + 1) % n];
      if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!on_cycle(u, v)) candidates.push_back({u, v});
  std::shuffle(candidates.begin(), candidates.end(), rng);
  int extra = std::clamp(extra_edges, 0, static_cast<int>(candidates.size()));
  pairs.insert(pairs.end(), candidates.begin(), candidates.begin() + extra);

  PlantedHamiltonian out{Graph::from_edge_list(n, pairs), order, {}};
  for (int i = 0; i < n; ++i)
    out.cycle_edges.push_back(*out.graph.find_edge(order[i], order[(i + 1) % n]));
  return out;
}

MagneticPotential random_potential(const Graph& g, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  std::vector<double> vals(g.edge_count());
  for (double& v : vals) v = angle(rng);
  return MagneticPotential(std::move(vals));
}

Gauge random_gauge(int vertex_count, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  std::vector<double> vals(vertex_count);
  for (double& v : vals) v = angle(rng);
  return Gauge(std::move(vals));
}

} // namespace maglap
