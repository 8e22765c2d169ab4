#include "semient/mean_cycle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace semient {

double max_mean_cycle(int node_count, const std::vector<WeightedEdge>& edges, const std::vector<int>& nodes) {
  constexpr double kNone = -std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(nodes.size());
  if (n == 0) return kNone;
  std::vector<int> local(node_count, -1);
  for (int i = 0; i < n; ++i) local[nodes[i]] = i;
  std::vector<WeightedEdge> sub;
  for (const auto& e : edges)
    if (local[e.from] >= 0 && local[e.to] >= 0) sub.push_back({local[e.from], local[e.to], e.weight});
  if (sub.empty()) return kNone;

  // best[k][v]: heaviest walk of exactly k edges from node 0 to v.
  std::vector<std::vector<double>> best(n + 1, std::vector<double>(n, kNone));
  best[0][0] = 0.0;
  for (int k = 1; k <= n; ++k)
    for (const auto& e : sub)
      if (best[k - 1][e.from] != kNone) best[k][e.to] = std::max(best[k][e.to], best[k - 1][e.from] + e.weight);
  double answer = kNone;
  for (int v = 0; v < n; ++v) {
    if (best[n][v] == kNone) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k)
      if (best[k][v] != kNone) worst = std::min(worst, (best[n][v] - best[k][v]) / (n - k));
    answer = std::max(answer, worst);
  }
  return answer;
}

std::vector<int> strongly_connected_components(int node_count, const std::vector<WeightedEdge>& edges,
                                               int* component_count) {
  std::vector<std::vector<int>> adj(node_count);
  for (const auto& e : edges) adj[e.from].push_back(e.to);
  std::vector<int> index(node_count, -1), low(node_count, 0), comp(node_count, -1), stack;
  std::vector<bool> on_stack(node_count, false);
  int counter = 0, comps = 0;
  // Iterative Tarjan to avoid deep recursion on long chains.
  for (int root = 0; root < node_count; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < adj[v].size()) {
        const int w = adj[v][next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        while (true) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
          if (w == v) break;
        }
        ++comps;
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }
  if (component_count) *component_count = comps;
  return comp;
}

}  // namespace semient
