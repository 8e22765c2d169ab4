#pragma once

#include <limits>
#include <vector>

namespace semient {

struct WeightedEdge {
  int from;
  int to;
  double weight;
};

// Karp's maximum mean cycle weight over the subgraph induced by `nodes`
// (which should be strongly connected). Returns -infinity if it has no
// cycle.
double max_mean_cycle(int node_count, const std::vector<WeightedEdge>& edges, const std::vector<int>& nodes);

// Strongly connected components (Tarjan); comp[v] is the component id.
std::vector<int> strongly_connected_components(int node_count, const std::vector<WeightedEdge>& edges,
                                               int* component_count = nullptr);

}  // namespace semient
