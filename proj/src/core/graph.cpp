#include "fiberfan/graph.hpp"

#include <algorithm>

namespace fiberfan {

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) return;
  edges.emplace_back(std::min(a, b), std::max(a, b));
}

void Graph::normalize() {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
  return std::find(edges.begin(), edges.end(), std::make_pair(std::min(a, b), std::max(a, b))) != edges.end();
}

bool Graph::connected() const {
  if (nodes == 0) return true;
  std::vector<std::size_t> parent(nodes);
  for (std::size_t i = 0; i < nodes; ++i) parent[i] = i;
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = nodes;
  for (const auto& [a, b] : edges) {
    std::size_t ra = root(a), rb = root(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(nodes, 0);
  for (const auto& [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

}  // namespace fiberfan
