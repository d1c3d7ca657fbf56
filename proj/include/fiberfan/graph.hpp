#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fiberfan {

/// Undirected simple graph; edges stored as sorted (i < j) pairs.
struct Graph {
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  void add_edge(std::size_t a, std::size_t b);
  void normalize();
  bool has_edge(std::size_t a, std::size_t b) const;
  bool connected() const;
  std::vector<std::size_t> degrees() const;
};

}  // namespace fiberfan
