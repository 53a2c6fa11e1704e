#pragma once

#include <vector>

#include "polyskel/graph.hpp"
#include "polyskel/poset.hpp"

namespace polyskel::testing {

inline Poset chain(std::size_t d) {
  std::vector<Cover> covers;
  for (std::size_t i = 0; i + 1 < d; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(d, covers);
}

inline Poset antichain(std::size_t d) { return Poset::from_covers(d, {}); }

// a = 0, b = 1, c = 2 with a < c and b < c.
inline Poset v_poset() {
  const std::vector<Cover> covers{{0, 2}, {1, 2}};
  return Poset::from_covers(3, covers);
}

// a < b, a < c, b < d, c < d.
inline Poset diamond() {
  const std::vector<Cover> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return Poset::from_covers(4, covers);
}

inline SimpleGraph graph(std::size_t n, std::vector<Edge> edges) {
  return SimpleGraph::from_edges(n, edges);
}

inline SimpleGraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return graph(n, edges);
}

inline SimpleGraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return graph(n, edges);
}

inline SimpleGraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return graph(n, edges);
}

}  // namespace polyskel::testing
