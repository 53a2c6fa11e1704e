#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "polyskel/subset.hpp"

namespace polyskel {

using Edge = std::pair<std::size_t, std::size_t>;

// Finite simple graph on {0, ..., n-1}, n <= 64, stored as neighbourhood masks.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n = 0);

  // Throws std::invalid_argument on loops, duplicate edges (in either
  // orientation) and out-of-range endpoints.
  static SimpleGraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return adjacency_.size(); }

  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i].contains(j); }
  Subset neighbours(std::size_t i) const { return adjacency_[i]; }
  Subset vertices() const { return Subset::full(size()); }

  // Edges {i, j} with i < j, sorted.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  SimpleGraph complement() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void add_edge(std::size_t i, std::size_t j);

  std::vector<Subset> adjacency_;
};

bool is_stable(const SimpleGraph& g, Subset s);
bool is_clique(const SimpleGraph& g, Subset s);

// All stable sets including the empty set, canonical order.
std::vector<Subset> enumerate_stable_sets(const SimpleGraph& g);

// Inclusion-maximal cliques (Bron-Kerbosch with pivoting), canonical order.
// Isolated vertices appear as singletons; the 0-vertex graph has none.
std::vector<Subset> maximal_cliques(const SimpleGraph& g);

struct InducedSubgraph {
  SimpleGraph graph;
  // labels[k] is the vertex of the parent graph that became vertex k.
  std::vector<std::size_t> labels;
};

InducedSubgraph induced_subgraph(const SimpleGraph& g, Subset s);

// Connected and free of odd cycles. The 0-vertex graph is not connected.
bool is_connected_bipartite(const SimpleGraph& g);

inline Subset symmetric_difference(Subset a, Subset b) { return a ^ b; }

// No induced odd cycle of length >= 5 in g or its complement. Exponential;
// intended for n up to about a dozen.
bool is_perfect(const SimpleGraph& g);

}  // namespace polyskel
