#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polyskel/subset.hpp"

namespace polyskel {

// A set of vertex indices of a polytope, sorted ascending. Vertex counts can
// exceed 64 (the 6-cube has 64 vertices), so these are not bitmasks.
using Simplex = std::vector<std::size_t>;

// Size first, then lexicographic.
bool simplex_less(const Simplex& a, const Simplex& b);

// The 1-skeleton of a polytope: a simple graph on vertex indices, each vertex
// carrying the combinatorial object it came from (an ideal, a stable set, or
// the support of a 0/1 point).
class SkeletonGraph {
 public:
  SkeletonGraph() = default;
  explicit SkeletonGraph(std::vector<Subset> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<Subset>& labels() const { return labels_; }
  const Subset& label(std::size_t v) const { return labels_[v]; }

  // Throws std::invalid_argument on loops or out-of-range endpoints; adding an
  // existing edge is a no-op.
  void add_edge(std::size_t i, std::size_t j);
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i][j]; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return neighbours_[v]; }

  // Pairs (i, j), i < j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const { return edge_count_; }

  bool is_clique(const Simplex& s) const;

  // Same vertex count and edges; labels are ignored.
  bool same_edges(const SkeletonGraph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<Subset> labels_;
  std::vector<std::vector<bool>> adjacency_;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::size_t edge_count_ = 0;
};

// A simplicial complex stored by its facets (inclusion-maximal faces).
class SimplicialComplex {
 public:
  explicit SimplicialComplex(std::size_t vertex_count = 0) : vertex_count_(vertex_count) {}

  // Any family of nonempty faces; non-maximal members are dropped. Throws
  // std::invalid_argument on empty or out-of-range faces.
  static SimplicialComplex from_faces(std::size_t vertex_count, std::vector<Simplex> faces);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Simplex>& facets() const { return facets_; }

  bool contains(const Simplex& face) const;
  // Every nonempty face, canonical order.
  std::vector<Simplex> faces() const;
  // -1 for the empty complex.
  int dimension() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<Simplex> facets_;
};

// Inclusion-maximal cliques of a skeleton (Bron-Kerbosch with pivoting), canonical order.
std::vector<Simplex> maximal_cliques(const SkeletonGraph& g);

// Every nonempty clique, canonical order.
std::vector<Simplex> all_cliques(const SkeletonGraph& g);

SimplicialComplex clique_complex(const SkeletonGraph& g);

struct ComplexComparison {
  bool equal = false;
  // On inequality: a face of exactly one of the two complexes.
  std::optional<Simplex> difference;
};

// Throws std::invalid_argument when ambient vertex counts differ.
ComplexComparison complexes_equal(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace polyskel
