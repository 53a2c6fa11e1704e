#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "polyskel/graph.hpp"
#include "polyskel/subset.hpp"

namespace polyskel {

// An ordered pair (lower, upper) of 0-based element indices.
using Cover = std::pair<std::size_t, std::size_t>;

// A finite poset on {0, ..., d-1}. Immutable after construction; the strict
// order is stored as down-sets, the cover relation as its transitive reduction.
class Poset {
 public:
  // `relations` may contain any generating pairs (lower, upper); the order is
  // their transitive closure. Throws std::invalid_argument on loops, duplicate
  // pairs, out-of-range indices or cycles.
  static Poset from_covers(std::size_t d, std::span<const Cover> relations);

  // below[i] = { j : p_j < p_i }. Throws unless the relation is a strict order.
  static Poset from_down_sets(std::vector<Subset> below);

  std::size_t size() const { return below_.size(); }

  bool less(std::size_t i, std::size_t j) const { return below_[j].contains(i); }
  bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }

  // Strict down-set / up-set of p_i.
  Subset below(std::size_t i) const { return below_[i]; }
  Subset above(std::size_t i) const { return above_[i]; }

  bool is_minimal(std::size_t i) const { return below_[i].empty(); }
  bool is_maximal(std::size_t i) const { return above_[i].empty(); }

  // Cover pairs (lower, upper), sorted.
  const std::vector<Cover>& covers() const { return covers_; }

  bool covers(std::size_t lower, std::size_t upper) const;

  // Neighbours of p_i in the Hasse diagram.
  Subset hasse_neighbours(std::size_t i) const { return hasse_[i]; }

  friend bool operator==(const Poset& a, const Poset& b) { return a.below_ == b.below_; }

 private:
  explicit Poset(std::vector<Subset> below);

  std::vector<Subset> below_;
  std::vector<Subset> above_;
  std::vector<Cover> covers_;
  std::vector<Subset> hasse_;
};

// Every poset ideal (down-set) in canonical order: cardinality, then
// lexicographic on the sorted element list.
std::vector<Subset> enumerate_ideals(const Poset& poset);

// Throws std::out_of_range if `s` has an element >= poset.size().
bool is_ideal(const Poset& poset, Subset s);

// Cover pairs as unordered pairs {i, j} with i < j, sorted.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Poset& poset);

// Connectivity of the subgraph of the Hasse diagram induced on `s`.
// Throws std::invalid_argument for the empty set.
bool is_connected_in_poset(const Poset& poset, Subset s);

// Subsets of pairwise incomparable elements, canonical order.
std::vector<Subset> antichains(const Poset& poset);

SimpleGraph comparability_graph(const Poset& poset);

}  // namespace polyskel
