#include "polyskel/order_polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polyskel {

std::vector<LatticePoint> order_polytope_vertices(const Poset& poset) {
  std::vector<LatticePoint> out;
  for (Subset ideal : enumerate_ideals(poset)) {
    out.push_back(LatticePoint::indicator(ideal, poset.size()));
  }
  return out;
}

std::vector<Hyperplane> order_polytope_h_description(const Poset& poset) {
  const std::size_t d = poset.size();
  std::vector<Hyperplane> out;
  for (const auto& [lower, upper] : poset.covers()) {
    out.push_back(difference_constraint(d, lower, upper, Relation::greater_equal));
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (poset.is_minimal(i)) out.push_back(coordinate_constraint(d, i, Relation::less_equal, 1));
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (poset.is_maximal(i)) out.push_back(coordinate_constraint(d, i, Relation::greater_equal, 0));
  }
  return out;
}

namespace {

void require_ideal(const Poset& poset, Subset s) {
  if (!is_ideal(poset, s)) throw std::invalid_argument(s.to_string() + " is not a poset ideal");
}

// Nested with a connected difference; both arguments known to be ideals.
bool nested_connected(const Poset& poset, Subset a, Subset b) {
  if (a.is_subset_of(b)) return is_connected_in_poset(poset, b - a);
  if (b.is_subset_of(a)) return is_connected_in_poset(poset, a - b);
  return false;
}

}  // namespace

bool is_order_edge(const Poset& poset, Subset first, Subset second) {
  if (first == second) throw std::invalid_argument("edge endpoints must be distinct ideals");
  require_ideal(poset, first);
  require_ideal(poset, second);
  return nested_connected(poset, first, second);
}

SkeletonGraph order_skeleton(const Poset& poset) {
  SkeletonGraph g(enumerate_ideals(poset));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (nested_connected(poset, g.label(i), g.label(j))) g.add_edge(i, j);
    }
  }
  return g;
}

std::optional<std::vector<Subset>> is_order_clique(const Poset& poset,
                                                   std::span<const Subset> ideals) {
  std::vector<Subset> chain(ideals.begin(), ideals.end());
  for (Subset s : chain) require_ideal(poset, s);
  std::sort(chain.begin(), chain.end(), CanonicalLess{});
  if (std::adjacent_find(chain.begin(), chain.end()) != chain.end()) {
    throw std::invalid_argument("clique candidates must be pairwise distinct");
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      // Sorted by size, so a clique chain has chain[i] inside chain[j].
      if (!chain[i].is_subset_of(chain[j])) return std::nullopt;
      if (!is_connected_in_poset(poset, chain[j] - chain[i])) return std::nullopt;
    }
  }
  return chain;
}

std::vector<Hyperplane> order_clique_face_system(const Poset& poset,
                                                 std::span<const Subset> chain) {
  if (chain.empty()) throw std::invalid_argument("clique chain must be nonempty");
  const auto validated = is_order_clique(poset, chain);
  if (!validated || !std::equal(validated->begin(), validated->end(), chain.begin())) {
    throw std::invalid_argument("input is not a sorted clique chain of the order polytope");
  }
  const std::size_t d = poset.size();
  std::vector<Hyperplane> out;
  for (std::size_t i : chain.front().elements()) {
    out.push_back(coordinate_constraint(d, i, Relation::equal, 1));
  }
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const auto block = (chain[k] - chain[k - 1]).elements();
    for (std::size_t a = 0; a < block.size(); ++a) {
      for (std::size_t b = a + 1; b < block.size(); ++b) {
        out.push_back(difference_constraint(d, block[a], block[b], Relation::equal));
      }
    }
  }
  for (std::size_t i : (Subset::full(d) - chain.back()).elements()) {
    out.push_back(coordinate_constraint(d, i, Relation::equal, 0));
  }
  return out;
}

}  // namespace polyskel
