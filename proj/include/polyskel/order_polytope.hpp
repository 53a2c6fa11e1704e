#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyskel/complex.hpp"
#include "polyskel/geometry.hpp"
#include "polyskel/poset.hpp"

namespace polyskel {

// Indicator vectors of the ideals, index-aligned with enumerate_ideals().
std::vector<LatticePoint> order_polytope_vertices(const Poset& poset);

// Facet inequalities of the order polytope under the down-set convention:
//   x_j >= x_i  for every cover p_j < p_i,
//   x_i <= 1    for every minimal p_i,
//   x_i >= 0    for every maximal p_i.
std::vector<Hyperplane> order_polytope_h_description(const Poset& poset);

// {rho(I), rho(J)} is an edge iff one ideal contains the other and the
// difference is connected in the Hasse diagram. Throws std::invalid_argument if
// the ideals are equal or either is not an ideal.
bool is_order_edge(const Poset& poset, Subset first, Subset second);

// Skeleton on the ideals (labels), built from is_order_edge.
SkeletonGraph order_skeleton(const Poset& poset);

// If `ideals` span a clique of the skeleton, the same ideals sorted into their
// inclusion chain. Throws std::invalid_argument on duplicates or non-ideals.
std::optional<std::vector<Subset>> is_order_clique(const Poset& poset,
                                                   std::span<const Subset> ideals);

// Equalities cutting out conv(chain) from the order polytope:
//   x_i = 1 for p_i in the first ideal,
//   x_i = x_j for each pair inside every consecutive difference,
//   x_i = 0 for p_i outside the last ideal.
// A one-element chain pins every coordinate. Throws std::invalid_argument
// unless `chain` is a clique chain (sorted, as returned by is_order_clique).
std::vector<Hyperplane> order_clique_face_system(const Poset& poset,
                                                 std::span<const Subset> chain);

}  // namespace polyskel
