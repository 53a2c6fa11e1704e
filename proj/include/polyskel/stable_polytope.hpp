#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "polyskel/complex.hpp"
#include "polyskel/geometry.hpp"
#include "polyskel/graph.hpp"
#include "polyskel/poset.hpp"

namespace polyskel {

// The edge criterion and the face construction below rest on the clique
// facet description of Stab(G), which needs G perfect. By default every entry
// point checks this; `skip` is for experiments outside that hypothesis.
enum class PerfectnessCheck { enforce, skip };

class NotPerfectError : public std::domain_error {
 public:
  NotPerfectError() : std::domain_error("graph is not perfect") {}
};

// Indicator vectors of the stable sets, index-aligned with enumerate_stable_sets().
std::vector<LatticePoint> stab_vertices(const SimpleGraph& g);

// {x_i >= 0} followed by {sum_{i in C} x_i <= 1 : C maximal clique}, cliques in
// canonical order. Its 0/1 solutions are the stable sets for any graph.
std::vector<Hyperplane> stab_h_description(const SimpleGraph& g,
                                           PerfectnessCheck check = PerfectnessCheck::enforce);

// Edge iff G restricted to W xor W' is connected and bipartite.
bool is_stab_edge(const SimpleGraph& g, Subset first, Subset second,
                  PerfectnessCheck check = PerfectnessCheck::enforce);

SkeletonGraph stab_skeleton(const SimpleGraph& g,
                            PerfectnessCheck check = PerfectnessCheck::enforce);

// Pairwise edge test. Throws std::invalid_argument on repeated sets.
bool is_stab_clique(const SimpleGraph& g, std::span<const Subset> sets,
                    PerfectnessCheck check = PerfectnessCheck::enforce);

// Maximal cliques of G meeting every member of `sets`, canonical order.
std::vector<Subset> cliques_meeting_all(const SimpleGraph& g, std::span<const Subset> sets);

// Equalities cutting conv(sets) out of Stab(G):
//   sum_{i in C} x_i = 1 for each maximal clique C meeting every member,
//   x_i = 0 for i outside the union of the members.
// Throws std::invalid_argument if `sets` is not a skeleton clique.
std::vector<Hyperplane> stab_clique_face_system(const SimpleGraph& g, std::span<const Subset> sets,
                                                PerfectnessCheck check = PerfectnessCheck::enforce);

// Stab(Com(P)), which is the chain polytope of P.
std::vector<LatticePoint> chain_polytope_vertices(const Poset& poset);

}  // namespace polyskel
