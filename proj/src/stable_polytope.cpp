#include "polyskel/stable_polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyskel {
namespace {

void guard(const SimpleGraph& g, PerfectnessCheck check) {
  if (check == PerfectnessCheck::enforce && !is_perfect(g)) throw NotPerfectError();
}

void require_stable(const SimpleGraph& g, Subset s) {
  if (!s.is_subset_of(g.vertices())) {
    throw std::invalid_argument(s.to_string() + " exceeds the vertex set");
  }
  if (!is_stable(g, s)) throw std::invalid_argument(s.to_string() + " is not a stable set");
}

bool edge_unchecked(const SimpleGraph& g, Subset a, Subset b) {
  return is_connected_bipartite(induced_subgraph(g, symmetric_difference(a, b)).graph);
}

bool clique_unchecked(const SimpleGraph& g, std::span<const Subset> sets) {
  std::vector<Subset> sorted(sets.begin(), sets.end());
  for (Subset s : sorted) require_stable(g, s);
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("clique candidates must be pairwise distinct");
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!edge_unchecked(g, sorted[i], sorted[j])) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<LatticePoint> stab_vertices(const SimpleGraph& g) {
  std::vector<LatticePoint> out;
  for (Subset w : enumerate_stable_sets(g)) out.push_back(LatticePoint::indicator(w, g.size()));
  return out;
}

std::vector<Hyperplane> stab_h_description(const SimpleGraph& g, PerfectnessCheck check) {
  guard(g, check);
  const std::size_t n = g.size();
  std::vector<Hyperplane> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(coordinate_constraint(n, i, Relation::greater_equal, 0));
  }
  for (Subset clique : maximal_cliques(g)) {
    out.push_back(sum_constraint(n, clique, Relation::less_equal, 1));
  }
  return out;
}

bool is_stab_edge(const SimpleGraph& g, Subset first, Subset second, PerfectnessCheck check) {
  if (first == second) throw std::invalid_argument("edge endpoints must be distinct stable sets");
  require_stable(g, first);
  require_stable(g, second);
  guard(g, check);
  return edge_unchecked(g, first, second);
}

SkeletonGraph stab_skeleton(const SimpleGraph& g, PerfectnessCheck check) {
  guard(g, check);
  SkeletonGraph sk(enumerate_stable_sets(g));
  for (std::size_t i = 0; i < sk.size(); ++i) {
    for (std::size_t j = i + 1; j < sk.size(); ++j) {
      if (edge_unchecked(g, sk.label(i), sk.label(j))) sk.add_edge(i, j);
    }
  }
  return sk;
}

bool is_stab_clique(const SimpleGraph& g, std::span<const Subset> sets, PerfectnessCheck check) {
  guard(g, check);
  return clique_unchecked(g, sets);
}

std::vector<Subset> cliques_meeting_all(const SimpleGraph& g, std::span<const Subset> sets) {
  std::vector<Subset> out;
  for (Subset clique : maximal_cliques(g)) {
    const bool meets_all = std::all_of(sets.begin(), sets.end(),
                                       [&](Subset w) { return !(clique & w).empty(); });
    if (meets_all) out.push_back(clique);
  }
  return out;
}

std::vector<Hyperplane> stab_clique_face_system(const SimpleGraph& g, std::span<const Subset> sets,
                                                PerfectnessCheck check) {
  guard(g, check);
  if (sets.empty()) throw std::invalid_argument("clique must be nonempty");
  if (!clique_unchecked(g, sets)) {
    throw std::invalid_argument("stable sets do not form a clique of the skeleton");
  }
  const std::size_t n = g.size();
  std::vector<Hyperplane> out;
  // An empty family imposes nothing: the intersection is all of Stab(G).
  for (Subset clique : cliques_meeting_all(g, sets)) {
    out.push_back(sum_constraint(n, clique, Relation::equal, 1));
  }
  Subset support;
  for (Subset w : sets) support = support | w;
  for (std::size_t i : (g.vertices() - support).elements()) {
    out.push_back(coordinate_constraint(n, i, Relation::equal, 0));
  }
  return out;
}

std::vector<LatticePoint> chain_polytope_vertices(const Poset& poset) {
  return stab_vertices(comparability_graph(poset));
}

}  // namespace polyskel
