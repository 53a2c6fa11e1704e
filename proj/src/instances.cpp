#include "polyskel/instances.hpp"

#include <stdexcept>
#include <string>

namespace polyskel {
namespace {

// below[] encodes a strict order: irreflexive (guaranteed by construction) and
// transitive.
bool transitive(const std::vector<Subset>& below) {
  for (std::size_t j = 0; j < below.size(); ++j) {
    for (std::size_t i : below[j].elements()) {
      if (!below[i].is_subset_of(below[j])) return false;
    }
  }
  return true;
}

void enumerate_relations(const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                         std::size_t k, std::vector<Subset>& below, std::vector<Poset>& out) {
  if (k == pairs.size()) {
    if (transitive(below)) out.push_back(Poset::from_down_sets(below));
    return;
  }
  const auto [i, j] = pairs[k];
  enumerate_relations(pairs, k + 1, below, out);
  below[j].insert(i);
  enumerate_relations(pairs, k + 1, below, out);
  below[j].erase(i);
  below[i].insert(j);
  enumerate_relations(pairs, k + 1, below, out);
  below[i].erase(j);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

std::vector<Poset> enumerate_labeled_posets(std::size_t d) {
  if (d == 0 || d > 6) throw std::invalid_argument("labeled poset enumeration supports 1 <= d <= 6");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Subset> below(d);
  std::vector<Poset> out;
  enumerate_relations(pairs, 0, below, out);
  return out;
}

std::vector<SimpleGraph> enumerate_labeled_graphs(std::size_t n) {
  if (n > 7) throw std::invalid_argument("labeled graph enumeration supports n <= 7");
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<SimpleGraph> out;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1U) edges.push_back(pairs[e]);
    }
    out.push_back(SimpleGraph::from_edges(n, edges));
  }
  return out;
}

Poset random_poset(std::size_t d, std::mt19937_64& rng) {
  if (d == 0 || d > Subset::kMaxElements) {
    throw std::invalid_argument("random poset size must be in [1, 64]");
  }
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  for (std::size_t i = d - 1; i > 0; --i) std::swap(perm[i], perm[bounded(rng, i + 1)]);
  std::vector<Cover> relations;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      if ((rng() >> 63) != 0) relations.emplace_back(perm[a], perm[b]);
    }
  }
  return Poset::from_covers(d, relations);
}

SimpleGraph random_perfect_graph(std::size_t n, std::mt19937_64& rng) {
  return comparability_graph(random_poset(n, rng));
}

}  // namespace polyskel
