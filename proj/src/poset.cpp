#include "polyskel/poset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace polyskel {

Poset::Poset(std::vector<Subset> below)
    : below_(std::move(below)), above_(below_.size()), hasse_(below_.size()) {
  const std::size_t d = below_.size();
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i : below_[j].elements()) above_[i].insert(j);
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i : below_[j].elements()) {
      // i < j is a cover iff nothing lies strictly between.
      if ((above_[i] & below_[j]).empty()) {
        covers_.emplace_back(i, j);
        hasse_[i].insert(j);
        hasse_[j].insert(i);
      }
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

Poset Poset::from_covers(std::size_t d, std::span<const Cover> relations) {
  if (d == 0 || d > Subset::kMaxElements) {
    throw std::invalid_argument("poset size must be in [1, 64], got " + std::to_string(d));
  }
  std::set<Cover> seen;
  std::vector<Subset> below(d);
  for (const auto& [lo, hi] : relations) {
    if (lo >= d || hi >= d) {
      throw std::invalid_argument("cover (" + std::to_string(lo + 1) + ", " +
                                  std::to_string(hi + 1) + ") out of range");
    }
    if (lo == hi) {
      throw std::invalid_argument("loop on element " + std::to_string(lo + 1));
    }
    if (!seen.insert({lo, hi}).second) {
      throw std::invalid_argument("duplicate cover (" + std::to_string(lo + 1) + ", " +
                                  std::to_string(hi + 1) + ")");
    }
    below[hi].insert(lo);
  }
  // Transitive closure by fixpoint iteration on down-set masks.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j < d; ++j) {
      Subset grown = below[j];
      for (std::size_t i : below[j].elements()) grown = grown | below[i];
      if (grown != below[j]) {
        below[j] = grown;
        changed = true;
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (below[i].contains(i)) {
      throw std::invalid_argument("cover relation has a cycle through element " +
                                  std::to_string(i + 1));
    }
  }
  return Poset(std::move(below));
}

Poset Poset::from_down_sets(std::vector<Subset> below) {
  const std::size_t d = below.size();
  if (d == 0 || d > Subset::kMaxElements) {
    throw std::invalid_argument("poset size must be in [1, 64], got " + std::to_string(d));
  }
  const Subset ground = Subset::full(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (!below[j].is_subset_of(ground)) throw std::invalid_argument("relation out of range");
    if (below[j].contains(j)) throw std::invalid_argument("relation is not irreflexive");
    for (std::size_t i : below[j].elements()) {
      if (!below[i].is_subset_of(below[j])) {
        throw std::invalid_argument("relation is not transitive");
      }
    }
  }
  return Poset(std::move(below));
}

bool Poset::covers(std::size_t lower, std::size_t upper) const {
  return std::binary_search(covers_.begin(), covers_.end(), Cover{lower, upper});
}

namespace {

void extend_ideals(const Poset& poset, const std::vector<std::size_t>& order, std::size_t pos,
                   Subset current, std::vector<Subset>& out) {
  if (pos == order.size()) {
    out.push_back(current);
    return;
  }
  const std::size_t e = order[pos];
  extend_ideals(poset, order, pos + 1, current, out);
  if (poset.below(e).is_subset_of(current)) {
    extend_ideals(poset, order, pos + 1, current.with(e), out);
  }
}

// A linear extension: elements sorted by the size of their down-set.
std::vector<std::size_t> linear_extension(const Poset& poset) {
  std::vector<std::size_t> order(poset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return poset.below(a).size() < poset.below(b).size();
  });
  return order;
}

}  // namespace

std::vector<Subset> enumerate_ideals(const Poset& poset) {
  std::vector<Subset> out;
  extend_ideals(poset, linear_extension(poset), 0, Subset{}, out);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

bool is_ideal(const Poset& poset, Subset s) {
  if (!s.is_subset_of(Subset::full(poset.size()))) {
    throw std::out_of_range("subset " + s.to_string() + " exceeds poset of size " +
                            std::to_string(poset.size()));
  }
  for (std::size_t i : s.elements()) {
    if (!poset.below(i).is_subset_of(s)) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Poset& poset) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [lo, hi] : poset.covers()) out.emplace_back(std::min(lo, hi), std::max(lo, hi));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected_in_poset(const Poset& poset, Subset s) {
  if (s.empty()) throw std::invalid_argument("connectivity of the empty set is undefined");
  if (!s.is_subset_of(Subset::full(poset.size()))) {
    throw std::out_of_range("subset " + s.to_string() + " exceeds poset");
  }
  Subset reached = Subset::of({s.elements().front()});
  Subset frontier = reached;
  while (!frontier.empty()) {
    Subset next;
    for (std::size_t i : frontier.elements()) next = next | (poset.hasse_neighbours(i) & s);
    frontier = next - reached;
    reached = reached | next;
  }
  return reached == s;
}

namespace {

void extend_antichains(const Poset& poset, std::size_t next, Subset current,
                       std::vector<Subset>& out) {
  if (next == poset.size()) {
    out.push_back(current);
    return;
  }
  extend_antichains(poset, next + 1, current, out);
  if ((current & (poset.below(next) | poset.above(next))).empty()) {
    extend_antichains(poset, next + 1, current.with(next), out);
  }
}

}  // namespace

std::vector<Subset> antichains(const Poset& poset) {
  std::vector<Subset> out;
  extend_antichains(poset, 0, Subset{}, out);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

SimpleGraph comparability_graph(const Poset& poset) {
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < poset.size(); ++j) {
    for (std::size_t i : poset.below(j).elements()) edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(edges.begin(), edges.end());
  return SimpleGraph::from_edges(poset.size(), edges);
}

}  // namespace polyskel
