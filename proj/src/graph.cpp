#include "polyskel/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace polyskel {

SimpleGraph::SimpleGraph(std::size_t n) : adjacency_(n) {
  if (n > Subset::kMaxElements) {
    throw std::invalid_argument("graph size must be at most 64, got " + std::to_string(n));
  }
}

void SimpleGraph::add_edge(std::size_t i, std::size_t j) {
  adjacency_[i].insert(j);
  adjacency_[j].insert(i);
}

SimpleGraph SimpleGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  SimpleGraph g(n);
  for (const auto& [i, j] : edges) {
    if (i >= n || j >= n) {
      throw std::invalid_argument("edge {" + std::to_string(i + 1) + ", " +
                                  std::to_string(j + 1) + "} out of range");
    }
    if (i == j) throw std::invalid_argument("loop on vertex " + std::to_string(i + 1));
    if (g.adjacent(i, j)) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(i + 1) + ", " +
                                  std::to_string(j + 1) + "}");
    }
    g.add_edge(i, j);
  }
  return g;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : adjacency_[i].elements()) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (Subset nb : adjacency_) twice += nb.size();
  return twice / 2;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph out(size());
  const Subset all = vertices();
  for (std::size_t i = 0; i < size(); ++i) {
    out.adjacency_[i] = all - adjacency_[i] - Subset::of({i});
  }
  return out;
}

bool is_stable(const SimpleGraph& g, Subset s) {
  for (std::size_t i : s.elements()) {
    if (!(g.neighbours(i) & s).empty()) return false;
  }
  return true;
}

bool is_clique(const SimpleGraph& g, Subset s) {
  for (std::size_t i : s.elements()) {
    if (!(s - Subset::of({i})).is_subset_of(g.neighbours(i))) return false;
  }
  return true;
}

namespace {

void extend_stable(const SimpleGraph& g, std::size_t next, Subset current,
                   std::vector<Subset>& out) {
  if (next == g.size()) {
    out.push_back(current);
    return;
  }
  extend_stable(g, next + 1, current, out);
  if ((g.neighbours(next) & current).empty()) extend_stable(g, next + 1, current.with(next), out);
}

void bron_kerbosch(const SimpleGraph& g, Subset r, Subset p, Subset x, std::vector<Subset>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex of P u X with the most neighbours in P.
  std::size_t pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  for (std::size_t u : (p | x).elements()) {
    const std::size_t k = (g.neighbours(u) & p).size();
    if (!have_pivot || k > best) {
      pivot = u;
      best = k;
      have_pivot = true;
    }
  }
  for (std::size_t v : (p - g.neighbours(pivot)).elements()) {
    const Subset nb = g.neighbours(v);
    bron_kerbosch(g, r.with(v), p & nb, x & nb, out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<Subset> enumerate_stable_sets(const SimpleGraph& g) {
  std::vector<Subset> out;
  extend_stable(g, 0, Subset{}, out);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<Subset> maximal_cliques(const SimpleGraph& g) {
  std::vector<Subset> out;
  if (g.size() == 0) return out;
  bron_kerbosch(g, Subset{}, g.vertices(), Subset{}, out);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, Subset s) {
  if (!s.is_subset_of(g.vertices())) {
    throw std::out_of_range("subset " + s.to_string() + " exceeds graph of size " +
                            std::to_string(g.size()));
  }
  InducedSubgraph out{SimpleGraph(s.size()), s.elements()};
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < out.labels.size(); ++a) {
    for (std::size_t b = a + 1; b < out.labels.size(); ++b) {
      if (g.adjacent(out.labels[a], out.labels[b])) edges.emplace_back(a, b);
    }
  }
  out.graph = SimpleGraph::from_edges(s.size(), edges);
  return out;
}

bool is_connected_bipartite(const SimpleGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return false;
  // BFS 2-colouring from vertex 0; colour[v] is meaningful once v is reached.
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> queue{0};
  colour[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (std::size_t v : g.neighbours(u).elements()) {
      if (colour[v] < 0) {
        colour[v] = 1 - colour[u];
        queue.push_back(v);
      } else if (colour[v] == colour[u]) {
        return false;
      }
    }
  }
  return queue.size() == n;
}

namespace {

// Every vertex of `s` has exactly two neighbours inside `s`, and `s` is connected.
bool induces_cycle(const SimpleGraph& g, Subset s) {
  for (std::size_t v : s.elements()) {
    if ((g.neighbours(v) & s).size() != 2) return false;
  }
  const auto elems = s.elements();
  Subset reached = Subset::of({elems.front()});
  Subset frontier = reached;
  while (!frontier.empty()) {
    Subset next;
    for (std::size_t v : frontier.elements()) next = next | (g.neighbours(v) & s);
    frontier = next - reached;
    reached = reached | next;
  }
  return reached == s;
}

bool has_odd_hole(const SimpleGraph& g) {
  const std::size_t n = g.size();
  if (n < 5) return false;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const int k = std::popcount(mask);
    if (k < 5 || k % 2 == 0) continue;
    if (induces_cycle(g, Subset::from_mask(mask))) return true;
  }
  return false;
}

}  // namespace

bool is_perfect(const SimpleGraph& g) {
  if (g.size() > 20) throw std::invalid_argument("perfectness test limited to 20 vertices");
  return !has_odd_hole(g) && !has_odd_hole(g.complement());
}

}  // namespace polyskel
