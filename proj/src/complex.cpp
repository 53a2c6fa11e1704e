#include "polyskel/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace polyskel {

bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

struct SimplexLess {
  bool operator()(const Simplex& a, const Simplex& b) const { return simplex_less(a, b); }
};

}  // namespace

SkeletonGraph::SkeletonGraph(std::vector<Subset> labels)
    : labels_(std::move(labels)),
      adjacency_(labels_.size(), std::vector<bool>(labels_.size(), false)),
      neighbours_(labels_.size()) {}

void SkeletonGraph::add_edge(std::size_t i, std::size_t j) {
  if (i >= size() || j >= size()) throw std::invalid_argument("skeleton edge out of range");
  if (i == j) throw std::invalid_argument("skeleton edge is a loop");
  if (adjacency_[i][j]) return;
  adjacency_[i][j] = adjacency_[j][i] = true;
  neighbours_[i].insert(std::lower_bound(neighbours_[i].begin(), neighbours_[i].end(), j), j);
  neighbours_[j].insert(std::lower_bound(neighbours_[j].begin(), neighbours_[j].end(), i), i);
  ++edge_count_;
}

std::vector<std::pair<std::size_t, std::size_t>> SkeletonGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : neighbours_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

bool SkeletonGraph::is_clique(const Simplex& s) const {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (!adjacency_[s[a]][s[b]]) return false;
    }
  }
  return true;
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertex_count,
                                                std::vector<Simplex> faces) {
  for (auto& f : faces) {
    if (f.empty()) throw std::invalid_argument("complex faces must be nonempty");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.back() >= vertex_count) throw std::invalid_argument("complex face out of range");
  }
  // Larger faces first so every potential superset is seen before its subsets.
  std::sort(faces.begin(), faces.end(), [](const Simplex& a, const Simplex& b) {
    return simplex_less(b, a);
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex out(vertex_count);
  for (auto& f : faces) {
    const bool covered = std::any_of(out.facets_.begin(), out.facets_.end(), [&](const Simplex& g) {
      return std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!covered) out.facets_.push_back(std::move(f));
  }
  std::sort(out.facets_.begin(), out.facets_.end(), SimplexLess{});
  return out;
}

bool SimplicialComplex::contains(const Simplex& face) const {
  Simplex sorted = face;
  std::sort(sorted.begin(), sorted.end());
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& g) {
    return std::includes(g.begin(), g.end(), sorted.begin(), sorted.end());
  });
}

std::vector<Simplex> SimplicialComplex::faces() const {
  std::set<Simplex, SimplexLess> all;
  for (const auto& facet : facets_) {
    if (facet.size() >= 63) throw std::length_error("facet too large to expand");
    const std::uint64_t limit = std::uint64_t{1} << facet.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      Simplex face;
      for (std::size_t k = 0; k < facet.size(); ++k) {
        if ((mask >> k) & 1U) face.push_back(facet[k]);
      }
      all.insert(std::move(face));
    }
  }
  return {all.begin(), all.end()};
}

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (const auto& f : facets_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  return dim;
}

namespace {

std::vector<std::size_t> intersect_neighbours(const std::vector<std::size_t>& set,
                                              const std::vector<std::size_t>& nb) {
  std::vector<std::size_t> out;
  std::set_intersection(set.begin(), set.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

void bron_kerbosch(const SkeletonGraph& g, Simplex& r, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, std::vector<Simplex>& out) {
  if (p.empty() && x.empty()) {
    Simplex clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  std::size_t pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  for (const auto* set : {&p, &x}) {
    for (std::size_t u : *set) {
      const std::size_t k = intersect_neighbours(p, g.neighbours(u)).size();
      if (!have_pivot || k > best) {
        pivot = u;
        best = k;
        have_pivot = true;
      }
    }
  }
  std::vector<std::size_t> candidates;
  std::set_difference(p.begin(), p.end(), g.neighbours(pivot).begin(), g.neighbours(pivot).end(),
                      std::back_inserter(candidates));
  for (std::size_t v : candidates) {
    r.push_back(v);
    bron_kerbosch(g, r, intersect_neighbours(p, g.neighbours(v)),
                  intersect_neighbours(x, g.neighbours(v)), out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

std::vector<Simplex> maximal_cliques(const SkeletonGraph& g) {
  std::vector<Simplex> out;
  if (g.size() == 0) return out;
  std::vector<std::size_t> all(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) all[v] = v;
  Simplex r;
  bron_kerbosch(g, r, std::move(all), {}, out);
  std::sort(out.begin(), out.end(), SimplexLess{});
  return out;
}

std::vector<Simplex> all_cliques(const SkeletonGraph& g) {
  SimplicialComplex complex = clique_complex(g);
  return complex.faces();
}

SimplicialComplex clique_complex(const SkeletonGraph& g) {
  return SimplicialComplex::from_faces(g.size(), maximal_cliques(g));
}

ComplexComparison complexes_equal(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw std::invalid_argument("complexes live on different vertex sets (" +
                                std::to_string(a.vertex_count()) + " vs " +
                                std::to_string(b.vertex_count()) + ")");
  }
  ComplexComparison out;
  if (a.facets() == b.facets()) {
    out.equal = true;
    return out;
  }
  // Some facet of one complex is missing from the other.
  for (const auto& f : a.facets()) {
    if (!b.contains(f)) {
      out.difference = f;
      return out;
    }
  }
  for (const auto& f : b.facets()) {
    if (!a.contains(f)) {
      out.difference = f;
      return out;
    }
  }
  return out;
}

}  // namespace polyskel
