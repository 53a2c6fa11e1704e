#include "polyskel/face_oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace polyskel {

FaceOracle::FaceOracle(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("face oracle needs at least one point");
  const std::size_t d = vertices_.front().dimension();
  std::set<LatticePoint> seen;
  for (const auto& v : vertices_) {
    if (v.dimension() != d) throw std::invalid_argument("points have mixed dimensions");
    if (!seen.insert(v).second) {
      throw std::invalid_argument("duplicate point " + v.to_string());
    }
  }
}

namespace {

Simplex validated(const Simplex& s, std::size_t vertex_count) {
  if (s.empty()) throw std::invalid_argument("face candidate must be nonempty");
  Simplex sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("face candidate repeats a vertex");
  }
  if (sorted.back() >= vertex_count) throw std::invalid_argument("face candidate out of range");
  return sorted;
}

}  // namespace

std::optional<Hyperplane> FaceOracle::supporting_hyperplane(const Simplex& s) {
  const Simplex members = validated(s, vertices_.size());
  const std::size_t d = vertices_.front().dimension();
  // Variables a_1..a_d, b.
  LPProblem lp{d + 1, {}};
  std::size_t next = 0;
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const bool inside = next < members.size() && members[next] == k;
    if (inside) ++next;
    Hyperplane row{std::vector<Rational>(d + 1), inside ? Relation::equal : Relation::less_equal,
                   Rational(inside ? 0 : -1)};
    for (std::size_t i = 0; i < d; ++i) row.coeffs[i] = vertices_[k][i];
    row.coeffs[d] = -1;
    lp.constraints.push_back(std::move(row));
  }
  ++lp_calls_;
  const LPResult result = lp_feasible(lp);
  if (!result.feasible) return std::nullopt;
  const auto& w = *result.witness;
  Hyperplane support{std::vector<Rational>(w.begin(), w.begin() + static_cast<long>(d)),
                     Relation::less_equal, w[d]};
  next = 0;
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const bool inside = next < members.size() && members[next] == k;
    if (inside) ++next;
    Rational value = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (vertices_[k][i] != 0) value += support.coeffs[i];
    }
    const bool ok = inside ? value == support.bound : value <= support.bound - 1;
    if (!ok) throw std::logic_error("supporting hyperplane certificate failed re-check");
  }
  return support;
}

bool FaceOracle::is_face(const Simplex& s) {
  const Simplex key = validated(s, vertices_.size());
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const bool face = supporting_hyperplane(key).has_value();
  cache_.emplace(key, face);
  return face;
}

SkeletonGraph FaceOracle::skeleton() {
  std::vector<Subset> labels;
  labels.reserve(vertices_.size());
  for (const auto& v : vertices_) labels.push_back(v.support());
  SkeletonGraph g(std::move(labels));
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      if (is_face({i, j})) g.add_edge(i, j);
    }
  }
  return g;
}

SimplicialComplex FaceOracle::simplicial_faces() {
  std::vector<Simplex> all;
  std::vector<Simplex> level;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (is_face({v})) level.push_back({v});
  }
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    const std::set<Simplex> known(level.begin(), level.end());
    std::vector<Simplex> next_level;
    for (const auto& face : level) {
      for (std::size_t v = face.back() + 1; v < vertices_.size(); ++v) {
        Simplex candidate = face;
        candidate.push_back(v);
        // Every facet of a simplicial face is itself a face.
        bool all_subfaces = true;
        for (std::size_t drop = 0; drop + 1 < candidate.size() && all_subfaces; ++drop) {
          Simplex sub = candidate;
          sub.erase(sub.begin() + static_cast<long>(drop));
          all_subfaces = known.contains(sub);
        }
        if (!all_subfaces) continue;
        std::vector<LatticePoint> points;
        for (std::size_t k : candidate) points.push_back(vertices_[k]);
        if (!affinely_independent(points)) continue;
        if (is_face(candidate)) next_level.push_back(std::move(candidate));
      }
    }
    level = std::move(next_level);
  }
  return SimplicialComplex::from_faces(vertices_.size(), std::move(all));
}

bool is_face(std::span<const LatticePoint> vertices, const Simplex& s) {
  FaceOracle oracle({vertices.begin(), vertices.end()});
  return oracle.is_face(s);
}

SkeletonGraph brute_force_skeleton(std::span<const LatticePoint> vertices) {
  FaceOracle oracle({vertices.begin(), vertices.end()});
  return oracle.skeleton();
}

SimplicialComplex simplicial_faces(std::span<const LatticePoint> vertices) {
  FaceOracle oracle({vertices.begin(), vertices.end()});
  return oracle.simplicial_faces();
}

bool affinely_independent(std::span<const LatticePoint> points) {
  if (points.size() <= 1) return true;
  const std::size_t d = points.front().dimension();
  const std::size_t rows = points.size() - 1;
  if (rows > d) return false;
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(d));
  for (std::size_t r = 0; r < rows; ++r) {
    if (points[r + 1].dimension() != d) throw std::invalid_argument("points have mixed dimensions");
    for (std::size_t c = 0; c < d; ++c) m[r][c] = points[r + 1][c] - points.front()[c];
  }
  // Bareiss elimination; rank equals the number of pivots found.
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < d; ++c) {
        m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / previous;
      }
      m[r][col] = 0;
    }
    previous = m[rank][col];
    ++rank;
  }
  return rank == rows;
}

}  // namespace polyskel
