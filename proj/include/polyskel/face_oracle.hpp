#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polyskel/complex.hpp"
#include "polyskel/geometry.hpp"
#include "polyskel/lp.hpp"

namespace polyskel {

// Decides face-ness for the polytope conv(vertices) by exact LP: S is the
// vertex set of a face iff some functional a and bound b satisfy
//   a.v = b for v in S,   a.w <= b - 1 for every other listed point w.
// Results are memoised per instance; an oracle is meant to be used from one
// thread.
class FaceOracle {
 public:
  // Throws std::invalid_argument on an empty list, mixed dimensions or
  // duplicate points.
  explicit FaceOracle(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }

  // `s` must be nonempty with indices in range; duplicates are rejected.
  bool is_face(const Simplex& s);

  // The supporting inequality a.x <= b, tight exactly on `s`, if one exists.
  // Re-verified by substitution against every vertex before being returned.
  std::optional<Hyperplane> supporting_hyperplane(const Simplex& s);

  SkeletonGraph skeleton();

  // All vertex sets that are affinely independent and span a face, as a
  // complex. Candidates of size k+1 are only generated from faces of size k
  // all of whose k-subsets are faces.
  SimplicialComplex simplicial_faces();

  std::size_t lp_calls() const { return lp_calls_; }

 private:
  std::vector<LatticePoint> vertices_;
  std::map<Simplex, bool> cache_;
  std::size_t lp_calls_ = 0;
};

bool is_face(std::span<const LatticePoint> vertices, const Simplex& s);
SkeletonGraph brute_force_skeleton(std::span<const LatticePoint> vertices);
SimplicialComplex simplicial_faces(std::span<const LatticePoint> vertices);

// Exact rank test on the difference vectors (fraction-free elimination).
bool affinely_independent(std::span<const LatticePoint> points);

}  // namespace polyskel
