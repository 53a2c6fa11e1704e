#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polyskel/rational.hpp"
#include "polyskel/subset.hpp"

namespace polyskel {

// A 0/1 vector of fixed dimension, e.g. the indicator of an ideal or a
// stable set.
class LatticePoint {
 public:
  LatticePoint() = default;

  // Throws std::invalid_argument if any entry is not 0 or 1.
  explicit LatticePoint(std::vector<int> coords);

  static LatticePoint indicator(Subset support, std::size_t dimension);

  std::size_t dimension() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::uint8_t> coords() const { return coords_; }

  Subset support() const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

  std::string to_string() const;

 private:
  std::vector<std::uint8_t> coords_;
};

enum class Relation { equal, less_equal, greater_equal };

// coeffs . x  (rel)  bound, with exact rational data. Used both for the
// inequality systems describing polytopes and for the equality systems
// cutting out faces.
struct Hyperplane {
  std::vector<Rational> coeffs;
  Relation relation = Relation::equal;
  Rational bound;

  std::size_t dimension() const { return coeffs.size(); }
  bool is_trivial() const;

  Rational evaluate(std::span<const Rational> x) const;
  bool satisfied_by(std::span<const Rational> x) const;
  bool satisfied_by(const LatticePoint& p) const;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b);

  // Human-readable, 1-indexed variables: "x1 - x3 = 0".
  std::string to_string() const;
};

// Builders for the coordinate hyperplanes used throughout.
Hyperplane coordinate_constraint(std::size_t dimension, std::size_t i, Relation rel, long bound);
Hyperplane difference_constraint(std::size_t dimension, std::size_t i, std::size_t j,
                                 Relation rel);  // x_i - x_j (rel) 0
Hyperplane sum_constraint(std::size_t dimension, Subset support, Relation rel, long bound);

bool satisfies_all(const LatticePoint& p, std::span<const Hyperplane> system);

// Indices of the points satisfying every constraint of `system` exactly.
std::vector<std::size_t> vertices_on_system(std::span<const LatticePoint> vertices,
                                            std::span<const Hyperplane> system);

}  // namespace polyskel
