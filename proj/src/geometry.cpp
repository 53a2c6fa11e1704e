#include "polyskel/geometry.hpp"

#include <stdexcept>

namespace polyskel {

LatticePoint::LatticePoint(std::vector<int> coords) {
  coords_.reserve(coords.size());
  for (int c : coords) {
    if (c != 0 && c != 1) throw std::invalid_argument("lattice point entries must be 0 or 1");
    coords_.push_back(static_cast<std::uint8_t>(c));
  }
}

LatticePoint LatticePoint::indicator(Subset support, std::size_t dimension) {
  if (!support.is_subset_of(Subset::full(dimension))) {
    throw std::out_of_range("support " + support.to_string() + " exceeds dimension");
  }
  LatticePoint p;
  p.coords_.assign(dimension, 0);
  for (std::size_t i : support.elements()) p.coords_[i] = 1;
  return p;
}

Subset LatticePoint::support() const {
  Subset s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != 0) s.insert(i);
  }
  return s;
}

std::string LatticePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ",";
    out += coords_[i] != 0 ? '1' : '0';
  }
  return out + ")";
}

bool Hyperplane::is_trivial() const {
  for (const auto& c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

Rational Hyperplane::evaluate(std::span<const Rational> x) const {
  if (x.size() != coeffs.size()) throw std::invalid_argument("hyperplane dimension mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * x[i];
  return sum;
}

namespace {

bool compare(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::equal:
      return lhs == rhs;
    case Relation::less_equal:
      return lhs <= rhs;
    case Relation::greater_equal:
      return lhs >= rhs;
  }
  return false;
}

}  // namespace

bool Hyperplane::satisfied_by(std::span<const Rational> x) const {
  return compare(evaluate(x), relation, bound);
}

bool Hyperplane::satisfied_by(const LatticePoint& p) const {
  if (p.dimension() != coeffs.size()) throw std::invalid_argument("hyperplane dimension mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (p[i] != 0) sum += coeffs[i];
  }
  return compare(sum, relation, bound);
}

bool operator==(const Hyperplane& a, const Hyperplane& b) {
  return a.relation == b.relation && a.bound == b.bound && a.coeffs == b.coeffs;
}

std::string Hyperplane::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "x" + std::to_string(i + 1);
  }
  if (out.empty()) out = "0";
  switch (relation) {
    case Relation::equal:
      out += " = ";
      break;
    case Relation::less_equal:
      out += " <= ";
      break;
    case Relation::greater_equal:
      out += " >= ";
      break;
  }
  return out + bound.get_str();
}

Hyperplane coordinate_constraint(std::size_t dimension, std::size_t i, Relation rel, long bound) {
  Hyperplane h{std::vector<Rational>(dimension), rel, Rational(bound)};
  h.coeffs.at(i) = 1;
  return h;
}

Hyperplane difference_constraint(std::size_t dimension, std::size_t i, std::size_t j,
                                 Relation rel) {
  Hyperplane h{std::vector<Rational>(dimension), rel, Rational(0)};
  h.coeffs.at(i) = 1;
  h.coeffs.at(j) = -1;
  return h;
}

Hyperplane sum_constraint(std::size_t dimension, Subset support, Relation rel, long bound) {
  Hyperplane h{std::vector<Rational>(dimension), rel, Rational(bound)};
  for (std::size_t i : support.elements()) h.coeffs.at(i) = 1;
  return h;
}

bool satisfies_all(const LatticePoint& p, std::span<const Hyperplane> system) {
  for (const auto& h : system) {
    if (!h.satisfied_by(p)) return false;
  }
  return true;
}

std::vector<std::size_t> vertices_on_system(std::span<const LatticePoint> vertices,
                                            std::span<const Hyperplane> system) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (satisfies_all(vertices[k], system)) out.push_back(k);
  }
  return out;
}

}  // namespace polyskel
