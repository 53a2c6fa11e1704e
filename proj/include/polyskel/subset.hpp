#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyskel {

// Subset of a ground set {0, ..., 63} stored as a bitmask. Posets and graphs
// in this library are desk-scale, so one machine word always suffices.
class Subset {
 public:
  static constexpr std::size_t kMaxElements = 64;

  constexpr Subset() = default;

  static constexpr Subset from_mask(std::uint64_t mask) {
    Subset s;
    s.mask_ = mask;
    return s;
  }

  static Subset of(std::initializer_list<std::size_t> elements) {
    Subset s;
    for (std::size_t e : elements) s.insert(e);
    return s;
  }

  static Subset of(const std::vector<std::size_t>& elements) {
    Subset s;
    for (std::size_t e : elements) s.insert(e);
    return s;
  }

  // {0, ..., n-1}
  static Subset full(std::size_t n) {
    if (n > kMaxElements) throw std::out_of_range("subset ground set too large");
    return from_mask(n == kMaxElements ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_));
  }

  bool contains(std::size_t e) const {
    return e < kMaxElements && ((mask_ >> e) & 1U) != 0;
  }

  void insert(std::size_t e) {
    check_index(e);
    mask_ |= std::uint64_t{1} << e;
  }

  void erase(std::size_t e) {
    check_index(e);
    mask_ &= ~(std::uint64_t{1} << e);
  }

  Subset with(std::size_t e) const {
    Subset s = *this;
    s.insert(e);
    return s;
  }

  constexpr bool is_subset_of(Subset other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  // Largest element + 1, i.e. the smallest n with *this inside {0..n-1}.
  constexpr std::size_t bound() const {
    return kMaxElements - static_cast<std::size_t>(std::countl_zero(mask_));
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return from_mask(a.mask_ | b.mask_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return from_mask(a.mask_ & b.mask_); }
  friend constexpr Subset operator^(Subset a, Subset b) { return from_mask(a.mask_ ^ b.mask_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return from_mask(a.mask_ & ~b.mask_); }

  friend constexpr bool operator==(Subset a, Subset b) = default;

  // 1-indexed, e.g. "{1,3}".
  std::string to_string() const;

 private:
  static void check_index(std::size_t e) {
    if (e >= kMaxElements) {
      throw std::out_of_range("subset element " + std::to_string(e) + " exceeds capacity");
    }
  }

  std::uint64_t mask_ = 0;
};

// Canonical order used for every enumeration: by cardinality, then
// lexicographically on the sorted element lists ({1,2} < {1,3} < {2,3}).
inline bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // The first element present in exactly one of the two sets decides.
  const std::uint64_t diff = a.mask() ^ b.mask();
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.mask() & lowest) != 0;
}

struct CanonicalLess {
  bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

inline std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace polyskel
