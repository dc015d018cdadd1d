#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crownforge/integer.hpp"

namespace crownforge {

/// Internal point type. Points are stored 0-based; every textual interface
/// (cycle notation, reports) is 1-based.
using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} acting on the right: the product
/// `p * q` applies p first, then q, so x^(pq) = (x^p)^q.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Takes 0-based images and validates that they form a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  static Permutation from_one_based(std::span<const Point> images);
  /// Builds from 0-based images without validation; callers guarantee bijectivity.
  static Permutation unchecked(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation pow(std::int64_t e) const;
  /// g^-1 * this * g.
  Permutation conjugate_by(const Permutation& g) const;
  Integer order() const;
  /// Points moved by this permutation (0-based).
  std::vector<Point> support() const;

  /// Same permutation on a larger domain; new points are fixed.
  Permutation extended(std::size_t degree) const;
  /// Relabels point x as x + offset inside a domain of the given degree.
  Permutation shifted(std::size_t offset, std::size_t degree) const;
  /// Restriction to the first `degree` points; they must be invariant.
  Permutation restricted(std::size_t degree) const;

  /// Disjoint cycle notation with 1-based points; identity prints as "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// Parses disjoint cycles over {1..degree}, e.g. "(1,2,3)(4,5)" or "()".
/// Throws ParseError on malformed text, out-of-range or repeated points.
Permutation parse_permutation(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace crownforge
