#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sigmagrp {

/// A permutation of {1..n}. Stored 0-indexed: img()[i] is the image of point i.
/// Points are 1-indexed only in cycle notation at the text boundary.
/// Immutable value type; the degree never changes implicitly.
class Permutation {
public:
  /// Identity on `degree` points.
  explicit Permutation(int degree);

  /// Takes a full 0-indexed image table; rejects non-bijections.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const { return img_[static_cast<std::size_t>(point)]; }
  bool is_identity() const;
  const std::vector<int>& img() const { return img_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

private:
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {}
  std::vector<int> img_;
};

/// Apply `a` first, then `b`: compose(a, b)(i) = b(a(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
/// a^e by binary powering; e may be negative or zero.
Permutation power(const Permutation& a, std::int64_t e);
/// g^-1 * h * g.
Permutation conjugate(const Permutation& h, const Permutation& g);
/// a^-1 * b^-1 * a * b.
Permutation commutator(const Permutation& a, const Permutation& b);

/// Least common multiple of the cycle lengths; errors out past 2^63.
std::uint64_t element_order(const Permutation& a);

/// Nontrivial cycles, 0-indexed, each starting at its least point,
/// sorted by least point.
std::vector<std::vector<int>> cycles(const Permutation& a);

/// Parse disjoint cycles over 1-indexed points, e.g. "(1 2)(3 4 5)".
/// "()" and "" denote the identity. Rejects repeated or out-of-range points.
Permutation parse_cycles(const std::string& text, int degree);

/// Canonical cycle text: cycles of length >= 2 only, least point first in each
/// cycle, cycles sorted by least point; identity prints as "()".
std::string format_cycles(const Permutation& p);

/// Same mapping on a larger domain; the new points are fixed.
Permutation embed(const Permutation& p, int degree);

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace sigmagrp
