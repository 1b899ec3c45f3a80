#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace grouplab {

using Point = std::uint32_t;

// A permutation of the points 0..degree-1 stored as an image array.
// Composition applies the left factor first: (a * b) moves x to b[a[x]],
// so conjugation h.conjugated_by(g) = g^-1 * h * g acts as expected on
// relabelled points. Cycle notation at the API boundary is 1-based.
class Perm {
public:
  Perm() = default;
  explicit Perm(Point degree);  // identity

  // Validates that images is a bijection on {0..n-1}.
  static Perm from_images(std::vector<Point> images);

  // cycles use 1-based points and must be pairwise disjoint
  static Perm from_cycles(Point degree,
                          const std::vector<std::vector<Point>>& cycles);

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;
  Perm commutator_with(const Perm& y) const;  // x^-1 y^-1 x y

  bool is_identity() const;
  std::uint64_t order() const;

  // canonical order = lexicographic on image arrays
  auto operator<=>(const Perm&) const = default;

  std::string to_cycle_string() const;  // "(1 2 3)(4 5)", identity prints "()"

private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

// Parses "(1 2 3)(4 5)" into a permutation of the given degree; "()" is the
// identity. Cycles must be disjoint and points must lie in 1..degree.
Perm parse_cycles(Point degree, const std::string& text);

} // namespace grouplab
