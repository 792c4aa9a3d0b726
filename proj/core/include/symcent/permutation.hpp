#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symcent {

/// Points are 0-based internally and rendered 1-based in all text.
using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}. Composition follows right actions:
/// x^(g*h) = (x^g)^h.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Order as a group element (lcm of cycle lengths).
  std::uint64_t order() const;
  /// First point moved, or degree() if none.
  Point first_moved() const noexcept;

  /// Disjoint-cycle form, 1-based, fixed points omitted; "()" for identity.
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// g^-1 h g.
Permutation conjugate(const Permutation& h, const Permutation& g);

/// Parse 1-based disjoint cycle notation, e.g. "(1 2 3)(4 5)" or "()".
/// Commas between points are accepted. Throws ParseError with a position.
Permutation parse_permutation(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const noexcept;
};

}  // namespace symcent
