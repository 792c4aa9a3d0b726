#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "symcent/permutation.hpp"

namespace symcent {

/// Base and strong generating set built by deterministic Schreier-Sims.
/// New base points are the first point moved by the generator being added.
class StabilizerChain {
 public:
  struct Level {
    Point base_point = 0;
    /// Strong generators fixing every earlier base point.
    std::vector<Permutation> generators;
    /// orbit of base_point under `generators`, in discovery order.
    std::vector<Point> orbit;
    /// transversal[x] maps base_point to x; empty for points off the orbit.
    std::vector<std::optional<Permutation>> transversal;
  };

  /// `base_prefix` forces the first base points (used for point stabilizers).
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators,
                  const std::vector<Point>& base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;

  /// Product of the basic orbit lengths.
  std::uint64_t order() const;

  /// Residue of g after sifting from `start`, and the level at which sifting
  /// stopped (levels().size() when it ran through the whole chain).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start = 0) const;

  bool contains(const Permutation& g) const;

  /// Visits every group element exactly once.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;

 private:
  void add_generator_at(std::size_t level, const Permutation& g);
  void rebuild_orbit(std::size_t level);
  void schreier_sims();

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and shared by copies; once built the object is safe to share.
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermutationGroup trivial(std::size_t degree) { return {degree, {}}; }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const StabilizerChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  /// Throws PreconditionError on degree mismatch.
  bool contains(const Permutation& g) const;

  /// All elements, in chain enumeration order. Throws PreconditionError when
  /// the order exceeds `cap`.
  std::vector<Permutation> elements(std::uint64_t cap) const;

  /// Order of the abstract group this is an action of, when it was produced by
  /// a derived action (cosets, k-subsets). Equal to order() iff faithful.
  std::optional<std::uint64_t> source_order() const noexcept { return source_order_; }
  void set_source_order(std::uint64_t n) { source_order_ = n; }

 private:
  struct Cache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::optional<std::uint64_t> source_order_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace symcent
