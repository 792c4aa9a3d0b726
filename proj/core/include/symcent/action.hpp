#pragma once

#include <cstdint>
#include <vector>

#include "symcent/group.hpp"

namespace symcent {

inline constexpr std::size_t kDerivedActionCap = 10'000;
inline constexpr std::uint64_t kEnumerationCap = 100'000;

using Partition = std::vector<std::vector<Point>>;

/// Orbits of <gens> on {0..degree-1}, each sorted, ordered by least point.
Partition orbits(const std::vector<Permutation>& gens, std::size_t degree);

/// Orbit of `alpha` in breadth-first discovery order.
std::vector<Point> orbit(const std::vector<Permutation>& gens, Point alpha);

/// G_alpha, generated by the strong generators below alpha in a chain whose
/// base starts at alpha.
PermutationGroup point_stabilizer(const PermutationGroup& g, Point alpha);

/// Finest block system in which alpha and beta share a block (G transitive),
/// as a block label per point.
std::vector<std::size_t> minimal_block_system(const PermutationGroup& g, Point alpha, Point beta);

bool is_primitive(const PermutationGroup& g);

struct ActionClassification {
  bool transitive = false;
  std::vector<std::size_t> orbit_sizes;  // sorted ascending
  std::vector<std::size_t> subdegrees;   // sorted ascending; G_0 orbit sizes when transitive
  std::size_t rank = 0;                  // number of orbits on pairs
  bool half_transitive = false;
  bool three_halves_transitive = false;
  bool primitive = false;
  bool faithful = true;
  bool regular = false;
};

ActionClassification classify_action(const PermutationGroup& g);

/// Induced action on k-subsets, which are numbered in lexicographic order.
PermutationGroup action_on_ksubsets(const PermutationGroup& g, std::size_t k);

/// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<Point>> ksubsets(std::size_t n, std::size_t k);

/// Right-multiplication action of G on the right cosets of H <= G.
/// Coset 0 is H itself. The result carries source_order = |G|.
PermutationGroup action_on_cosets(const PermutationGroup& g, const PermutationGroup& h);

struct GroupTheoreticChecks {
  bool normalizer_in_stabilizer = false;
  std::size_t max_conjugate_intersection = 0;
  std::size_t sylow_order = 0;
};

/// With H = G_alpha and P a Sylow p-subgroup of H: whether N_G(P) <= H, and
/// the maximum of |H cap H^x| over x in G - H. Uses element enumeration.
GroupTheoreticChecks group_theoretic_checks(const PermutationGroup& g, Point alpha,
                                            std::uint32_t p);

}  // namespace symcent
