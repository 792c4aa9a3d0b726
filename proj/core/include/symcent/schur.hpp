#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symcent/algebra.hpp"
#include "symcent/group.hpp"

namespace symcent {

using ElementNamer = std::function<std::string(std::size_t)>;

/// Elements of a regular subgroup T = <t_gens>, listed in breadth-first order
/// of the orbit of `base` under t_gens; element i maps base to the i-th point.
std::vector<Permutation> regular_subgroup_elements(const std::vector<Permutation>& t_gens,
                                                   std::size_t degree, Point base = 0);

struct SchurRing {
  std::size_t group_order = 0;
  /// Element indices of each basic set, sorted; ordered by least element.
  std::vector<std::vector<std::size_t>> basic_sets;
  /// Rendered sums, e.g. "b+ab+a^2b".
  std::vector<std::string> labels;
  SCAlgebra algebra;
};

/// Span of the H-orbit sums on T (H acting by conjugation x |-> h^-1 x h).
/// Verifies that T is regular and normalized by H, and the Schur-ring axioms.
SchurRing schur_ring_from_action(const std::vector<Permutation>& t_elements,
                                 const PermutationGroup& h, const Field& field,
                                 const ElementNamer& namer = {});

struct SchurIsoReport {
  bool bijection = false;
  bool sizes_match = false;
  bool structure_constants_match = false;
  std::size_t orbitals = 0;
  std::size_t basic_sets = 0;
  std::vector<std::string> basic_set_labels;
  std::string mismatch;

  bool pass() const noexcept { return bijection && sizes_match && structure_constants_match; }
};

/// Matches each orbital s with {t in T : (alpha, alpha t) in s} and compares
/// the centralizer algebra with the Schur ring (kT)^{G_alpha}. With right
/// actions A_r A_s corresponds to V_s V_r; the two agree for abelian T.
SchurIsoReport schur_vs_centralizer(const PermutationGroup& g, const std::vector<Permutation>& t_gens,
                                    const Field& field, Point alpha = 0,
                                    const ElementNamer& namer = {});

struct HeckeResult {
  std::size_t hecke_dim = 0;
  std::size_t permutation_rank = 0;
  bool matches_rank = false;
};

inline constexpr std::uint64_t kHeckeOrderCap = 5000;

/// dim span{e g e : g in G} in kG with e = |H|^-1 sum_{h in H} h, H = G_alpha.
HeckeResult hecke_check(const PermutationGroup& g, Point alpha, const Field& field);

}  // namespace symcent
