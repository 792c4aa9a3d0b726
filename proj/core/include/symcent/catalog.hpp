#pragma once

#include <string>
#include <vector>

#include "symcent/group.hpp"
#include "symcent/schur.hpp"

namespace symcent {

PermutationGroup build_symmetric(std::size_t n);
PermutationGroup build_alternating(std::size_t n);

/// A_n on 2-subsets; with `add_transposition` the generator (1 2) is added,
/// giving S_n on 2-subsets.
PermutationGroup build_alt_on_pairs(std::size_t n, bool add_transposition = false);

/// A_{n+2} on the right cosets of S_n embedded by a |-> a for even a and
/// a |-> a (n+1, n+2) for odd a. Degree (n+1)(n+2)/2.
PermutationGroup build_sign_twist(std::size_t n);

/// {x |-> a x + b : a in C_d <= F_q^*, b in F_q} on F_q, q prime, d | q-1.
PermutationGroup build_frobenius_affine(std::uint32_t q, std::uint32_t d);

struct AffineExample {
  PermutationGroup group;
  Permutation a;  // translation by (1,0)
  Permutation b;  // translation by (0,1)
  Permutation x;  // v |-> X v with X = [[1,1],[0,1]]
  Point alpha = 0;
};

/// T : <X> <= AGL(2,3) on the 9 vectors of F_3^2; (x, y) is point x + 3y.
AffineExample build_affine_counterexample();

enum class Psl2Action { line, dihedral_cosets };

/// PSL(2,q) = SL(2,q), q in {4, 8, 32}, on the projective line (points (1:x)
/// numbered by x, then (0:1)) or on the cosets of a dihedral subgroup of
/// order 2(q+1) (q >= 8).
PermutationGroup build_psl2(std::uint32_t q, Psl2Action action);

/// Generator-file text: "degree n" followed by one cycle-notation generator
/// per line; blank lines and lines starting with '#' are ignored.
PermutationGroup parse_generator_text(const std::string& text);
PermutationGroup read_generator_file(const std::string& path);

struct CatalogEntry {
  std::string spec;
  PermutationGroup group;
  /// Generators of a known regular normal subgroup (empty if none recorded),
  /// and names for its elements in regular_subgroup_elements order.
  std::vector<Permutation> regular_normal_subgroup;
  ElementNamer namer;
  std::string description;
};

/// Parses "sym:n", "alt:n", "altpairs:n", "signtwist:n", "frobenius:q,d",
/// "example3_2", "psl2line:q", "psl2cosets:q" or "file:<path>".
/// Throws PreconditionError for unknown or malformed specs.
CatalogEntry build_from_spec(const std::string& spec);

struct CatalogListing {
  std::string grammar;
  std::string degree;
  std::string description;
};

std::vector<CatalogListing> catalog_listing();

}  // namespace symcent
