#pragma once

#include <vector>

#include "symcent/algebra.hpp"

namespace symcent {

/// Subspace of an algebra given by a reduced-echelon basis.
using Subspace = std::vector<Vector>;

struct RadicalSeries {
  /// [dim A, dim J, dim J^2, ..., 0]
  std::vector<std::size_t> dims;
  /// bases[i] spans J^i (bases[0] is all of A).
  std::vector<Subspace> bases;

  const Subspace& radical() const { return bases.at(1); }
};

/// Jacobson radical of an algebra over F_p via the descending chain
/// I_i = {x in I_{i-1} : g_i(xy) = 0 for all y}, g_i(z) = Tr(L~_z^{p^i}) / p^i,
/// i = 0..floor(log_p dim); then the powers J^{i+1} = J^i J.
/// The radical is checked to be a nilpotent two-sided ideal with a
/// radical-free quotient; failure throws VerificationError.
RadicalSeries radical_chain(const SCAlgebra& a);

/// Radical only, without a posteriori verification.
Subspace jacobson_radical(const SCAlgebra& a);

/// A/I for a two-sided ideal I, in the basis of unit vectors off the pivot
/// columns of I.
SCAlgebra quotient_algebra(const SCAlgebra& a, const Subspace& ideal);

struct StructureReport {
  std::size_t top_dim = 0;
  std::size_t left_socle_dim = 0;   // {x : J x = 0}
  std::size_t right_socle_dim = 0;  // {x : x J = 0}
  bool is_local = false;            // top_dim == 1
  bool commutative = false;
};

StructureReport structure_report(const SCAlgebra& a, const RadicalSeries& radical);

enum class NilpotentMethod { automatic, exhaustive, frobenius };

/// True iff the commutative algebra has no nonzero nilpotent element.
/// Exhaustive search over all elements when |F|^dim <= 2^20 (automatic), else
/// injectivity of the Frobenius map x |-> x^p. Throws PreconditionError for
/// non-commutative input.
bool nilpotent_free_check(const SCAlgebra& a, NilpotentMethod method = NilpotentMethod::automatic);

/// Whether the subspace spanned by `basis` contains v.
bool in_span(const Field& field, const Subspace& basis, const Vector& v);

}  // namespace symcent
