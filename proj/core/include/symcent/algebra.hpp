#pragma once

#include <string>
#include <vector>

#include "symcent/coherent.hpp"
#include "symcent/field.hpp"
#include "symcent/group.hpp"
#include "symcent/matrix.hpp"

namespace symcent {

inline constexpr std::size_t kAlgebraDimCap = 60;
inline constexpr std::size_t kOracleDegreeCap = 40;

/// Finite-dimensional unital algebra over a finite field, given by structure
/// constants: b_i b_j = sum_k sc(i,j,k) b_k.
class SCAlgebra {
 public:
  /// The zero-dimensional algebra over F_2.
  SCAlgebra() : field_(Field::prime(2)) {}

  /// Throws VerificationError when the constants are not associative (checked
  /// exhaustively for dim <= kAlgebraDimCap) or `unit` is not a two-sided unit.
  SCAlgebra(Field field, std::vector<std::string> labels, std::vector<FieldElement> sc,
            Vector unit);

  std::size_t dim() const noexcept { return labels_.size(); }
  const Field& field() const noexcept { return field_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  FieldElement sc(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim() + j) * dim() + k];
  }
  const std::vector<FieldElement>& structure_constants() const noexcept { return sc_; }
  const Vector& unit() const noexcept { return unit_; }

  Vector basis(std::size_t i) const;
  Vector zero() const { return Vector(dim(), field_.zero()); }
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector add(const Vector& x, const Vector& y) const;
  Vector power(Vector x, std::uint64_t e) const;

  /// Matrix of y |-> x y (column j = coordinates of x b_j).
  Matrix left_multiplication(const Vector& x) const;
  /// Matrix of y |-> y x.
  Matrix right_multiplication(const Vector& x) const;

  bool is_commutative() const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<FieldElement> sc_;
  Vector unit_;
};

struct LinearFunctional {
  Vector coords;  // value on each basis element

  FieldElement operator()(const Field& f, const Vector& x) const;
};

/// Gram matrix G(i,j) = lambda(b_i b_j).
Matrix gram_matrix(const SCAlgebra& a, const LinearFunctional& lambda);

/// M_n(k)^G in the orbital basis: sc(r,s,t) = C^t_{rs} mod char, unit = sum of
/// the reflexive basis elements. Labels are "s0", "s1", ...
SCAlgebra centralizer_algebra(const CoherentConfiguration& cc, const IntersectionTensor& tensor,
                              const Field& field);

/// dim {X : X P_g = P_g X for every generator g}, by solving the n^2 linear
/// equations directly. Throws PreconditionError above kOracleDegreeCap.
std::size_t centralizer_oracle(const PermutationGroup& g, const Field& field);

struct ReflexiveForm {
  LinearFunctional lambda;
  Matrix gram;
  bool symmetric = false;
  bool nondegenerate = false;
};

/// lambda = coefficient of the reflexive orbital; phi(x,y) = lambda(xy).
/// Throws PreconditionError("form requires transitivity") for intransitive cc.
ReflexiveForm reflexive_form(const SCAlgebra& a, const CoherentConfiguration& cc);

}  // namespace symcent
