#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "symcent/algebra.hpp"
#include "symcent/radical.hpp"

namespace symcent {

enum class SymmetricStatus { symmetric_with_witness, symmetric_semisimple, not_symmetric, inconclusive };

std::string to_string(SymmetricStatus s);

struct NegativeCertificate {
  bool exhausted_search = false;
  std::uint64_t functionals_searched = 0;
  bool local_socle_obstruction = false;
  std::size_t top_dim = 0;
  std::size_t left_socle_dim = 0;
  std::size_t right_socle_dim = 0;
};

struct SymmetricVerdict {
  SymmetricStatus status = SymmetricStatus::inconclusive;
  std::optional<LinearFunctional> witness;
  std::optional<NegativeCertificate> certificate;
  /// "reflexive", "semisimple", "exhaustive", "sampled" or "socle".
  std::string path;
  /// dim of {lambda : lambda vanishes on all commutators}.
  std::size_t trace_space_dim = 0;
  std::string notes;

  bool certified_positive() const noexcept {
    return status == SymmetricStatus::symmetric_with_witness ||
           status == SymmetricStatus::symmetric_semisimple;
  }
};

inline constexpr double kExhaustiveLog2Budget = 20.0;
inline constexpr std::size_t kSampleDraws = 1000;

/// Functionals vanishing on every commutator b_i b_j - b_j b_i; these are
/// exactly the lambda for which (x, y) |-> lambda(xy) is symmetric.
std::vector<Vector> trace_functionals(const SCAlgebra& a);

/// Whether lambda is a witness: it kills commutators and its Gram matrix has
/// full rank.
bool is_witness(const SCAlgebra& a, const LinearFunctional& lambda);

/// Decides whether A admits a non-degenerate symmetric associative form.
/// Layers: the given reflexive-coefficient form; semisimplicity; exhaustive search
/// of the trace functionals when |F|^dim <= 2^20; otherwise kSampleDraws
/// seeded random draws followed by the local-socle test.
SymmetricVerdict is_symmetric(const SCAlgebra& a, const std::optional<ReflexiveForm>& hint = {},
                              std::uint64_t seed = 0,
                              const std::optional<RadicalSeries>& radical = {});

}  // namespace symcent
