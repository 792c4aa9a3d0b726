#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symcent/group.hpp"
#include "symcent/matrix.hpp"

namespace symcent {

inline constexpr std::size_t kCoherentDegreeCap = 1000;
inline constexpr std::size_t kTensorRankCap = 256;

struct OrbitalInfo {
  std::size_t valency = 0;        // |alpha s| for alpha in the support
  std::size_t star = 0;           // index of the transposed orbital
  bool reflexive = false;
  std::size_t support_orbit = 0;  // index of the G-orbit holding the first coordinates
  std::size_t size = 0;           // number of pairs
  std::pair<Point, Point> representative;  // least pair, lexicographically
};

/// The partition of Omega x Omega into 2-orbits of a permutation group.
/// Orbitals are numbered reflexive first, then by valency, then by least pair.
struct CoherentConfiguration {
  std::size_t n = 0;
  std::vector<std::uint32_t> orbital_of;  // n*n, row-major in (alpha, beta)
  std::vector<OrbitalInfo> orbitals;
  std::vector<std::size_t> point_orbit;   // G-orbit index per point
  std::vector<std::size_t> orbit_sizes;

  std::size_t rank() const noexcept { return orbitals.size(); }
  std::size_t orbital(Point a, Point b) const noexcept { return orbital_of[a * n + b]; }
  std::vector<std::size_t> reflexive_orbitals() const;
  /// Sorted valencies of the orbitals supported on point_orbit[alpha].
  std::vector<std::size_t> valencies_at(Point alpha) const;
};

/// C[t][r][s] = #{gamma : (alpha,gamma) in r, (gamma,beta) in s} for (alpha,beta) in t.
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(std::size_t m) : m_(m), data_(m * m * m, 0) {}

  std::size_t rank() const noexcept { return m_; }
  std::uint32_t& operator()(std::size_t t, std::size_t r, std::size_t s) {
    return data_[(t * m_ + r) * m_ + s];
  }
  std::uint32_t operator()(std::size_t t, std::size_t r, std::size_t s) const {
    return data_[(t * m_ + r) * m_ + s];
  }

  friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Union-find over pairs under the diagonal generator action; never
/// enumerates the group. Throws PreconditionError above kCoherentDegreeCap.
CoherentConfiguration two_orbits(const PermutationGroup& g);

/// Counts from the stored least representative of each orbital; O(m n).
IntersectionTensor intersection_tensor(const CoherentConfiguration& cc);

struct AxiomReport {
  bool diagonal_union = true;
  bool star_closed = true;
  bool representative_independent = true;
  bool triangle_identity = true;
  std::string failure;  // first counterexample, empty on success

  bool pass() const noexcept {
    return diagonal_union && star_closed && representative_independent && triangle_identity;
  }
};

/// Checks the coherent-configuration axioms and |t| C^{t*}_{rs} = |r| C^{r*}_{st}
/// = |s| C^{s*}_{tr}. Representative independence is sampled on `trials`
/// random pairs per orbital.
AxiomReport verify_cc_axioms(const CoherentConfiguration& cc, const IntersectionTensor& tensor,
                             std::size_t trials = 3, std::uint64_t seed = 0);

/// 0/1 adjacency matrix of every orbital.
std::vector<Matrix> adjacency_matrices(const CoherentConfiguration& cc, const Field& field);

/// A_r A_s == sum_t C^t_{rs} A_t over the integers, by full matrix products.
/// Returns an empty string on success, else the first mismatch.
std::string verify_adjacency_products(const CoherentConfiguration& cc,
                                      const IntersectionTensor& tensor);

}  // namespace symcent
