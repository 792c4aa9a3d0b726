#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcent/action.hpp"
#include "symcent/catalog.hpp"
#include "symcent/radical.hpp"
#include "symcent/schur.hpp"
#include "symcent/symmetric.hpp"

namespace symcent {

struct AnalysisOptions {
  std::uint32_t characteristic = 2;
  std::uint64_t seed = 0;
  /// Also run the brute-force cross-checks (centralizer dimension by linear
  /// solve for degree <= 40, adjacency products for degree <= 100).
  bool oracle = false;
};

struct AnalysisChecks {
  bool cc_axioms = false;
  std::string cc_failure;
  std::optional<bool> adjacency_products;
  std::optional<std::size_t> oracle_dim;
};

struct AnalysisReport {
  std::string group_spec;
  std::size_t degree = 0;
  std::uint64_t group_order = 0;
  ActionClassification classification;
  std::size_t orbital_count = 0;
  std::vector<std::size_t> valencies;  // sorted
  std::uint32_t characteristic = 0;
  std::size_t algebra_dim = 0;
  bool valencies_invertible = false;  // every valency invertible mod p
  bool gram_symmetric = false;
  bool gram_nondegenerate = false;
  std::vector<std::size_t> radical_dims;
  StructureReport structure;
  SymmetricVerdict verdict;
  std::optional<SchurIsoReport> schur;
  AnalysisChecks checks;
  std::vector<std::pair<std::string, double>> timings_ms;
};

/// perm -> coherent -> endo pipeline for a transitive action over F_p.
/// Throws PreconditionError for intransitive actions or non-prime p, and
/// VerificationError when a self-check fails.
AnalysisReport analyze(const CatalogEntry& entry, const AnalysisOptions& options);
AnalysisReport analyze(const std::string& spec, const AnalysisOptions& options);

/// Key-sorted JSON. Timings are omitted when include_timings is false, which
/// makes the output a pure function of (spec, p, seed).
std::string to_json(const AnalysisReport& report, bool include_timings = true);
std::string to_text(const AnalysisReport& report);

}  // namespace symcent
