#include "symcent/symmetric.hpp"

#include <cmath>
#include <random>

#include "symcent/error.hpp"

namespace symcent {

std::string to_string(SymmetricStatus s) {
  switch (s) {
    case SymmetricStatus::symmetric_with_witness: return "symmetric_with_witness";
    case SymmetricStatus::symmetric_semisimple: return "symmetric_semisimple";
    case SymmetricStatus::not_symmetric: return "not_symmetric";
    case SymmetricStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<Vector> trace_functionals(const SCAlgebra& a) {
  const auto& f = a.field();
  const std::size_t m = a.dim();
  std::vector<Vector> commutators;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector c(m);
      for (std::size_t k = 0; k < m; ++k) c[k] = f.sub(a.sc(i, j, k), a.sc(j, i, k));
      if (!is_zero(c)) commutators.push_back(std::move(c));
    }
  }
  Matrix cond(commutators.size(), m);
  for (std::size_t r = 0; r < commutators.size(); ++r) {
    std::copy(commutators[r].begin(), commutators[r].end(), cond.row(r).begin());
  }
  return gauss(f, std::move(cond)).nullspace_basis;
}

bool is_witness(const SCAlgebra& a, const LinearFunctional& lambda) {
  const Matrix g = gram_matrix(a, lambda);
  return g == g.transpose() && rank(a.field(), g) == a.dim();
}

namespace {

struct SearchResult {
  std::optional<LinearFunctional> witness;
  bool exhaustive = false;
  std::uint64_t searched = 0;
};

Vector combine(const Field& f, const std::vector<Vector>& basis, const Vector& coeffs,
               std::size_t m) {
  Vector out(m, f.zero());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (f.is_zero(coeffs[i])) continue;
    for (std::size_t k = 0; k < m; ++k) out[k] = f.add(out[k], f.mul(coeffs[i], basis[i][k]));
  }
  return out;
}

SearchResult search_witness(const SCAlgebra& a, const std::vector<Vector>& space,
                            std::uint64_t seed) {
  const auto& f = a.field();
  const std::size_t m = a.dim();
  const std::size_t d = space.size();
  const std::uint64_t p = f.characteristic();
  SearchResult res;
  if (d == 0) {
    res.exhaustive = true;
    res.searched = 1;
    return res;
  }
  std::vector<Matrix> grams;
  for (const auto& w : space) grams.push_back(gram_matrix(a, LinearFunctional{w}));
  auto add_into = [&](Matrix& g, const Matrix& h) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) g(i, j) = f.add(g(i, j), h(i, j));
    }
  };

  const double log2_size = static_cast<double>(d) * std::log2(static_cast<double>(p));
  if (log2_size <= kExhaustiveLog2Budget) {
    res.exhaustive = true;
    res.searched = 1;
    for (std::size_t i = 0; i < d; ++i) res.searched *= p;
    Vector coeffs(d, f.zero());
    Matrix gram(m, m);
    while (true) {
      // Base-p increment; every digit that changes adds its basis Gram once
      // (a wrap from p-1 to 0 adds 1 modulo p).
      std::size_t i = 0;
      while (i < d && coeffs[i].value == p - 1) {
        coeffs[i] = f.zero();
        add_into(gram, grams[i]);
        ++i;
      }
      if (i == d) break;
      coeffs[i] = f.add(coeffs[i], f.one());
      add_into(gram, grams[i]);
      if (rank(f, gram) == m) {
        res.witness = LinearFunctional{combine(f, space, coeffs, m)};
        return res;
      }
    }
    return res;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> digit(0, static_cast<std::uint32_t>(p - 1));
  Vector coeffs(d);
  for (std::size_t draw = 0; draw < kSampleDraws; ++draw) {
    for (auto& c : coeffs) c = FieldElement{digit(rng)};
    ++res.searched;
    LinearFunctional lambda{combine(f, space, coeffs, m)};
    if (rank(f, gram_matrix(a, lambda)) == m) {
      res.witness = std::move(lambda);
      return res;
    }
  }
  return res;
}

}  // namespace

SymmetricVerdict is_symmetric(const SCAlgebra& a, const std::optional<ReflexiveForm>& hint,
                              std::uint64_t seed, const std::optional<RadicalSeries>& radical) {
  if (a.dim() > kAlgebraDimCap) {
    throw PreconditionError("algebra dimension " + std::to_string(a.dim()) + " exceeds cap");
  }
  SymmetricVerdict v;
  const auto space = trace_functionals(a);
  v.trace_space_dim = space.size();

  if (hint && hint->symmetric && hint->nondegenerate) {
    v.status = SymmetricStatus::symmetric_with_witness;
    v.witness = hint->lambda;
    v.path = "reflexive";
    v.notes = "reflexive-coefficient form is symmetric and non-degenerate";
    return v;
  }

  const RadicalSeries series = radical ? *radical : radical_chain(a);
  const auto found = search_witness(a, space, seed);

  if (series.radical().empty()) {
    v.status = SymmetricStatus::symmetric_semisimple;
    v.path = "semisimple";
    v.witness = found.witness;
    v.notes = found.witness ? "semisimple; explicit witness found"
                            : "semisimple; no explicit witness found";
    return v;
  }
  if (found.witness) {
    v.status = SymmetricStatus::symmetric_with_witness;
    v.witness = found.witness;
    v.path = found.exhaustive ? "exhaustive" : "sampled";
    v.notes = "witness found after " + std::to_string(found.searched) + " candidates";
    return v;
  }

  const auto st = structure_report(a, series);
  NegativeCertificate cert;
  cert.top_dim = st.top_dim;
  cert.left_socle_dim = st.left_socle_dim;
  cert.right_socle_dim = st.right_socle_dim;
  cert.local_socle_obstruction = st.is_local && st.right_socle_dim != 1;
  if (found.exhaustive) {
    cert.exhausted_search = true;
    cert.functionals_searched = found.searched;
    v.status = SymmetricStatus::not_symmetric;
    v.path = "exhaustive";
    v.notes = "no non-degenerate trace functional among " + std::to_string(found.searched);
  } else if (cert.local_socle_obstruction) {
    v.status = SymmetricStatus::not_symmetric;
    v.path = "socle";
    v.notes = "local algebra with socle of dimension " + std::to_string(st.right_socle_dim);
  } else {
    v.status = SymmetricStatus::inconclusive;
    v.path = "sampled";
    v.notes = "no witness in " + std::to_string(found.searched) + " random draws";
  }
  v.certificate = cert;
  return v;
}

}  // namespace symcent
