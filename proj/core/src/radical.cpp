#include "symcent/radical.hpp"

#include <cmath>

#include "symcent/error.hpp"

namespace symcent {

namespace {

using IntMatrix = std::vector<std::uint64_t>;

IntMatrix mat_mul_mod(const IntMatrix& a, const IntMatrix& b, std::size_t n, std::uint64_t mod) {
  IntMatrix c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t x = a[i * n + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        c[i * n + j] = (c[i * n + j] + x * b[k * n + j] % mod) % mod;
      }
    }
  }
  return c;
}

// Tr(M~^(p^i)) / p^i mod p for the integer lift M~ with entries in [0, p).
FieldElement generalized_trace(const Field& f, const Matrix& m, unsigned i) {
  const std::size_t n = m.rows();
  const std::uint64_t p = f.characteristic();
  std::uint64_t pi = 1;
  for (unsigned k = 0; k < i; ++k) pi *= p;
  const std::uint64_t mod = pi * p;
  IntMatrix base(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) base[r * n + c] = m(r, c).value % mod;
  }
  IntMatrix result(n * n, 0);
  for (std::size_t r = 0; r < n; ++r) result[r * n + r] = 1 % mod;
  for (std::uint64_t e = pi; e != 0; e >>= 1) {
    if (e & 1U) result = mat_mul_mod(result, base, n, mod);
    if (e > 1) base = mat_mul_mod(base, base, n, mod);
  }
  std::uint64_t tr = 0;
  for (std::size_t r = 0; r < n; ++r) tr = (tr + result[r * n + r]) % mod;
  if (tr % pi != 0) throw VerificationError("generalized trace not divisible by p^i");
  return f.from_int(static_cast<std::int64_t>(tr / pi));
}

Subspace echelon(const Field& f, const std::vector<Vector>& rows, std::size_t cols) {
  if (rows.empty()) return {};
  return row_basis(f, rows, cols);
}

Subspace product_space(const SCAlgebra& a, const Subspace& x, const Subspace& y) {
  std::vector<Vector> rows;
  for (const auto& u : x) {
    for (const auto& v : y) {
      auto w = a.multiply(u, v);
      if (!is_zero(w)) rows.push_back(std::move(w));
    }
  }
  return echelon(a.field(), rows, a.dim());
}

Subspace full_space(const SCAlgebra& a) {
  Subspace out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.basis(i));
  return out;
}

}  // namespace

bool in_span(const Field& field, const Subspace& basis, const Vector& v) {
  if (is_zero(v)) return true;
  std::vector<Vector> rows = basis;
  rows.push_back(v);
  return rank(field, [&] {
           Matrix m(rows.size(), v.size());
           for (std::size_t i = 0; i < rows.size(); ++i) {
             std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
           }
           return m;
         }()) == basis.size();
}

Subspace jacobson_radical(const SCAlgebra& a) {
  const auto& f = a.field();
  const std::size_t n = a.dim();
  if (n > kAlgebraDimCap) {
    throw PreconditionError("algebra dimension " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kAlgebraDimCap));
  }
  if (f.kind() != FieldKind::prime) throw PreconditionError("radical requires a prime field");
  if (n == 0) return {};
  const std::uint64_t p = f.characteristic();
  unsigned levels = 0;  // largest l with p^l <= n
  for (std::uint64_t q = p; q <= n; q *= p) ++levels;

  Subspace current = full_space(a);
  std::vector<Matrix> left_basis;
  for (std::size_t k = 0; k < n; ++k) left_basis.push_back(a.left_multiplication(a.basis(k)));

  for (unsigned i = 0; i <= levels && !current.empty(); ++i) {
    // cond(k, j) = g_i(x_j b_k); x = sum c_j x_j survives iff cond c = 0.
    Matrix cond(n, current.size());
    for (std::size_t j = 0; j < current.size(); ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector z = a.multiply(current[j], a.basis(k));
        cond(k, j) = generalized_trace(f, a.left_multiplication(z), i);
      }
    }
    const auto g = gauss(f, std::move(cond));
    std::vector<Vector> next;
    for (const auto& c : g.nullspace_basis) {
      Vector v = a.zero();
      for (std::size_t j = 0; j < current.size(); ++j) {
        if (f.is_zero(c[j])) continue;
        for (std::size_t t = 0; t < n; ++t) v[t] = f.add(v[t], f.mul(c[j], current[j][t]));
      }
      next.push_back(std::move(v));
    }
    current = echelon(f, next, n);
  }
  return current;
}

SCAlgebra quotient_algebra(const SCAlgebra& a, const Subspace& ideal) {
  const auto& f = a.field();
  const std::size_t n = a.dim();
  const Subspace basis = echelon(f, ideal, n);
  std::vector<bool> pivot(n, false);
  std::vector<std::size_t> pivots;
  for (const auto& row : basis) {
    std::size_t c = 0;
    while (f.is_zero(row[c])) ++c;
    pivot[c] = true;
    pivots.push_back(c);
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n; ++c) {
    if (!pivot[c]) keep.push_back(c);
  }
  auto reduce = [&](Vector v) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const FieldElement s = v[pivots[i]];
      if (f.is_zero(s)) continue;
      for (std::size_t t = 0; t < n; ++t) v[t] = f.sub(v[t], f.mul(s, basis[i][t]));
    }
    Vector out;
    for (auto c : keep) out.push_back(v[c]);
    return out;
  };
  const std::size_t q = keep.size();
  std::vector<FieldElement> sc(q * q * q);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < q; ++i) {
    labels.push_back(a.labels()[keep[i]]);
    for (std::size_t j = 0; j < q; ++j) {
      const auto prod = reduce(a.multiply(a.basis(keep[i]), a.basis(keep[j])));
      std::copy(prod.begin(), prod.end(), sc.begin() + static_cast<std::ptrdiff_t>((i * q + j) * q));
    }
  }
  return SCAlgebra(f, std::move(labels), std::move(sc), reduce(a.unit()));
}

RadicalSeries radical_chain(const SCAlgebra& a) {
  const auto& f = a.field();
  const std::size_t n = a.dim();
  RadicalSeries series;
  series.bases.push_back(full_space(a));
  series.dims.push_back(n);
  const Subspace j = jacobson_radical(a);

  // Two-sided ideal.
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& x : j) {
      if (!in_span(f, j, a.multiply(a.basis(i), x)) || !in_span(f, j, a.multiply(x, a.basis(i)))) {
        throw VerificationError("computed radical is not a two-sided ideal");
      }
    }
  }
  Subspace power = j;
  series.bases.push_back(power);
  series.dims.push_back(power.size());
  while (!power.empty()) {
    Subspace next = product_space(a, power, j);
    if (next.size() >= power.size()) throw VerificationError("computed radical is not nilpotent");
    power = std::move(next);
    series.bases.push_back(power);
    series.dims.push_back(power.size());
  }
  if (!j.empty()) {
    const auto quotient = quotient_algebra(a, j);
    if (!jacobson_radical(quotient).empty()) {
      throw VerificationError("quotient by computed radical is not semisimple");
    }
  }
  return series;
}

StructureReport structure_report(const SCAlgebra& a, const RadicalSeries& radical) {
  const auto& f = a.field();
  const std::size_t n = a.dim();
  const auto& j = radical.radical();
  StructureReport rep;
  rep.top_dim = n - j.size();
  rep.is_local = rep.top_dim == 1;
  rep.commutative = a.is_commutative();
  auto annihilator_dim = [&](bool left) {
    if (j.empty()) return n;
    Matrix m(j.size() * n, n);
    for (std::size_t k = 0; k < j.size(); ++k) {
      const Matrix op = left ? a.left_multiplication(j[k]) : a.right_multiplication(j[k]);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(k * n + r, c) = op(r, c);
      }
    }
    return n - rank(f, std::move(m));
  };
  rep.left_socle_dim = annihilator_dim(true);
  rep.right_socle_dim = annihilator_dim(false);
  return rep;
}

bool nilpotent_free_check(const SCAlgebra& a, NilpotentMethod method) {
  if (!a.is_commutative()) throw PreconditionError("nilpotent_free_check requires a commutative algebra");
  const auto& f = a.field();
  const std::size_t n = a.dim();
  const std::uint64_t p = f.characteristic();
  const double log_size = static_cast<double>(n) * std::log2(static_cast<double>(p));
  if (method == NilpotentMethod::automatic) {
    method = log_size <= 20.0 ? NilpotentMethod::exhaustive : NilpotentMethod::frobenius;
  }
  if (method == NilpotentMethod::exhaustive) {
    if (log_size > 20.0) throw PreconditionError("algebra too large for exhaustive nilpotent search");
    std::uint64_t e = 1;
    while (e < n) e *= p;
    Vector x = a.zero();
    while (true) {
      // next element in base-p counting order
      std::size_t i = 0;
      while (i < n && x[i].value == p - 1) x[i++] = f.zero();
      if (i == n) break;
      x[i] = f.add(x[i], f.one());
      if (is_zero(a.power(x, e))) return false;
    }
    return true;
  }
  // x |-> x^p is F_p-linear on a commutative algebra of characteristic p; a
  // nonzero nilpotent exists iff it has a kernel.
  Matrix frob(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const Vector col = a.power(a.basis(c), p);
    for (std::size_t r = 0; r < n; ++r) frob(r, c) = col[r];
  }
  return rank(f, std::move(frob)) == n;
}

}  // namespace symcent
