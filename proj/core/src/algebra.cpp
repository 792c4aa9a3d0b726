#include "symcent/algebra.hpp"

#include "symcent/error.hpp"

namespace symcent {

SCAlgebra::SCAlgebra(Field field, std::vector<std::string> labels, std::vector<FieldElement> sc,
                     Vector unit)
    : field_(std::move(field)), labels_(std::move(labels)), sc_(std::move(sc)),
      unit_(std::move(unit)) {
  const std::size_t m = dim();
  if (sc_.size() != m * m * m || unit_.size() != m) {
    throw PreconditionError("structure constant table has wrong shape");
  }
  if (m > kAlgebraDimCap) return;
  for (std::size_t i = 0; i < m; ++i) {
    const Vector bi = basis(i);
    if (multiply(unit_, bi) != bi || multiply(bi, unit_) != bi) {
      throw VerificationError("unit does not act as identity on basis element " + labels_[i]);
    }
  }
  // (b_i b_j) b_k == b_i (b_j b_k)
  Vector lhs(m);
  Vector rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        std::fill(lhs.begin(), lhs.end(), field_.zero());
        std::fill(rhs.begin(), rhs.end(), field_.zero());
        for (std::size_t l = 0; l < m; ++l) {
          const FieldElement a = this->sc(i, j, l);
          const FieldElement b = this->sc(j, k, l);
          for (std::size_t t = 0; t < m; ++t) {
            if (!field_.is_zero(a)) lhs[t] = field_.add(lhs[t], field_.mul(a, this->sc(l, k, t)));
            if (!field_.is_zero(b)) rhs[t] = field_.add(rhs[t], field_.mul(b, this->sc(i, l, t)));
          }
        }
        if (lhs != rhs) {
          throw VerificationError("structure constants not associative at (" + labels_[i] + "," +
                                  labels_[j] + "," + labels_[k] + ")");
        }
      }
    }
  }
}

Vector SCAlgebra::basis(std::size_t i) const {
  Vector v = zero();
  v[i] = field_.one();
  return v;
}

Vector SCAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t m = dim();
  Vector out = zero();
  for (std::size_t i = 0; i < m; ++i) {
    if (field_.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (field_.is_zero(y[j])) continue;
      const FieldElement c = field_.mul(x[i], y[j]);
      const FieldElement* row = &sc_[(i * m + j) * m];
      for (std::size_t k = 0; k < m; ++k) {
        if (!field_.is_zero(row[k])) out[k] = field_.add(out[k], field_.mul(c, row[k]));
      }
    }
  }
  return out;
}

Vector SCAlgebra::add(const Vector& x, const Vector& y) const {
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = field_.add(x[i], y[i]);
  return out;
}

Vector SCAlgebra::power(Vector x, std::uint64_t e) const {
  Vector result = unit_;
  while (e != 0) {
    if (e & 1U) result = multiply(result, x);
    e >>= 1;
    if (e != 0) x = multiply(x, x);
  }
  return result;
}

Matrix SCAlgebra::left_multiplication(const Vector& x) const {
  Matrix l(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const Vector col = multiply(x, basis(j));
    for (std::size_t k = 0; k < dim(); ++k) l(k, j) = col[k];
  }
  return l;
}

Matrix SCAlgebra::right_multiplication(const Vector& x) const {
  Matrix r(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const Vector col = multiply(basis(j), x);
    for (std::size_t k = 0; k < dim(); ++k) r(k, j) = col[k];
  }
  return r;
}

bool SCAlgebra::is_commutative() const {
  const std::size_t m = dim();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (sc(i, j, k) != sc(j, i, k)) return false;
      }
    }
  }
  return true;
}

FieldElement LinearFunctional::operator()(const Field& f, const Vector& x) const {
  FieldElement acc = f.zero();
  for (std::size_t i = 0; i < coords.size(); ++i) acc = f.add(acc, f.mul(coords[i], x[i]));
  return acc;
}

Matrix gram_matrix(const SCAlgebra& a, const LinearFunctional& lambda) {
  const auto& f = a.field();
  const std::size_t m = a.dim();
  Matrix g(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      FieldElement acc = f.zero();
      for (std::size_t k = 0; k < m; ++k) acc = f.add(acc, f.mul(lambda.coords[k], a.sc(i, j, k)));
      g(i, j) = acc;
    }
  }
  return g;
}

SCAlgebra centralizer_algebra(const CoherentConfiguration& cc, const IntersectionTensor& tensor,
                              const Field& field) {
  const std::size_t m = cc.rank();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("s" + std::to_string(i));
  std::vector<FieldElement> sc(m * m * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t t = 0; t < m; ++t) sc[(r * m + s) * m + t] = field.from_int(tensor(t, r, s));
    }
  }
  Vector unit(m, field.zero());
  for (auto r : cc.reflexive_orbitals()) unit[r] = field.one();
  return SCAlgebra(field, std::move(labels), std::move(sc), std::move(unit));
}

std::size_t centralizer_oracle(const PermutationGroup& g, const Field& field) {
  const std::size_t n = g.degree();
  if (n > kOracleDegreeCap) {
    throw PreconditionError("degree " + std::to_string(n) + " exceeds oracle cap " +
                            std::to_string(kOracleDegreeCap));
  }
  // (X P)[i][j] = X[i][j^(g^-1)],  (P X)[i][j] = X[i^g][j].
  const auto& gens = g.generators();
  Matrix eq(gens.size() * n * n, n * n);
  std::size_t row = 0;
  for (const auto& s : gens) {
    const auto inv = s.inverse();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++row) {
        const std::size_t a = i * n + inv(static_cast<Point>(j));
        const std::size_t b = s(static_cast<Point>(i)) * n + j;
        if (a == b) continue;
        eq(row, a) = field.add(eq(row, a), field.one());
        eq(row, b) = field.sub(eq(row, b), field.one());
      }
    }
  }
  return n * n - rank(field, std::move(eq));
}

ReflexiveForm reflexive_form(const SCAlgebra& a, const CoherentConfiguration& cc) {
  const auto refl = cc.reflexive_orbitals();
  if (refl.size() != 1) throw PreconditionError("form requires transitivity");
  ReflexiveForm out;
  out.lambda.coords = a.zero();
  out.lambda.coords[refl.front()] = a.field().one();
  out.gram = gram_matrix(a, out.lambda);
  out.symmetric = out.gram == out.gram.transpose();
  out.nondegenerate = rank(a.field(), out.gram) == a.dim();
  return out;
}

}  // namespace symcent
