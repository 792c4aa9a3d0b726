#include <doctest.h>

#include <functional>
#include <set>

#include "symcent/action.hpp"
#include "symcent/algebra.hpp"
#include "symcent/catalog.hpp"
#include "symcent/coherent.hpp"
#include "symcent/error.hpp"
#include "symcent/radical.hpp"
#include "symcent/schur.hpp"
#include "symcent/symmetric.hpp"

using namespace symcent;

namespace {

struct Built {
  CoherentConfiguration cc;
  SCAlgebra algebra;
};

Built centralizer(const PermutationGroup& g, std::uint32_t p) {
  auto cc = two_orbits(g);
  auto a = centralizer_algebra(cc, intersection_tensor(cc), Field::prime(p));
  return {std::move(cc), std::move(a)};
}

Built centralizer(const std::string& spec, std::uint32_t p) {
  return centralizer(build_from_spec(spec).group, p);
}

PermutationGroup cyclic(std::size_t n) {
  std::vector<Point> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<Point>((i + 1) % n);
  return {n, {Permutation(im)}};
}

// Every vector of F_p^dim, in lexicographic order.
void for_each_vector(const Field& f, std::size_t dim, const std::function<void(const Vector&)>& visit) {
  Vector v(dim, f.zero());
  while (true) {
    visit(v);
    std::size_t i = 0;
    while (i < dim && v[i].value + 1 == f.order()) v[i++] = f.zero();
    if (i == dim) return;
    v[i] = f.element(v[i].value + 1);
  }
}

std::vector<Vector> nilpotents(const SCAlgebra& a) {
  std::vector<Vector> out;
  for_each_vector(a.field(), a.dim(), [&](const Vector& x) {
    if (is_zero(a.power(x, a.dim() + 1))) out.push_back(x);
  });
  return out;
}

// Size of the additive span of `gens`, by closing under addition.
std::size_t span_size(const SCAlgebra& a, const std::vector<Vector>& gens) {
  std::set<Vector> span{a.zero()};
  std::vector<Vector> frontier{a.zero()};
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        auto y = a.add(x, g);
        if (span.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return span.size();
}

// Upper-triangular 2x2 matrices: e11, e12, e22.
SCAlgebra upper_triangular(const Field& f) {
  std::vector<FieldElement> sc(27, f.zero());
  auto set = [&](int i, int j, int k) { sc[(i * 3 + j) * 3 + k] = f.one(); };
  set(0, 0, 0);  // e11 e11 = e11
  set(0, 1, 1);  // e11 e12 = e12
  set(1, 2, 1);  // e12 e22 = e12
  set(2, 2, 2);  // e22 e22 = e22
  return SCAlgebra(f, {"e11", "e12", "e22"}, sc, {f.one(), f.zero(), f.one()});
}

}  // namespace

TEST_CASE("centralizer dimension equals the rank") {
  CHECK(centralizer_oracle(build_symmetric(3), Field::prime(2)) == 2);
  CHECK(centralizer_oracle(cyclic(3), Field::prime(5)) == 3);
  CHECK(centralizer_oracle(build_alt_on_pairs(7), Field::prime(5)) == 3);
  for (const char* spec : {"alt:5", "frobenius:13,4", "signtwist:4", "example3_2", "psl2cosets:8"}) {
    for (std::uint32_t p : {2u, 3u, 7u}) {
      const auto b = centralizer(spec, p);
      CHECK(centralizer_oracle(build_from_spec(spec).group, Field::prime(p)) == b.algebra.dim());
      CHECK(b.algebra.dim() == b.cc.rank());
    }
  }
  CHECK_THROWS_AS(centralizer_oracle(build_symmetric(41), Field::prime(2)), PreconditionError);
}

TEST_CASE("2-transitive centralizers are k x k or k[X]/(X^2)") {
  auto b = centralizer("sym:4", 2);
  CHECK(radical_chain(b.algebra).dims == std::vector<std::size_t>{2, 1, 0});
  b = centralizer("sym:4", 3);
  CHECK(radical_chain(b.algebra).dims == std::vector<std::size_t>{2, 0});
  b = centralizer("psl2line:8", 3);  // 3 | 9
  CHECK(radical_chain(b.algebra).dims == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("reflexive-coefficient form") {
  for (const char* spec : {"sym:5", "altpairs:7", "signtwist:4", "frobenius:13,4", "example3_2",
                           "psl2cosets:8"}) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      const auto b = centralizer(spec, p);
      const auto form = reflexive_form(b.algebra, b.cc);
      const Field& f = b.algebra.field();
      CHECK(form.symmetric);
      bool invertible = true;
      for (std::size_t r = 0; r < b.cc.rank(); ++r) {
        const auto& o = b.cc.orbitals[r];
        invertible &= o.valency % p != 0;
        CHECK(form.gram(r, o.star) == f.from_int(static_cast<std::int64_t>(o.valency)));
        for (std::size_t s = 0; s < b.cc.rank(); ++s) {
          if (!f.is_zero(form.gram(r, s))) CHECK(s == o.star);
        }
      }
      if (invertible) CHECK(form.nondegenerate);
    }
  }
  const auto ex = centralizer("example3_2", 3);
  CHECK_FALSE(reflexive_form(ex.algebra, ex.cc).nondegenerate);

  const PermutationGroup intransitive(5, {parse_permutation("(1 2 3)", 5)});
  const auto b = centralizer(intransitive, 2);
  CHECK_THROWS_WITH(reflexive_form(b.algebra, b.cc), doctest::Contains("form requires transitivity"));
}

TEST_CASE("trace identity n * gram = tr(A_r A_s)") {
  for (const char* spec : {"alt:5", "frobenius:7,3", "signtwist:3", "example3_2"}) {
    for (std::uint32_t p : {5u, 7u, 11u}) {
      const Field f = Field::prime(p);
      const auto b = centralizer(spec, p);
      const auto form = reflexive_form(b.algebra, b.cc);
      const auto mats = adjacency_matrices(b.cc, f);
      for (std::size_t r = 0; r < b.cc.rank(); ++r) {
        for (std::size_t s = 0; s < b.cc.rank(); ++s) {
          const auto prod = multiply(f, mats[r], mats[s]);
          FieldElement tr = f.zero();
          for (std::size_t i = 0; i < b.cc.n; ++i) tr = f.add(tr, prod(i, i));
          CHECK(f.mul(f.from_int(static_cast<std::int64_t>(b.cc.n)), form.gram(r, s)) == tr);
        }
      }
    }
  }
}

TEST_CASE("radical of the affine counterexample") {
  const auto b = centralizer("example3_2", 3);
  const auto series = radical_chain(b.algebra);
  // Nilpotent elements of a commutative algebra form its radical.
  const auto nil = nilpotents(b.algebra);
  CHECK(nil.size() == 81);  // 3^4
  std::vector<Vector> products;
  for (const auto& x : nil) {
    for (const auto& y : nil) products.push_back(b.algebra.multiply(x, y));
  }
  const std::size_t j2 = span_size(b.algebra, products);
  CHECK(j2 == 3);  // dim J^2 = 1
  CHECK(series.dims == std::vector<std::size_t>{5, 4, 1, 0});

  const auto s = structure_report(b.algebra, series);
  CHECK(s.is_local);
  CHECK(s.commutative);
  CHECK(s.top_dim == 1);
  CHECK(s.right_socle_dim >= 2);
  CHECK_FALSE(nilpotent_free_check(b.algebra));
}

TEST_CASE("radical dimension matches the nilpotent count") {
  for (const char* spec : {"frobenius:7,3", "frobenius:5,2", "sym:4", "alt:4"}) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      const auto b = centralizer(spec, p);
      if (!b.algebra.is_commutative()) continue;
      const auto series = radical_chain(b.algebra);
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < series.dims[1]; ++i) expected *= p;
      CHECK(nilpotents(b.algebra).size() == expected);
    }
  }
}

TEST_CASE("coprime characteristic gives a semisimple centralizer") {
  for (const char* spec : {"alt:5", "frobenius:7,3", "signtwist:3", "psl2cosets:8", "altpairs:7"}) {
    const auto g = build_from_spec(spec).group;
    for (std::uint32_t p : {11u, 13u}) {
      if (g.order() % p == 0) continue;
      const auto b = centralizer(g, p);
      CHECK(radical_chain(b.algebra).dims == std::vector<std::size_t>{b.algebra.dim(), 0});
    }
  }
}

TEST_CASE("non-commutative algebras") {
  const Field f = Field::prime(3);
  const auto t2 = upper_triangular(f);
  const auto series = radical_chain(t2);
  CHECK(series.dims == std::vector<std::size_t>{3, 1, 0});
  const auto s = structure_report(t2, series);
  CHECK(s.top_dim == 2);
  CHECK_FALSE(s.commutative);
  CHECK_THROWS_AS(nilpotent_free_check(t2), PreconditionError);
  const auto v = is_symmetric(t2);
  CHECK(v.status == SymmetricStatus::not_symmetric);
  CHECK(v.certificate->exhausted_search);

  // S_3 on 6 points is regular: the centralizer is the group algebra of S_3.
  const PermutationGroup s3(6, {parse_permutation("(1 2)(3 4)(5 6)", 6), parse_permutation("(1 3 5)(2 6 4)", 6)});
  REQUIRE(s3.order() == 6);
  const auto b = centralizer(s3, 2);
  CHECK_FALSE(b.algebra.is_commutative());
  CHECK(radical_chain(b.algebra).dims == std::vector<std::size_t>{6, 1, 0});
  CHECK(is_symmetric(b.algebra, reflexive_form(b.algebra, b.cc)).certified_positive());
}

TEST_CASE("structure constants must be associative") {
  const Field f = Field::prime(2);
  auto make = [&](bool assoc) {
    std::vector<FieldElement> sc(27, f.zero());
    auto set = [&](int i, int j, int k) { sc[(i * 3 + j) * 3 + k] = f.one(); };
    for (int j = 0; j < 3; ++j) {
      set(0, j, j);
      set(j, 0, j);
    }
    set(1, 1, 2);  // b1 b1 = b2
    if (!assoc) set(2, 1, 1);  // b2 b1 = b1 but b1 b2 = 0
    return SCAlgebra(f, {"1", "x", "x^2"}, sc, {f.one(), f.zero(), f.zero()});
  };
  CHECK_NOTHROW(make(true));
  CHECK_THROWS_AS(make(false), VerificationError);
}

TEST_CASE("symmetric decisions on named instances") {
  const auto ex = centralizer("example3_2", 3);
  const auto v = is_symmetric(ex.algebra, reflexive_form(ex.algebra, ex.cc));
  CHECK(v.status == SymmetricStatus::not_symmetric);
  REQUIRE(v.certificate);
  CHECK(v.certificate->exhausted_search);
  CHECK(v.certificate->functionals_searched == 243);
  CHECK(v.certificate->local_socle_obstruction);

  // Independent check: no functional at all gives a symmetric non-degenerate form.
  const Field& f = ex.algebra.field();
  std::size_t found = 0;
  for_each_vector(f, 5, [&](const Vector& lam) {
    const LinearFunctional l{lam};
    const auto g = gram_matrix(ex.algebra, l);
    if (!(g == g.transpose())) return;
    bool degenerate = false;
    for_each_vector(f, 5, [&](const Vector& x) {
      if (!degenerate && !is_zero(x) && is_zero(multiply(f, g, x))) degenerate = true;
    });
    if (!degenerate) ++found;
  });
  CHECK(found == 0);

  auto b = centralizer("altpairs:7", 5);
  CHECK(is_symmetric(b.algebra, reflexive_form(b.algebra, b.cc)).status == SymmetricStatus::symmetric_with_witness);
  b = centralizer("sym:4", 2);
  const auto s4 = is_symmetric(b.algebra, reflexive_form(b.algebra, b.cc));
  CHECK(s4.status == SymmetricStatus::symmetric_with_witness);
  REQUIRE(s4.witness);
  CHECK(s4.path == "reflexive");
}

TEST_CASE("verdict layers") {
  // Without the hint the semisimple path is taken.
  auto b = centralizer("alt:5", 7);
  auto v = is_symmetric(b.algebra);
  CHECK(v.status == SymmetricStatus::symmetric_semisimple);
  CHECK(v.path == "semisimple");
  // p | valency and a nonzero radical: the exhaustive search finds a witness.
  b = centralizer("signtwist:3", 2);
  REQUIRE(radical_chain(b.algebra).dims == std::vector<std::size_t>{3, 1, 0});
  v = is_symmetric(b.algebra, reflexive_form(b.algebra, b.cc));
  CHECK(v.path == "exhaustive");
  CHECK(v.status == SymmetricStatus::symmetric_with_witness);
}

TEST_CASE("every witness is a non-degenerate trace functional") {
  for (const char* spec : {"sym:4", "alt:6", "altpairs:7", "signtwist:5", "frobenius:7,3", "frobenius:13,4",
                           "psl2line:8", "psl2cosets:8"}) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
      const auto b = centralizer(spec, p);
      for (std::uint64_t seed : {0u, 1u}) {
        const auto v = is_symmetric(b.algebra, reflexive_form(b.algebra, b.cc), seed);
        if (!v.witness) continue;
        const auto& f = b.algebra.field();
        for (std::size_t i = 0; i < b.algebra.dim(); ++i) {
          for (std::size_t j = 0; j < b.algebra.dim(); ++j) {
            const auto x = b.algebra.multiply(b.algebra.basis(i), b.algebra.basis(j));
            const auto y = b.algebra.multiply(b.algebra.basis(j), b.algebra.basis(i));
            CHECK((*v.witness)(f, x) == (*v.witness)(f, y));
          }
        }
        CHECK(rank(f, gram_matrix(b.algebra, *v.witness)) == b.algebra.dim());
        CHECK(is_witness(b.algebra, *v.witness));
      }
    }
  }
}

TEST_CASE("Schur rings") {
  const Field f = Field::prime(5);
  const auto z7 = regular_subgroup_elements({parse_permutation("(1 2 3 4 5 6 7)", 7)}, 7);
  REQUIRE(z7.size() == 7);
  const PermutationGroup mult(7, {parse_permutation("(2 3 5)(4 7 6)", 7)});  // x -> 2x
  auto ring = schur_ring_from_action(z7, mult, f);
  CHECK(ring.basic_sets == std::vector<std::vector<std::size_t>>{{0}, {1, 2, 4}, {3, 5, 6}});

  ring = schur_ring_from_action(z7, PermutationGroup::trivial(7), f);
  CHECK(ring.basic_sets.size() == 7);

  const auto entry = build_from_spec("example3_2");
  const auto ex = build_affine_counterexample();
  const auto t = regular_subgroup_elements(entry.regular_normal_subgroup, 9);
  ring = schur_ring_from_action(t, PermutationGroup(9, {ex.x}), Field::prime(3), entry.namer);
  const std::set<std::string> labels(ring.labels.begin(), ring.labels.end());
  CHECK(labels == std::set<std::string>{"1", "a", "a^2", "b+ab+a^2b", "b^2+ab^2+a^2b^2"});

  CHECK_THROWS_AS(schur_ring_from_action(z7, PermutationGroup(7, {parse_permutation("(1 2)", 7)}), f),
                  PreconditionError);
}

TEST_CASE("Schur ring versus centralizer") {
  const auto ex = build_from_spec("example3_2");
  auto rep = schur_vs_centralizer(ex.group, ex.regular_normal_subgroup, Field::prime(3), 0, ex.namer);
  CHECK(rep.pass());
  CHECK(rep.orbitals == 5);
  CHECK(rep.basic_sets == 5);

  const auto fr = build_from_spec("frobenius:7,3");
  rep = schur_vs_centralizer(fr.group, fr.regular_normal_subgroup, Field::prime(5));
  CHECK(rep.pass());
  CHECK(rep.basic_sets == 3);

  const auto c6 = cyclic(6);
  rep = schur_vs_centralizer(c6, c6.generators(), Field::prime(2));
  CHECK(rep.pass());
  CHECK(rep.basic_sets == 6);
}

TEST_CASE("nilpotent-free check") {
  auto b = centralizer("frobenius:7,3", 5);
  CHECK(nilpotent_free_check(b.algebra));
  CHECK(nilpotent_free_check(b.algebra, NilpotentMethod::frobenius));
  CHECK(radical_chain(b.algebra).dims == std::vector<std::size_t>{3, 0});
  b = centralizer("sym:4", 2);
  CHECK_FALSE(nilpotent_free_check(b.algebra, NilpotentMethod::exhaustive));
  CHECK_FALSE(nilpotent_free_check(b.algebra, NilpotentMethod::frobenius));
  b = centralizer("frobenius:13,4", 13);
  CHECK(nilpotent_free_check(b.algebra, NilpotentMethod::exhaustive) ==
        nilpotent_free_check(b.algebra, NilpotentMethod::frobenius));
}

TEST_CASE("Hecke algebra dimension") {
  auto h = hecke_check(build_frobenius_affine(7, 3), 0, Field::prime(7));
  CHECK(h.hecke_dim == 3);
  CHECK(h.matches_rank);
  h = hecke_check(build_symmetric(3), 0, Field::prime(5));
  CHECK(h.hecke_dim == 2);
  h = hecke_check(cyclic(3), 0, Field::prime(2));
  CHECK(h.hecke_dim == 3);
  CHECK_THROWS_AS(hecke_check(build_symmetric(3), 0, Field::prime(2)), PreconditionError);
}

TEST_CASE("sampling and socle layers") {
  // F_2[C_32] is local with a one-dimensional socle; 2^32 functionals is over
  // the exhaustive budget, so random draws must find the witness.
  std::vector<Point> im(32);
  for (Point i = 0; i < 32; ++i) im[i] = (i + 1) % 32;
  const auto b = centralizer(PermutationGroup(32, {Permutation(im)}), 2);
  const auto v = is_symmetric(b.algebra, std::nullopt, 5);
  CHECK(v.path == "sampled");
  CHECK(v.status == SymmetricStatus::symmetric_with_witness);

  // k[x_1..x_20]/(x_i x_j): local, socle of dimension 20.
  const Field f = Field::prime(2);
  const std::size_t d = 21;
  std::vector<FieldElement> sc(d * d * d, f.zero());
  for (std::size_t j = 0; j < d; ++j) {
    sc[(0 * d + j) * d + j] = f.one();
    sc[(j * d + 0) * d + j] = f.one();
  }
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < d; ++i) labels[i] = "x" + std::to_string(i);
  Vector unit(d, f.zero());
  unit[0] = f.one();
  const SCAlgebra a(f, labels, sc, unit);
  const auto w = is_symmetric(a);
  CHECK(w.status == SymmetricStatus::not_symmetric);
  CHECK(w.path == "socle");
  REQUIRE(w.certificate);
  CHECK_FALSE(w.certificate->exhausted_search);
  CHECK(w.certificate->local_socle_obstruction);
  CHECK(w.certificate->right_socle_dim == 20);
}
