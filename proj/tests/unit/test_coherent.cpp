#include <doctest.h>

#include "oracles.hpp"
#include "symcent/action.hpp"
#include "symcent/catalog.hpp"
#include "symcent/coherent.hpp"
#include "symcent/error.hpp"

using namespace symcent;

namespace {

PermutationGroup cyclic(std::size_t n) {
  std::vector<Point> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<Point>((i + 1) % n);
  return {n, {Permutation(im)}};
}

const char* const kSpecs[] = {"sym:3", "sym:5", "alt:4", "alt:6", "altpairs:7", "signtwist:3",
                              "signtwist:5", "frobenius:7,3", "frobenius:13,4", "example3_2",
                              "psl2line:8", "psl2cosets:8"};

}  // namespace

TEST_CASE("orbital counts") {
  auto cc = two_orbits(build_symmetric(3));
  CHECK(cc.rank() == 2);
  cc = two_orbits(cyclic(3));
  CHECK(cc.rank() == 3);
  for (const auto& o : cc.orbitals) CHECK(o.valency == 1);
  cc = two_orbits(build_alt_on_pairs(7));
  CHECK(cc.rank() == 3);
  CHECK(cc.valencies_at(0) == std::vector<std::size_t>{1, 10, 10});
}

TEST_CASE("orbital table basics") {
  for (const char* spec : kSpecs) {
    const auto g = build_from_spec(spec).group;
    const auto cc = two_orbits(g);
    REQUIRE(cc.orbital_of.size() == cc.n * cc.n);
    CHECK(cc.reflexive_orbitals().size() == 1);
    CHECK(cc.orbitals[0].reflexive);
    std::size_t total = 0;
    for (std::size_t s = 0; s < cc.rank(); ++s) {
      const auto& o = cc.orbitals[s];
      CHECK(cc.orbitals[o.star].star == s);
      CHECK(cc.orbital(o.representative.first, o.representative.second) == s);
      total += o.valency;
    }
    CHECK(total == cc.n);
    // Cross-module consistency with the point-stabilizer orbits.
    CHECK(cc.valencies_at(0) == classify_action(g).subdegrees);
  }
}

TEST_CASE("orbitals agree with the element-list oracle") {
  for (const char* spec : {"alt:5", "frobenius:7,3", "signtwist:3", "example3_2", "psl2line:4"}) {
    const auto g = build_from_spec(spec).group;
    const auto cc = two_orbits(g);
    const auto orbs = oracle::orbitals(oracle::closure(g.generators(), g.degree()));
    CHECK(orbs.size() == cc.rank());
    for (const auto& orb : orbs) {
      const auto s = cc.orbital(orb.begin()->first, orb.begin()->second);
      CHECK(cc.orbitals[s].size == orb.size());
      for (const auto& [a, b] : orb) CHECK(cc.orbital(a, b) == s);
    }
  }
}

TEST_CASE("intersection numbers") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto cc = two_orbits(build_symmetric(n));
    const auto c = intersection_tensor(cc);
    CHECK(c(0, 1, 1) == n - 1);
  }
  const auto cc = two_orbits(cyclic(3));
  const auto c = intersection_tensor(cc);
  // Orbital of (0, k) <-> k; composition adds exponents.
  std::size_t of[3];
  for (Point k = 0; k < 3; ++k) of[k] = cc.orbital(0, k);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t s = 0; s < 3; ++s) {
      for (std::size_t t = 0; t < 3; ++t) {
        CHECK(c(of[t], of[r], of[s]) == ((r + s) % 3 == t ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("row sums equal valencies") {
  for (const char* spec : kSpecs) {
    const auto cc = two_orbits(build_from_spec(spec).group);
    const auto c = intersection_tensor(cc);
    for (std::size_t t = 0; t < cc.rank(); ++t) {
      for (std::size_t r = 0; r < cc.rank(); ++r) {
        std::size_t sum = 0;
        for (std::size_t s = 0; s < cc.rank(); ++s) sum += c(t, r, s);
        CHECK(sum == cc.orbitals[r].valency);
      }
    }
  }
}

TEST_CASE("axioms hold for catalog groups") {
  for (const char* spec : kSpecs) {
    const auto cc = two_orbits(build_from_spec(spec).group);
    const auto c = intersection_tensor(cc);
    const auto rep = verify_cc_axioms(cc, c, 3, 1);
    CHECK_MESSAGE(rep.pass(), spec, ": ", rep.failure);
    if (cc.n <= 100) CHECK(verify_adjacency_products(cc, c).empty());
  }
  const auto ex = two_orbits(build_affine_counterexample().group);
  CHECK(ex.rank() == 5);
}

TEST_CASE("intransitive groups") {
  const PermutationGroup g(5, {parse_permutation("(1 2 3)", 5), parse_permutation("(4 5)", 5)});
  const auto cc = two_orbits(g);
  CHECK(cc.reflexive_orbitals().size() == 2);
  const auto c = intersection_tensor(cc);
  CHECK(verify_cc_axioms(cc, c).pass());
  CHECK(verify_adjacency_products(cc, c).empty());
}

TEST_CASE("a corrupted orbital table is rejected") {
  auto cc = two_orbits(build_alt_on_pairs(7));
  const auto c = intersection_tensor(cc);
  cc.orbital_of[0] = 1;  // (0,0) moved into a non-reflexive orbital
  const auto rep = verify_cc_axioms(cc, c);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.failure.empty());

  auto cc2 = two_orbits(build_frobenius_affine(7, 3));
  const auto c2 = intersection_tensor(cc2);
  std::swap(cc2.orbital_of[1], cc2.orbital_of[3]);  // (0,1) and (0,3) lie in different orbitals
  CHECK_FALSE(verify_adjacency_products(cc2, c2).empty());
}

TEST_CASE("adjacency matrices") {
  const Field f = Field::prime(5);
  const auto cc = two_orbits(build_symmetric(3));
  const auto a = adjacency_matrices(cc, f);
  CHECK(a[0] == Matrix::identity(f, 3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(a[1](i, j) == (i == j ? f.zero() : f.one()));
  }
  for (const char* spec : kSpecs) {
    const auto cc2 = two_orbits(build_from_spec(spec).group);
    const auto mats = adjacency_matrices(cc2, f);
    for (std::size_t s = 0; s < cc2.rank(); ++s) {
      CHECK(mats[s].transpose() == mats[cc2.orbitals[s].star]);
    }
  }
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(two_orbits(PermutationGroup::trivial(1001)), PreconditionError);
}
