#include <doctest.h>

#include <random>

#include "symcent/error.hpp"
#include "symcent/field.hpp"
#include "symcent/matrix.hpp"

using namespace symcent;

namespace {

// GF(8) product by schoolbook polynomial multiplication and reduction with
// x^3 = x + 1 written out by hand.
std::uint32_t gf8_mul(std::uint32_t a, std::uint32_t b) {
  std::uint32_t prod = 0;
  for (int i = 0; i < 3; ++i) {
    if (b >> i & 1) prod ^= a << i;
  }
  for (int deg = 4; deg >= 3; --deg) {
    if (prod >> deg & 1) prod ^= (1u << deg) ^ (0b11u << (deg - 3));
  }
  return prod;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.element(rng() % f.order());
  }
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(3);
  CHECK(f.add(f.element(1), f.element(2)) == f.zero());
  CHECK(f.inv(f.element(2)) == f.element(2));
  const Field f5 = Field::prime(5);
  CHECK(f5.inv(f5.element(2)) == f5.element(3));
  const Field f7 = Field::prime(7);
  CHECK(f7.inv(f7.one()) == f7.one());
  CHECK(f7.from_int(-1) == f7.element(6));
  CHECK(f7.pow(f7.element(3), 6) == f7.one());
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_WITH_AS(Field::prime(4), doctest::Contains("not prime"), PreconditionError);
  CHECK_THROWS_AS(Field::prime(1), PreconditionError);
  CHECK_THROWS_AS(Field::prime(3).inv(FieldElement{0}), PreconditionError);
  // x^2 + 1 = (x + 1)^2 over F_2.
  CHECK_THROWS_WITH_AS(Field::binary(2, 0b101), doctest::Contains("x+1"), PreconditionError);
}

TEST_CASE("default binary moduli") {
  CHECK(least_irreducible(1) == 0b11);
  CHECK(least_irreducible(2) == 0b111);
  CHECK(least_irreducible(3) == 0b1011);
  CHECK(least_irreducible(5) == 0b100101);
}

TEST_CASE("GF(8) agrees with a hand-written multiplication table") {
  const Field f = Field::binary(3);
  const auto x = f.element(0b010);
  CHECK(f.mul(f.mul(x, x), x) == f.element(0b011));
  CHECK(f.inv(x) == f.element(0b101));
  CHECK(f.to_string(f.element(0b101)) == "x^2+1");
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      CHECK(f.mul(f.element(a), f.element(b)).value == gf8_mul(a, b));
    }
  }
}

TEST_CASE("every nonzero element has an inverse") {
  for (std::uint32_t p = 2; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    const Field f = Field::prime(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      REQUIRE(f.mul(f.element(a), f.inv(f.element(a))) == f.one());
    }
  }
  for (unsigned m = 1; m <= 5; ++m) {
    const Field f = Field::binary(m);
    for (std::uint64_t a = 1; a < f.order(); ++a) {
      REQUIRE(f.mul(f.element(a), f.inv(f.element(a))) == f.one());
    }
  }
}

TEST_CASE("gauss on small matrices") {
  const Field f2 = Field::prime(2);
  const auto id = gauss(f2, Matrix::identity(f2, 3));
  CHECK(id.rank == 3);
  CHECK(id.nullspace_basis.empty());

  const Field f3 = Field::prime(3);
  const auto zero = gauss(f3, Matrix(2, 2));
  CHECK(zero.rank == 0);
  CHECK(zero.nullspace_basis.size() == 2);

  Matrix ones(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) ones(i, j) = f3.one();
  }
  const auto g = gauss(f3, ones);
  CHECK(g.rank == 1);
  CHECK(g.nullspace_basis.size() == 2);
  // Hand reduction: the first row becomes (1 1 1), the others vanish.
  CHECK(g.rref(0, 0) == f3.one());
  CHECK(g.rref(0, 2) == f3.one());
  CHECK(g.rref(1, 1) == f3.zero());

  CHECK(gauss(f3, Matrix(0, 0)).rank == 0);
}

TEST_CASE("rank-nullity, transpose rank and exact nullspaces") {
  std::mt19937_64 rng(42);
  for (const Field& f : {Field::prime(2), Field::prime(3), Field::prime(7), Field::binary(3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 8;
      const std::size_t c = 1 + rng() % 8;
      Matrix m = random_matrix(f, r, c, rng);
      // Force some dependencies.
      if (r > 1 && trial % 2 == 0) {
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = f.add(m(0, j), m(r > 2 ? 1 : 0, j));
      }
      const auto g = gauss(f, m);
      CHECK(g.rank + g.nullspace_basis.size() == c);
      CHECK(rank(f, m.transpose()) == g.rank);
      for (const auto& v : g.nullspace_basis) CHECK(is_zero(multiply(f, m, v)));
    }
  }
}
