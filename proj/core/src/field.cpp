#include "symcent/field.hpp"

#include <bit>
#include <sstream>

#include "symcent/error.hpp"

namespace symcent {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int poly_degree(std::uint64_t poly) { return 63 - std::countl_zero(poly); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = poly_degree(b);
  while (a != 0 && poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
  return a;
}

namespace {

// Least divisor of `poly` among polynomials of degree 1..deg/2, or 0.
std::uint64_t find_divisor(std::uint64_t poly) {
  const int d = poly_degree(poly);
  for (std::uint64_t q = 2; poly_degree(q) <= d / 2; ++q) {
    if (poly_mod(poly, q) == 0) return q;
  }
  return 0;
}

std::string poly_string(std::uint64_t poly) {
  if (poly == 0) return "0";
  std::string out;
  for (int i = poly_degree(poly); i >= 0; --i) {
    if (((poly >> i) & 1U) == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace

std::uint64_t least_irreducible(unsigned m) {
  if (m == 0 || m > 31) throw PreconditionError("binary field degree must be in [1, 31]");
  for (std::uint64_t poly = (std::uint64_t{1} << m) | 1U;; poly += 2) {
    if (find_divisor(poly) == 0) return poly;
  }
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldKind::prime) {
    if (spec_.p >= (std::uint32_t{1} << 31)) {
      throw PreconditionError("prime modulus " + std::to_string(spec_.p) + " too large");
    }
    if (!is_prime(spec_.p)) {
      throw PreconditionError("field modulus " + std::to_string(spec_.p) + " is not prime");
    }
    spec_.m = 1;
    spec_.modulus_poly = 0;
    order_ = spec_.p;
    return;
  }
  spec_.p = 2;
  if (spec_.m == 0 || spec_.m > 31) {
    throw PreconditionError("binary field degree must be in [1, 31]");
  }
  if (spec_.modulus_poly == 0) spec_.modulus_poly = least_irreducible(spec_.m);
  if (poly_degree(spec_.modulus_poly) != static_cast<int>(spec_.m)) {
    throw PreconditionError("modulus " + poly_string(spec_.modulus_poly) +
                            " does not have degree " + std::to_string(spec_.m));
  }
  if (const auto d = find_divisor(spec_.modulus_poly); d != 0) {
    throw PreconditionError("modulus " + poly_string(spec_.modulus_poly) +
                            " is reducible: divisible by " + poly_string(d));
  }
  order_ = std::uint64_t{1} << spec_.m;
}

FieldElement Field::element(std::uint64_t rep) const {
  if (rep >= order_) {
    throw PreconditionError("representative " + std::to_string(rep) + " out of range");
  }
  return {static_cast<std::uint32_t>(rep)};
}

FieldElement Field::from_int(std::int64_t v) const noexcept {
  if (spec_.kind == FieldKind::binary) return {static_cast<std::uint32_t>(v & 1)};
  const auto p = static_cast<std::int64_t>(spec_.p);
  auto r = v % p;
  if (r < 0) r += p;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::binary_mul(FieldElement a, FieldElement b) const noexcept {
  std::uint64_t acc = 0;
  std::uint64_t x = a.value;
  for (std::uint32_t y = b.value; y != 0; y >>= 1, x <<= 1) {
    if (y & 1U) acc ^= x;
  }
  return {static_cast<std::uint32_t>(poly_mod(acc, spec_.modulus_poly))};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const noexcept {
  FieldElement result = one();
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement Field::inv(FieldElement a) const {
  if (a.value == 0) throw PreconditionError("division by zero");
  // Multiplicative group has order |F| - 1.
  return pow(a, order_ - 2);
}

std::string Field::to_string(FieldElement a) const {
  if (spec_.kind == FieldKind::prime) return std::to_string(a.value);
  return poly_string(a.value);
}

}  // namespace symcent
