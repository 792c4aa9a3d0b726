#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace symcent {

struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

enum class FieldKind { prime, binary };

/// Description of a finite field: F_p, or GF(2^m) = F_2[x]/(modulus_poly).
/// Binary moduli are bit vectors with bit i holding the coefficient of x^i.
struct FieldSpec {
  FieldKind kind = FieldKind::prime;
  std::uint32_t p = 2;
  unsigned m = 1;
  std::uint64_t modulus_poly = 0;  // 0 selects the least irreducible of degree m

  static FieldSpec prime(std::uint32_t p) { return {FieldKind::prime, p, 1, 0}; }
  static FieldSpec binary(unsigned m, std::uint64_t poly = 0) {
    return {FieldKind::binary, 2, m, poly};
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Degree of a nonzero F_2 polynomial in bit-vector form.
int poly_degree(std::uint64_t poly);

/// Remainder of a by b over F_2.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b);

/// Least irreducible polynomial of degree m over F_2 with constant term 1
/// (x+1 for m = 1, x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, ...).
std::uint64_t least_irreducible(unsigned m);

/// Arithmetic context for a finite field. Immutable after construction.
class Field {
 public:
  /// Validates the spec: p prime, or m in [1, 31] with an irreducible modulus.
  /// Throws PreconditionError naming the failure.
  explicit Field(FieldSpec spec);

  static Field prime(std::uint32_t p) { return Field(FieldSpec::prime(p)); }
  static Field binary(unsigned m, std::uint64_t poly = 0) {
    return Field(FieldSpec::binary(m, poly));
  }

  const FieldSpec& spec() const noexcept { return spec_; }
  FieldKind kind() const noexcept { return spec_.kind; }
  std::uint32_t characteristic() const noexcept { return spec_.p; }
  /// Number of elements, p or 2^m.
  std::uint64_t order() const noexcept { return order_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  /// Element with canonical representative `rep` (must be < order()).
  FieldElement element(std::uint64_t rep) const;
  /// Image of an integer under Z -> F (only the prime subfield is reached).
  FieldElement from_int(std::int64_t v) const noexcept;

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    if (spec_.kind == FieldKind::binary) return {a.value ^ b.value};
    std::uint32_t s = a.value + b.value;
    return {s >= spec_.p ? s - spec_.p : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    if (spec_.kind == FieldKind::binary) return {a.value ^ b.value};
    return {a.value >= b.value ? a.value - b.value : a.value + spec_.p - b.value};
  }
  FieldElement neg(FieldElement a) const noexcept {
    if (spec_.kind == FieldKind::binary || a.value == 0) return a;
    return {spec_.p - a.value};
  }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    if (spec_.kind == FieldKind::prime) {
      return {static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(a.value) * b.value % spec_.p)};
    }
    return binary_mul(a, b);
  }
  /// Throws PreconditionError("division by zero") for a = 0.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

  bool is_zero(FieldElement a) const noexcept { return a.value == 0; }

  /// Decimal for prime fields; polynomial in x for binary fields ("x^2+1").
  std::string to_string(FieldElement a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }

 private:
  FieldElement binary_mul(FieldElement a, FieldElement b) const noexcept;

  FieldSpec spec_;
  std::uint64_t order_ = 0;
};

}  // namespace symcent
