#pragma once

#include "g29/exactfield/modp.hpp"
#include "g29/exactfield/number_field.hpp"

#include <cstdint>

namespace g29 {

/// Coefficients in a number field.
struct ExactDomain {
  using E = AlgNum;
  FieldPtr field;

  E zero() const { return AlgNum(field, Rational(0)); }
  E one() const { return AlgNum(field, Rational(1)); }
  static bool is_zero(const E& a) { return a.is_zero(); }
  static E add(const E& a, const E& b) { return a + b; }
  static E sub(const E& a, const E& b) { return a - b; }
  static E mul(const E& a, const E& b) { return a * b; }
  static E neg(const E& a) { return -a; }
  static E inv(const E& a) { return a.inverse(); }
};

/// Coefficients in F_p, p < 2^31.
struct ModpDomain {
  using E = std::uint32_t;
  std::uint64_t p;

  E zero() const { return 0; }
  E one() const { return 1; }
  static bool is_zero(E a) { return a == 0; }
  E add(E a, E b) const { return static_cast<E>((a + static_cast<std::uint64_t>(b)) % p); }
  E sub(E a, E b) const { return static_cast<E>((a + p - b) % p); }
  E mul(E a, E b) const { return static_cast<E>(static_cast<std::uint64_t>(a) * b % p); }
  E neg(E a) const { return a ? static_cast<E>(p - a) : 0; }
  E inv(E a) const { return static_cast<E>(modp::inv(a, p)); }
};

}  // namespace g29
