#pragma once

#include "g29/exactfield/upoly.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace g29 {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

struct FieldMismatch : std::invalid_argument {
  FieldMismatch() : std::invalid_argument("operands live in different number fields") {}
};

/// Q(a) = Q[a]/(m(a)) for a monic irreducible m. Degree one gives Q itself.
class NumberField {
 public:
  /// Rejects non-monic, non-squarefree and reducible minimal polynomials.
  static FieldPtr create(const UPolyQ& minpoly, std::string symbol = "a");
  /// Skips the irreducibility proof; only for polynomials already known to be
  /// minimal polynomials (e.g. produced by a primitive-element computation over
  /// a field).
  static FieldPtr create_trusted(const UPolyQ& minpoly, std::string symbol = "a");
  static FieldPtr rationals();

  int degree() const { return degree_; }
  bool is_rationals() const { return degree_ == 1; }
  const UPolyQ& minimal_polynomial() const { return minpoly_; }
  const std::string& symbol() const { return symbol_; }

  /// Rows give a^(n+k) in the power basis, k = 0 .. n-2.
  const std::vector<std::vector<Rational>>& reduction_table() const { return table_; }

  /// Structural equality: same minimal polynomial and symbol.
  bool same_as(const NumberField& o) const {
    return this == &o || (degree_ == o.degree_ && symbol_ == o.symbol_ && minpoly_ == o.minpoly_);
  }

 private:
  NumberField(UPolyQ minpoly, std::string symbol);
  UPolyQ minpoly_;
  std::string symbol_;
  int degree_;
  std::vector<std::vector<Rational>> table_;
};

/// Element of a number field in the power basis of its generator.
class AlgNum {
 public:
  AlgNum();
  AlgNum(long v);  // NOLINT: rational constants convert implicitly
  AlgNum(const Rational& v);  // NOLINT
  AlgNum(FieldPtr field, const Rational& v);
  AlgNum(FieldPtr field, std::vector<Rational> coeffs);

  static AlgNum generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Value when is_rational().
  const Rational& rational() const { return c_[0]; }

  AlgNum operator-() const;
  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const AlgNum& o);
  AlgNum& operator/=(const AlgNum& o);
  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }
  friend AlgNum operator/(AlgNum a, const AlgNum& b) { return a /= b; }
  friend bool operator==(const AlgNum& a, const AlgNum& b);
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

  AlgNum inverse() const;
  AlgNum pow(unsigned e) const;
  /// Re-homes a rational constant (or an element of an identical field) into f.
  AlgNum in_field(const FieldPtr& f) const;

  /// Polynomial in the generator symbol, e.g. "(3+a)/384".
  std::string to_string() const;
  std::size_t hash() const;

  /// Element as a polynomial in the generator.
  UPolyQ as_poly() const;

 private:
  void unify(AlgNum& o);
  FieldPtr field_;
  std::vector<Rational> c_;
};

/// Common field of two elements, promoting Q into the other; throws on mismatch.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

/// Parses the element syntax (rational expressions in the generator symbol).
AlgNum parse_algnum(const std::string& text, const FieldPtr& field);

/// Minimal polynomial over Q of an element (Krylov sequence in the power basis).
UPolyQ minimal_polynomial_of(const AlgNum& a);

}  // namespace g29

template <>
struct std::hash<g29::AlgNum> {
  std::size_t operator()(const g29::AlgNum& a) const { return a.hash(); }
};
