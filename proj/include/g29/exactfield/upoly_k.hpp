#pragma once

#include "g29/exactfield/number_field.hpp"

#include <utility>
#include <vector>

namespace g29 {

/// Dense univariate polynomial over a number field K, low degree first.
class UPolyK {
 public:
  explicit UPolyK(FieldPtr field = NumberField::rationals()) : field_(std::move(field)) {}
  UPolyK(FieldPtr field, std::vector<AlgNum> coeffs);
  static UPolyK from_rational(const FieldPtr& field, const UPolyQ& p);
  static UPolyK x(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  AlgNum coeff(int i) const;
  const AlgNum& lead() const { return c_.back(); }
  const std::vector<AlgNum>& coeffs() const { return c_; }
  /// True when every coefficient lies in Q.
  bool is_rational() const;
  UPolyQ to_rational() const;

  UPolyK operator-() const;
  UPolyK& operator+=(const UPolyK& o);
  UPolyK& operator-=(const UPolyK& o);
  UPolyK& operator*=(const AlgNum& s);
  friend UPolyK operator+(UPolyK a, const UPolyK& b) { return a += b; }
  friend UPolyK operator-(UPolyK a, const UPolyK& b) { return a -= b; }
  friend UPolyK operator*(const UPolyK& a, const UPolyK& b);
  friend UPolyK operator*(UPolyK a, const AlgNum& s) { return a *= s; }
  friend bool operator==(const UPolyK& a, const UPolyK& b);

  UPolyK monic() const;
  UPolyK derivative() const;
  AlgNum eval(const AlgNum& x) const;
  /// p(x + s)
  UPolyK shift(const AlgNum& s) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<AlgNum> c_;
};

std::pair<UPolyK, UPolyK> divmod(const UPolyK& a, const UPolyK& b);
UPolyK operator%(const UPolyK& a, const UPolyK& b);
UPolyK gcd(const UPolyK& a, const UPolyK& b);
bool is_squarefree(const UPolyK& p);
UPolyK squarefree_part(const UPolyK& p);
std::vector<std::pair<UPolyK, int>> squarefree_decomposition(const UPolyK& p);

}  // namespace g29
