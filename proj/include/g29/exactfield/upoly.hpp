#pragma once

#include "g29/exactfield/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace g29 {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
class UPolyQ {
 public:
  UPolyQ() = default;
  explicit UPolyQ(std::vector<Rational> coeffs);
  UPolyQ(std::initializer_list<long> coeffs);

  static UPolyQ constant(const Rational& c);
  static UPolyQ monomial(const Rational& c, int degree);
  static UPolyQ x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int i) const;
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  UPolyQ operator-() const;
  UPolyQ& operator+=(const UPolyQ& o);
  UPolyQ& operator-=(const UPolyQ& o);
  UPolyQ& operator*=(const Rational& s);
  friend UPolyQ operator+(UPolyQ a, const UPolyQ& b) { return a += b; }
  friend UPolyQ operator-(UPolyQ a, const UPolyQ& b) { return a -= b; }
  friend UPolyQ operator*(const UPolyQ& a, const UPolyQ& b);
  friend UPolyQ operator*(UPolyQ a, const Rational& s) { return a *= s; }
  friend bool operator==(const UPolyQ& a, const UPolyQ& b) { return a.c_ == b.c_; }

  UPolyQ monic() const;
  UPolyQ derivative() const;
  Rational eval(const Rational& x) const;
  /// p(q(x))
  UPolyQ compose(const UPolyQ& q) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws DivisionByZero when b is zero.
std::pair<UPolyQ, UPolyQ> divmod(const UPolyQ& a, const UPolyQ& b);
UPolyQ operator%(const UPolyQ& a, const UPolyQ& b);

/// Monic gcd; gcd(0,0) = 0.
UPolyQ gcd(const UPolyQ& a, const UPolyQ& b);

/// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtendedGcd {
  UPolyQ g, s, t;
};
ExtendedGcd extended_gcd(const UPolyQ& a, const UPolyQ& b);

bool is_squarefree(const UPolyQ& p);
UPolyQ squarefree_part(const UPolyQ& p);

/// Yun's algorithm: monic factors f_i with p = lc * prod f_i^i.
std::vector<std::pair<UPolyQ, int>> squarefree_decomposition(const UPolyQ& p);

/// Clears denominators and removes content; leading coefficient positive.
std::vector<Integer> primitive_integer_part(const UPolyQ& p);
UPolyQ from_integers(const std::vector<Integer>& c);

}  // namespace g29
