#pragma once

#include "g29/exactfield/extension.hpp"
#include "g29/exactfield/number_field.hpp"
#include "g29/multipoly/monomial.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace g29 {

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Variables plus coefficient field.
struct Ring {
  std::vector<std::string> vars;
  FieldPtr field;

  static RingPtr make(std::vector<std::string> vars, FieldPtr field = NumberField::rationals());
  int nvars() const { return static_cast<int>(vars.size()); }
  /// -1 when absent
  int index_of(const std::string& name) const;
  bool same_as(const Ring& o) const { return this == &o || (vars == o.vars && field->same_as(*o.field)); }
  RingPtr with_field(FieldPtr f) const { return make(vars, std::move(f)); }
};

struct RingMismatch : std::invalid_argument {
  RingMismatch() : std::invalid_argument("polynomials live in different rings") {}
};

struct Term {
  Monomial m;
  AlgNum c;
};

/// Sparse polynomial; terms kept sorted descending in grevlex with nonzero
/// coefficients in the ring's field.
class Poly {
 public:
  explicit Poly(RingPtr ring);
  Poly(RingPtr ring, std::vector<Term> terms);  // merges duplicates, drops zeros

  static Poly constant(const RingPtr& ring, const AlgNum& c);
  static Poly variable(const RingPtr& ring, int i);
  static Poly variable(const RingPtr& ring, const std::string& name);
  static Poly monomial(const RingPtr& ring, const Monomial& m, const AlgNum& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  /// -1 for the zero polynomial
  int total_degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;
  AlgNum coefficient(const Monomial& m) const;
  Poly homogeneous_part(int d) const;
  /// Leading term under an order.
  const Term& leading(const MonomialOrder& order) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const AlgNum& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const AlgNum& s) { return a *= s; }
  friend Poly operator*(const AlgNum& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  Poly pow(unsigned e) const;

  /// Text form, e.g. "x^4 - 6*x^2*y^2 + (3+a)/384*z"; parse_poly inverts it.
  std::string to_string() const;

 private:
  void check_ring(const Poly& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

Poly parse_poly(const std::string& text, const RingPtr& ring);

}  // namespace g29
