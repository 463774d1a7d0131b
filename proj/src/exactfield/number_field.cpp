#include "g29/exactfield/number_field.hpp"

#include "g29/exactfield/expr_parser.hpp"
#include "g29/exactfield/factor.hpp"
#include "g29/exactfield/linalg.hpp"

#include <sstream>

namespace g29 {

NumberField::NumberField(UPolyQ minpoly, std::string symbol)
    : minpoly_(std::move(minpoly)), symbol_(std::move(symbol)), degree_(minpoly_.degree()) {
  const int n = degree_;
  if (n >= 2) {
    // a^n = -(m_0 + ... + m_{n-1} a^{n-1})
    std::vector<Rational> row(n);
    for (int j = 0; j < n; ++j) row[j] = -minpoly_.coeff(j);
    table_.push_back(row);
    for (int k = 1; k <= n - 2; ++k) {
      std::vector<Rational> next(n);
      const Rational top = row[n - 1];
      for (int j = n - 1; j >= 1; --j) next[j] = row[j - 1];
      next[0] = 0;
      if (top != 0)
        for (int j = 0; j < n; ++j) next[j] += top * table_[0][j];
      table_.push_back(next);
      row = std::move(next);
    }
  }
}

FieldPtr NumberField::create_trusted(const UPolyQ& minpoly, std::string symbol) {
  if (minpoly.degree() < 1) throw std::invalid_argument("minimal polynomial must have degree >= 1");
  if (minpoly.lead() != 1) throw std::invalid_argument("minimal polynomial must be monic");
  return FieldPtr(new NumberField(minpoly, std::move(symbol)));
}

FieldPtr NumberField::create(const UPolyQ& minpoly, std::string symbol) {
  if (minpoly.degree() < 1)
    throw std::invalid_argument("minimal polynomial must have degree >= 1, got " +
                                minpoly.to_string(symbol));
  if (minpoly.lead() != 1)
    throw std::invalid_argument("minimal polynomial " + minpoly.to_string(symbol) +
                                " is not monic");
  if (!is_squarefree(minpoly))
    throw std::invalid_argument("minimal polynomial " + minpoly.to_string(symbol) +
                                " is not squarefree");
  if (minpoly.degree() > 1 && !is_irreducible_rational(minpoly))
    throw std::invalid_argument("minimal polynomial " + minpoly.to_string(symbol) +
                                " is reducible over Q");
  return FieldPtr(new NumberField(minpoly, std::move(symbol)));
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = FieldPtr(new NumberField(UPolyQ{0, 1}, "a"));
  return q;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return a;
  if (a->is_rationals()) return b;
  if (b->is_rationals()) return a;
  if (a->same_as(*b)) return a;
  throw FieldMismatch();
}

// ---------------------------------------------------------------------------

AlgNum::AlgNum() : field_(NumberField::rationals()), c_(1) {}
AlgNum::AlgNum(long v) : field_(NumberField::rationals()), c_{Rational(v)} {}
AlgNum::AlgNum(const Rational& v) : field_(NumberField::rationals()), c_{v} {}

AlgNum::AlgNum(FieldPtr field, const Rational& v) : field_(std::move(field)) {
  c_.resize(field_->degree());
  c_[0] = v;
}

AlgNum::AlgNum(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  const int n = field_->degree();
  if (static_cast<int>(c_.size()) > n) {
    // reduce an arbitrary polynomial in the generator
    UPolyQ r = UPolyQ(c_) % field_->minimal_polynomial();
    c_.assign(n, Rational(0));
    for (int i = 0; i <= r.degree(); ++i) c_[i] = r.coeff(i);
  }
  c_.resize(n);
}

AlgNum AlgNum::generator(const FieldPtr& field) {
  std::vector<Rational> c(field->degree());
  if (field->degree() == 1) {
    c[0] = -field->minimal_polynomial().coeff(0);
  } else {
    c[1] = 1;
  }
  return AlgNum(field, std::move(c));
}

bool AlgNum::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool AlgNum::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool AlgNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void AlgNum::unify(AlgNum& o) {
  if (field_ == o.field_) return;
  FieldPtr f = common_field(field_, o.field_);
  if (field_ != f) {
    c_.resize(f->degree());
    field_ = f;
  }
  if (o.field_ != f) {
    o.c_.resize(f->degree());
    o.field_ = f;
  }
}

AlgNum AlgNum::in_field(const FieldPtr& f) const {
  if (field_ == f) return *this;
  if (is_rational() || field_->same_as(*f)) {
    if (!is_rational() || field_->same_as(*f)) return AlgNum(f, c_);
    return AlgNum(f, c_[0]);
  }
  throw FieldMismatch();
}

AlgNum AlgNum::operator-() const {
  AlgNum r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  if (field_ != o.field_) {
    AlgNum b = o;
    unify(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
  if (field_ != o.field_) {
    AlgNum b = o;
    unify(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AlgNum& AlgNum::operator*=(const AlgNum& o) {
  if (field_ != o.field_) {
    // scalar fast paths
    if (o.field_->is_rationals()) {
      for (auto& c : c_) c *= o.c_[0];
      return *this;
    }
    if (field_->is_rationals()) {
      Rational s = c_[0];
      *this = o;
      for (auto& c : c_) c *= s;
      return *this;
    }
    AlgNum b = o;
    unify(b);
    return *this *= b;
  }
  const int n = field_->degree();
  if (n == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * n - 1);
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  const auto& table = field_->reduction_table();
  for (int k = n; k <= 2 * n - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = table[k - n];
    for (int j = 0; j < n; ++j)
      if (row[j] != 0) prod[j] += prod[k] * row[j];
  }
  prod.resize(n);
  c_ = std::move(prod);
  return *this;
}

AlgNum AlgNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (field_->degree() == 1) return AlgNum(field_, 1 / c_[0]);
  if (is_rational()) return AlgNum(field_, 1 / c_[0]);
  ExtendedGcd eg = extended_gcd(as_poly(), field_->minimal_polynomial());
  if (eg.g.degree() != 0)
    throw std::logic_error("non-invertible element: minimal polynomial is not irreducible");
  return AlgNum(field_, eg.s.coeffs());
}

AlgNum& AlgNum::operator/=(const AlgNum& o) {
  if (o.field_->is_rationals() || o.is_rational()) {
    if (o.c_[0] == 0) throw DivisionByZero();
    if (field_ != o.field_ && !o.field_->is_rationals()) {
      AlgNum b = o;
      unify(b);
    }
    for (auto& c : c_) c /= o.c_[0];
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const AlgNum& a, const AlgNum& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  // promote: compare coefficient vectors with implicit zeros
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  if (!a.field_->is_rationals() && !b.field_->is_rationals() && !a.field_->same_as(*b.field_))
    throw FieldMismatch();
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = i < a.c_.size() ? a.c_[i] : Rational(0);
    Rational y = i < b.c_.size() ? b.c_[i] : Rational(0);
    if (x != y) return false;
  }
  return true;
}

AlgNum AlgNum::pow(unsigned e) const {
  AlgNum r(field_, Rational(1));
  AlgNum b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

UPolyQ AlgNum::as_poly() const { return UPolyQ(c_); }

std::string AlgNum::to_string() const {
  if (is_rational()) return c_[0].get_str();
  Integer den = 1;
  for (const auto& c : c_) den = lcm(den, Integer(c.get_den()));
  std::ostringstream num;
  int terms = 0;
  const std::string& sym = field_->symbol();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Integer v = c_[i].get_num() * (den / c_[i].get_den());
    if (v < 0)
      num << "-";
    else if (terms > 0)
      num << "+";
    Integer a = abs(v);
    if (i == 0) {
      num << a.get_str();
    } else {
      if (a != 1) num << a.get_str() << "*";
      num << sym;
      if (i > 1) num << "^" << i;
    }
    ++terms;
  }
  if (den == 1) return num.str();
  if (terms == 1) return num.str() + "/" + den.get_str();
  return "(" + num.str() + ")/" + den.get_str();
}

std::size_t AlgNum::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  // trailing zeros ignored so that Q-constants hash like their promotions
  std::size_t n = c_.size();
  while (n > 1 && c_[n - 1] == 0) --n;
  for (std::size_t i = 0; i < n; ++i) h = (h ^ hash_value(c_[i])) * 0x100000001b3ULL;
  return h;
}

namespace {

struct AlgNumPolicy {
  FieldPtr field;
  AlgNum number(const Integer& v) { return AlgNum(field, Rational(v)); }
  bool is_symbol(const std::string& s) { return s == field->symbol(); }
  AlgNum symbol(const std::string&) { return AlgNum::generator(field); }
  AlgNum divide(const AlgNum& a, const AlgNum& b) { return a / b; }
};

}  // namespace

AlgNum parse_algnum(const std::string& text, const FieldPtr& field) {
  AlgNumPolicy policy{field};
  detail::ExprParser<AlgNum, AlgNumPolicy> parser(text, policy);
  return parser.parse().in_field(field);
}

UPolyQ minimal_polynomial_of(const AlgNum& a) {
  const int n = a.field()->degree();
  linalg::DependencyFinder<Rational> finder(n);
  AlgNum power(a.field(), Rational(1));
  for (int k = 0; k <= n; ++k) {
    if (auto rel = finder.add(power.coeffs())) return UPolyQ(*rel);
    power *= a;
  }
  throw std::logic_error("minimal polynomial search exceeded field degree");
}

}  // namespace g29
