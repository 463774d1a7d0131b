#include "g29/exactfield/upoly_k.hpp"

#include <sstream>

namespace g29 {

UPolyK::UPolyK(FieldPtr field, std::vector<AlgNum> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = c.in_field(field_);
  trim();
}

UPolyK UPolyK::from_rational(const FieldPtr& field, const UPolyQ& p) {
  std::vector<AlgNum> c;
  for (const auto& v : p.coeffs()) c.emplace_back(field, v);
  return UPolyK(field, std::move(c));
}

UPolyK UPolyK::x(const FieldPtr& field) {
  return UPolyK(field, {AlgNum(field, Rational(0)), AlgNum(field, Rational(1))});
}

void UPolyK::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AlgNum UPolyK::coeff(int i) const {
  if (i < 0 || i > degree()) return AlgNum(field_, Rational(0));
  return c_[i];
}

bool UPolyK::is_rational() const {
  for (const auto& c : c_)
    if (!c.is_rational()) return false;
  return true;
}

UPolyQ UPolyK::to_rational() const {
  std::vector<Rational> r;
  for (const auto& c : c_) {
    if (!c.is_rational()) throw std::invalid_argument("polynomial has irrational coefficients");
    r.push_back(c.rational());
  }
  return UPolyQ(std::move(r));
}

UPolyK UPolyK::operator-() const {
  UPolyK r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPolyK& UPolyK::operator+=(const UPolyK& o) {
  field_ = common_field(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), AlgNum(field_, Rational(0)));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  for (auto& c : c_) c = c.in_field(field_);
  trim();
  return *this;
}

UPolyK& UPolyK::operator-=(const UPolyK& o) {
  field_ = common_field(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), AlgNum(field_, Rational(0)));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  for (auto& c : c_) c = c.in_field(field_);
  trim();
  return *this;
}

UPolyK& UPolyK::operator*=(const AlgNum& s) {
  field_ = common_field(field_, s.field());
  for (auto& c : c_) c = (c * s).in_field(field_);
  trim();
  return *this;
}

UPolyK operator*(const UPolyK& a, const UPolyK& b) {
  FieldPtr f = common_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return UPolyK(f);
  std::vector<AlgNum> r(a.c_.size() + b.c_.size() - 1, AlgNum(f, Rational(0)));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPolyK(f, std::move(r));
}

bool operator==(const UPolyK& a, const UPolyK& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

UPolyK UPolyK::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

UPolyK UPolyK::derivative() const {
  std::vector<AlgNum> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * AlgNum(static_cast<long>(i)));
  return UPolyK(field_, std::move(r));
}

AlgNum UPolyK::eval(const AlgNum& x) const {
  AlgNum r(common_field(field_, x.field()), Rational(0));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UPolyK UPolyK::shift(const AlgNum& s) const {
  // Horner with (x + s)
  FieldPtr f = common_field(field_, s.field());
  UPolyK lin(f, {s, AlgNum(f, Rational(1))});
  UPolyK r(f);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * lin + UPolyK(f, {*it});
  return r;
}

std::string UPolyK::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].to_string() << ")";
    if (i > 0) os << "*" << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UPolyK, UPolyK> divmod(const UPolyK& a, const UPolyK& b) {
  if (b.is_zero()) throw DivisionByZero();
  FieldPtr f = common_field(a.field(), b.field());
  std::vector<AlgNum> r = a.coeffs();
  for (auto& c : r) c = c.in_field(f);
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UPolyK(f), UPolyK(f, r)};
  std::vector<AlgNum> q(da - db + 1, AlgNum(f, Rational(0)));
  AlgNum inv = b.lead().inverse();
  for (int i = da; i >= db; --i) {
    if (r[i].is_zero()) continue;
    AlgNum c = r[i] * inv;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {UPolyK(f, std::move(q)), UPolyK(f, std::move(r))};
}

UPolyK operator%(const UPolyK& a, const UPolyK& b) { return divmod(a, b).second; }

UPolyK gcd(const UPolyK& a, const UPolyK& b) {
  UPolyK x = a, y = b;
  while (!y.is_zero()) {
    UPolyK r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

bool is_squarefree(const UPolyK& p) { return gcd(p, p.derivative()).degree() == 0; }

UPolyK squarefree_part(const UPolyK& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<std::pair<UPolyK, int>> squarefree_decomposition(const UPolyK& p) {
  std::vector<std::pair<UPolyK, int>> out;
  if (p.degree() <= 0) return out;
  UPolyK a = p.monic();
  UPolyK d = a.derivative();
  UPolyK g = gcd(a, d);
  UPolyK w = divmod(a, g).first;
  UPolyK y = divmod(d, g).first;
  int k = 1;
  for (;;) {
    UPolyK z = y - w.derivative();
    if (z.is_zero()) {
      if (w.degree() > 0) out.emplace_back(w.monic(), k);
      break;
    }
    UPolyK h = gcd(w, z);
    if (h.degree() > 0) out.emplace_back(h, k);
    w = divmod(w, h).first;
    y = divmod(z, h).first;
    ++k;
    if (w.degree() == 0) break;
  }
  return out;
}

}  // namespace g29
