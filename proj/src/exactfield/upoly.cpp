#include "g29/exactfield/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace g29 {

namespace {
const Rational kZero(0);
}

UPolyQ::UPolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPolyQ::UPolyQ(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

UPolyQ UPolyQ::constant(const Rational& c) { return UPolyQ(std::vector<Rational>{c}); }

UPolyQ UPolyQ::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPolyQ(std::move(v));
}

const Rational& UPolyQ::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : kZero;
}

void UPolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPolyQ UPolyQ::operator-() const {
  UPolyQ r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPolyQ& UPolyQ::operator+=(const UPolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPolyQ& UPolyQ::operator-=(const UPolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPolyQ& UPolyQ::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UPolyQ operator*(const UPolyQ& a, const UPolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPolyQ(std::move(r));
}

UPolyQ UPolyQ::monic() const {
  if (is_zero()) return {};
  UPolyQ r = *this;
  Rational inv = 1 / lead();
  return r *= inv;
}

UPolyQ UPolyQ::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPolyQ(std::move(r));
}

Rational UPolyQ::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPolyQ UPolyQ::compose(const UPolyQ& q) const {
  UPolyQ acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + UPolyQ::constant(*it);
  return acc;
}

std::string UPolyQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    os << (c < 0 ? (first ? "-" : "-") : (first ? "" : "+"));
    if (i == 0 || a != 1) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::pair<UPolyQ, UPolyQ> divmod(const UPolyQ& a, const UPolyQ& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {UPolyQ{}, a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(a.degree() - b.degree() + 1);
  Rational inv = 1 / b.lead();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
  }
  r.resize(db);
  return {UPolyQ(std::move(q)), UPolyQ(std::move(r))};
}

UPolyQ operator%(const UPolyQ& a, const UPolyQ& b) { return divmod(a, b).second; }

UPolyQ gcd(const UPolyQ& a, const UPolyQ& b) {
  UPolyQ x = a, y = b;
  while (!y.is_zero()) {
    UPolyQ r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UPolyQ& a, const UPolyQ& b) {
  UPolyQ r0 = a, r1 = b;
  UPolyQ s0 = UPolyQ::constant(1), s1;
  UPolyQ t0, t1 = UPolyQ::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPolyQ s2 = s0 - q * s1;
    UPolyQ t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_squarefree(const UPolyQ& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

UPolyQ squarefree_part(const UPolyQ& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<std::pair<UPolyQ, int>> squarefree_decomposition(const UPolyQ& p) {
  std::vector<std::pair<UPolyQ, int>> out;
  if (p.degree() <= 0) return out;
  UPolyQ a = p.monic();
  UPolyQ da = a.derivative();
  UPolyQ b = gcd(a, da);
  UPolyQ c = divmod(a, b).first;
  UPolyQ d = divmod(da, b).first - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    UPolyQ e = gcd(c, d);
    if (e.degree() > 0) out.emplace_back(e, i);
    UPolyQ c2 = divmod(c, e).first;
    d = divmod(d, e).first - c2.derivative();
    c = std::move(c2);
    ++i;
  }
  return out;
}

std::vector<Integer> primitive_integer_part(const UPolyQ& p) {
  std::vector<Integer> out;
  if (p.is_zero()) return out;
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
  Integer content = 0;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    content = gcd(content, v);
    out.push_back(v);
  }
  if (p.lead() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

UPolyQ from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> r;
  r.reserve(c.size());
  for (const auto& v : c) r.emplace_back(v);
  return UPolyQ(std::move(r));
}

}  // namespace g29
