#include "g29/multipoly/poly.hpp"

#include "g29/exactfield/expr_parser.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace g29 {

RingPtr Ring::make(std::vector<std::string> vars, FieldPtr field) {
  if (vars.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("at most 8 variables are supported");
  auto r = std::make_shared<Ring>();
  r->vars = std::move(vars);
  r->field = std::move(field);
  return r;
}

int Ring::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[i] == name) return i;
  return -1;
}

namespace {

const MonomialOrder kStorage = MonomialOrder::grevlex();

void sort_terms(std::vector<Term>& t, int n) {
  std::sort(t.begin(), t.end(), [n](const Term& a, const Term& b) { return kStorage.compare(a.m, b.m, n) > 0; });
}

}  // namespace

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const int n = ring_->nvars();
  sort_terms(terms, n);
  for (auto& t : terms) {
    AlgNum c = t.c.in_field(ring_->field);
    if (!terms_.empty() && terms_.back().m == t.m) {
      terms_.back().c += c;
      if (terms_.back().c.is_zero()) terms_.pop_back();
    } else if (!c.is_zero()) {
      terms_.push_back(Term{t.m, std::move(c)});
    }
  }
}

Poly Poly::constant(const RingPtr& ring, const AlgNum& c) {
  return Poly(ring, {Term{Monomial{}, c}});
}

Poly Poly::variable(const RingPtr& ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw std::out_of_range("variable index out of range");
  return Poly(ring, {Term{Monomial::var(i), AlgNum(ring->field, Rational(1))}});
}

Poly Poly::variable(const RingPtr& ring, const std::string& name) {
  int i = ring->index_of(name);
  if (i < 0) throw std::invalid_argument("unknown variable '" + name + "'");
  return variable(ring, i);
}

Poly Poly::monomial(const RingPtr& ring, const Monomial& m, const AlgNum& c) {
  return Poly(ring, {Term{m, c}});
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

int Poly::degree_in(int var) const {
  int d = is_zero() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.m[var]);
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.m.degree() != terms_[0].m.degree()) return false;
  return true;
}

AlgNum Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.m == m) return t.c;
  return AlgNum(ring_->field, Rational(0));
}

Poly Poly::homogeneous_part(int d) const {
  Poly r(ring_);
  for (const auto& t : terms_)
    if (t.m.degree() == d) r.terms_.push_back(t);
  return r;
}

const Term& Poly::leading(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  if (order == kStorage) return terms_[0];
  const int n = ring_->nvars();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (order.compare(terms_[i].m, terms_[best].m, n) > 0) best = i;
  return terms_[best];
}

void Poly::check_ring(const Poly& o) const {
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) throw RingMismatch();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract, int n) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : kStorage.compare(a[i].m, b[j].m, n);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(subtract ? Term{b[j].m, -b[j].c} : b[j]);
      ++j;
    } else {
      AlgNum s = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!s.is_zero()) r.push_back(Term{a[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  terms_ = merge(terms_, o.terms_, false, ring_->nvars());
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  terms_ = merge(terms_, o.terms_, true, ring_->nvars());
  return *this;
}

Poly& Poly::operator*=(const AlgNum& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  AlgNum v = s.in_field(ring_->field);
  for (auto& t : terms_) t.c *= v;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<Term> acc;
  index.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Monomial m = s.m * t.m;
      auto [it, fresh] = index.emplace(m.key(), acc.size());
      if (fresh)
        acc.push_back(Term{m, s.c * t.c});
      else
        acc[it->second].c += s.c * t.c;
    }
  Poly r(a.ring_);
  std::vector<Term> kept;
  kept.reserve(acc.size());
  for (auto& t : acc)
    if (!t.c.is_zero()) kept.push_back(std::move(t));
  sort_terms(kept, a.ring_->nvars());
  r.terms_ = std::move(kept);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  a.check_ring(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(ring_, AlgNum(1));
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (!t.m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars[i];
      if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
    }
    std::string c = t.c.to_string();
    bool neg = c[0] == '-';
    if (neg) c = (-t.c).to_string();
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (mono.empty()) {
      os << c;
    } else if (c == "1") {
      os << mono;
    } else {
      os << c << "*" << mono;
    }
  }
  return os.str();
}

namespace {

struct PolyPolicy {
  RingPtr ring;
  Poly number(const Integer& v) { return Poly::constant(ring, AlgNum(ring->field, Rational(v))); }
  bool is_symbol(const std::string& s) {
    return ring->index_of(s) >= 0 || (!ring->field->is_rationals() && s == ring->field->symbol());
  }
  Poly symbol(const std::string& s) {
    int i = ring->index_of(s);
    if (i >= 0) return Poly::variable(ring, i);
    return Poly::constant(ring, AlgNum::generator(ring->field));
  }
  Poly divide(const Poly& a, const Poly& b) {
    if (!b.is_constant()) throw ParseError("division by a non-constant polynomial");
    if (b.is_zero()) throw DivisionByZero();
    return a * b.terms()[0].c.inverse();
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
  PolyPolicy policy{ring};
  detail::ExprParser<Poly, PolyPolicy> parser(text, policy);
  return parser.parse();
}

}  // namespace g29
