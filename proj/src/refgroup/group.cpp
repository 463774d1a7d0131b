#include "g29/refgroup/group.hpp"

#include "g29/exactfield/linalg.hpp"
#include "g29/multipoly/ops.hpp"

#include <deque>

namespace g29 {

Matrix4 Matrix4::identity(const FieldPtr& f) { return scalar(AlgNum(f, Rational(1))); }

Matrix4 Matrix4::scalar(const AlgNum& c) {
  Matrix4 m;
  for (auto& e : m.a) e = AlgNum(c.field(), Rational(0));
  for (int i = 0; i < 4; ++i) m(i, i) = c;
  return m;
}

Matrix4 operator*(const Matrix4& x, const Matrix4& y) {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      AlgNum s = x(i, 0) * y(0, j);
      for (int k = 1; k < 4; ++k)
        if (!x(i, k).is_zero() && !y(k, j).is_zero()) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

std::vector<AlgNum> Matrix4::apply(const std::vector<AlgNum>& v) const {
  std::vector<AlgNum> r;
  for (int i = 0; i < 4; ++i) {
    AlgNum s = (*this)(i, 0) * v[0];
    for (int k = 1; k < 4; ++k)
      if (!(*this)(i, k).is_zero()) s += (*this)(i, k) * v[k];
    r.push_back(s);
  }
  return r;
}

Matrix4 Matrix4::mapped(const FieldEmbedding& emb) const {
  Matrix4 r;
  for (int i = 0; i < 16; ++i) r.a[i] = emb.apply(a[i]);
  return r;
}

Matrix4 Matrix4::conjugate() const {
  Matrix4 r = *this;
  for (auto& e : r.a) {
    if (e.field()->degree() != 2 || e.field()->minimal_polynomial() != UPolyQ{1, 0, 1})
      throw std::invalid_argument("conjugation is defined here for Q(i) entries only");
    e = AlgNum(e.field(), std::vector<Rational>{e.coeffs()[0], -e.coeffs()[1]});
  }
  return r;
}

int Matrix4::rank_minus_identity() const {
  linalg::Matrix<AlgNum> m(4, std::vector<AlgNum>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = (*this)(i, j) - AlgNum(i == j ? 1 : 0);
  return linalg::rank(m);
}

std::size_t Matrix4::hash() const {
  std::size_t h = 0;
  for (const auto& e : a) h = h * 1000003u ^ e.hash();
  return h;
}

std::vector<std::string> Matrix4::serialize() const {
  std::vector<std::string> out;
  for (const auto& e : a) out.push_back(e.to_string());
  return out;
}

Group Group::closure(std::vector<Matrix4> generators, std::size_t cap) {
  Group g;
  if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
  g.field_ = generators[0].a[0].field();
  for (const auto& m : generators)
    for (const auto& e : m.a) g.field_ = common_field(g.field_, e.field());
  for (auto& m : generators)
    for (auto& e : m.a) e = e.in_field(g.field_);
  g.gens_ = generators;
  Matrix4 id = Matrix4::identity(g.field_);
  g.elements_.push_back(id);
  g.index_.emplace(id, 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : g.gens_) {
      Matrix4 p = g.elements_[head] * s;
      if (g.index_.count(p)) continue;
      if (g.elements_.size() >= cap)
        throw ClosureCapExceeded("group closure exceeded " + std::to_string(cap) + " elements");
      g.index_.emplace(p, g.elements_.size());
      g.elements_.push_back(std::move(p));
    }
  }
  return g;
}

Group Group::from_elements(std::vector<Matrix4> generators, std::vector<Matrix4> elements) {
  Group g;
  g.gens_ = std::move(generators);
  g.elements_ = std::move(elements);
  g.field_ = g.elements_.empty() ? NumberField::rationals() : g.elements_[0].a[0].field();
  for (std::size_t i = 0; i < g.elements_.size(); ++i) g.index_.emplace(g.elements_[i], i);
  return g;
}

FieldPtr gaussian_field() {
  static const FieldPtr f = NumberField::create(UPolyQ{1, 0, 1}, "i");
  return f;
}

std::vector<Matrix4> g29_generators() {
  FieldPtr f = gaussian_field();
  AlgNum zero(f, Rational(0)), one(f, Rational(1)), i = AlgNum::generator(f);
  auto perm = [&](int a, int b) {
    Matrix4 m = Matrix4::identity(f);
    m(a, a) = zero;
    m(b, b) = zero;
    m(a, b) = one;
    m(b, a) = one;
    return m;
  };
  Matrix4 s3 = Matrix4::identity(f);
  s3(0, 0) = zero;
  s3(1, 1) = zero;
  s3(0, 1) = -i;
  s3(1, 0) = i;
  Matrix4 s4;
  AlgNum half(f, make_rational(1, 2));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s4(r, c) = r == c ? half : -half;
  return {perm(0, 1), perm(1, 2), s3, s4};
}

const Group& g29() {
  static const Group g = Group::closure(g29_generators());
  return g;
}

Matrix4 invariant_frame() {
  FieldPtr f = gaussian_field();
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  Matrix4 h;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) h(r, c) = AlgNum(f, make_rational(sign[r][c], 2));
  return h;
}

std::vector<Matrix4> g29_generators_invariant_frame() {
  Matrix4 h = invariant_frame();
  std::vector<Matrix4> out;
  for (const auto& s : g29_generators()) out.push_back(h * s * h);
  return out;
}

const Group& g29_invariant_frame() {
  static const Group g = Group::closure(g29_generators_invariant_frame());
  return g;
}

Group center(const Group& g) {
  std::vector<Matrix4> z;
  for (const auto& e : g.elements()) {
    bool central = true;
    for (const auto& s : g.generators())
      if (e * s != s * e) {
        central = false;
        break;
      }
    if (central) z.push_back(e);
  }
  return Group::from_elements(z, z);
}

std::vector<Matrix4> reflections(const Group& g) {
  std::vector<Matrix4> out;
  for (const auto& e : g.elements())
    if (e.rank_minus_identity() == 1) out.push_back(e);
  return out;
}

std::vector<std::array<AlgNum, 4>> reflecting_hyperplanes(const Group& g) {
  std::vector<std::array<AlgNum, 4>> out;
  for (const auto& r : reflections(g)) {
    // rows of r - I are proportional; any nonzero row is the fixed hyperplane's form
    for (int i = 0; i < 4; ++i) {
      std::array<AlgNum, 4> row;
      for (int j = 0; j < 4; ++j) row[j] = r(i, j) - AlgNum(i == j ? 1 : 0);
      int lead = 0;
      while (lead < 4 && row[lead].is_zero()) ++lead;
      if (lead == 4) continue;
      AlgNum inv = row[lead].inverse();
      for (auto& e : row) e *= inv;
      bool seen = false;
      for (const auto& h : out)
        if (h == row) seen = true;
      if (!seen) out.push_back(row);
      break;
    }
  }
  return out;
}

Poly act(const Matrix4& g, const Poly& f) {
  FieldPtr k = common_field(f.ring()->field, g.a[0].field());
  RingPtr target = f.ring()->field == k ? f.ring() : f.ring()->with_field(k);
  std::map<int, Poly> images;
  for (int i = 0; i < 4; ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < 4; ++j)
      if (!g(i, j).is_zero()) terms.push_back(Term{Monomial::var(j), g(i, j)});
    images.emplace(i, Poly(target, std::move(terms)));
  }
  return substitute(f, images, target);
}

bool is_invariant(const Poly& f, const Group& g) {
  for (const auto& s : g.generators()) {
    Poly h = act(s, f);
    if (h != change_ring(f, h.ring())) return false;
  }
  return true;
}

}  // namespace g29
