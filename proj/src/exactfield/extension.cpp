#include "g29/exactfield/extension.hpp"

#include "g29/exactfield/factor.hpp"
#include "g29/exactfield/linalg.hpp"

#include <algorithm>

namespace g29 {

FieldEmbedding FieldEmbedding::identity(const FieldPtr& k) {
  return FieldEmbedding{k, k, AlgNum::generator(k)};
}

AlgNum FieldEmbedding::apply(const AlgNum& a) const {
  if (a.field()->is_rationals() || a.is_rational()) return AlgNum(to, a.coeffs()[0]);
  if (!a.field()->same_as(*from)) throw FieldMismatch();
  const auto& c = a.coeffs();
  AlgNum r(to, Rational(0));
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * image + AlgNum(to, *it);
  return r;
}

UPolyK FieldEmbedding::apply(const UPolyK& p) const {
  std::vector<AlgNum> c;
  for (const auto& v : p.coeffs()) c.push_back(apply(v));
  return UPolyK(to, std::move(c));
}

FieldEmbedding FieldEmbedding::then(const FieldEmbedding& next) const {
  return FieldEmbedding{from, next.to, next.apply(image)};
}

namespace {

// Q-algebra A = K[x]/(f), f monic over K of degree d, flattened to Q^(n d).
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(const UPolyK& f) : f_(f), k_(f.field()), n_(k_->degree()), d_(f.degree()) {}

  int dim() const { return n_ * d_; }

  // x * e mod f
  std::vector<AlgNum> times_x(const std::vector<AlgNum>& e) const {
    std::vector<AlgNum> r(d_, AlgNum(k_, Rational(0)));
    AlgNum top = e[d_ - 1];
    for (int j = d_ - 1; j >= 1; --j) r[j] = e[j - 1];
    if (!top.is_zero())
      for (int j = 0; j < d_; ++j) r[j] -= top * f_.coeff(j);
    return r;
  }

  std::vector<AlgNum> times_theta(const std::vector<AlgNum>& e, const AlgNum& shift) const {
    std::vector<AlgNum> r = times_x(e);
    for (int j = 0; j < d_; ++j) r[j] += shift * e[j];
    return r;
  }

  std::vector<Rational> flatten(const std::vector<AlgNum>& e) const {
    std::vector<Rational> v(dim());
    for (int j = 0; j < d_; ++j) {
      const AlgNum ej = e[j].in_field(k_);
      const auto& c = ej.coeffs();
      for (int i = 0; i < n_; ++i) v[j * n_ + i] = c[i];
    }
    return v;
  }

  std::vector<AlgNum> one() const {
    std::vector<AlgNum> e(d_, AlgNum(k_, Rational(0)));
    e[0] = AlgNum(k_, Rational(1));
    return e;
  }

  // Krylov sequence of theta = x + shift: returns (minpoly, powers) where
  // powers are the flattened theta^k for k < deg(minpoly).
  std::pair<UPolyQ, linalg::Matrix<Rational>> krylov(const AlgNum& shift) const {
    linalg::DependencyFinder<Rational> finder(dim());
    linalg::Matrix<Rational> powers;
    std::vector<AlgNum> e = one();
    for (int k = 0; k <= dim(); ++k) {
      auto v = flatten(e);
      if (auto rel = finder.add(v)) return {UPolyQ(*rel), powers};
      powers.push_back(std::move(v));
      e = times_theta(e, shift);
    }
    throw std::logic_error("Krylov sequence did not terminate");
  }

  const FieldPtr& base() const { return k_; }
  int n() const { return n_; }
  int d() const { return d_; }

 private:
  UPolyK f_;
  FieldPtr k_;
  int n_, d_;
};

long shift_value(int attempt) {
  // 0, 1, -1, 2, -2, ...
  if (attempt == 0) return 0;
  return attempt % 2 ? (attempt + 1) / 2 : -(attempt / 2);
}

std::vector<UPolyK> trager_squarefree(const UPolyK& f) {
  const FieldPtr& k = f.field();
  QuotientAlgebra alg(f);
  const AlgNum a = AlgNum::generator(k);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const long s = shift_value(attempt);
    AlgNum shift = a * AlgNum(s);
    auto [norm, powers] = alg.krylov(shift);
    if (norm.degree() != alg.dim()) continue;
    auto rational_factors = factor_rational(norm);
    if (rational_factors.size() == 1) return {f};
    // g(x) = f(x - s a) has roots theta = beta + s a
    UPolyK g = f.shift(-shift);
    std::vector<UPolyK> out;
    for (const auto& [m, e] : rational_factors) {
      UPolyK h = gcd(g, UPolyK::from_rational(k, m));
      out.push_back(h.shift(shift).monic());
    }
    return out;
  }
  throw std::runtime_error("norm method found no squarefree shift");
}

bool factor_less(const UPolyK& a, const UPolyK& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.to_string() < b.to_string();
}

}  // namespace

std::vector<std::pair<UPolyK, int>> factor_over_field(const UPolyK& p) {
  if (p.degree() < 1) return {};
  const FieldPtr& k = p.field();
  std::vector<std::pair<UPolyK, int>> out;
  if (k->is_rationals()) {
    for (auto& [f, e] : factor_rational(p.to_rational())) out.emplace_back(UPolyK::from_rational(k, f), e);
    return out;
  }
  for (auto& [part, e] : squarefree_decomposition(p)) {
    if (part.degree() == 1) {
      out.emplace_back(part, e);
      continue;
    }
    for (auto& f : trager_squarefree(part)) out.emplace_back(f, e);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return factor_less(x.first, y.first); });
  return out;
}

bool is_irreducible_over_field(const UPolyK& p) {
  if (p.degree() < 1) return false;
  auto fs = factor_over_field(p);
  return fs.size() == 1 && fs[0].second == 1;
}

Adjunction adjoin_root(const UPolyK& p_in, const std::string& symbol) {
  if (p_in.degree() < 1) throw std::invalid_argument("cannot adjoin a root of a constant");
  if (!is_squarefree(p_in))
    throw std::invalid_argument("polynomial " + p_in.to_string() + " is not squarefree");
  const UPolyK p = p_in.monic();
  const FieldPtr& k = p.field();
  if (p.degree() == 1)
    return Adjunction{k, FieldEmbedding::identity(k), -p.coeff(0), true};
  if (k->is_rationals()) {
    FieldPtr l = NumberField::create(p.to_rational(), symbol);
    return Adjunction{l, FieldEmbedding{k, l, AlgNum(l, Rational(0))}, AlgNum::generator(l), true};
  }

  QuotientAlgebra alg(p);
  const AlgNum a = AlgNum::generator(k);
  for (int attempt = 1; attempt < 64; ++attempt) {
    const long s = shift_value(attempt);
    AlgNum shift = a * AlgNum(s);
    auto [m, powers] = alg.krylov(shift);
    if (m.degree() != alg.dim()) continue;
    if (!is_irreducible_rational(m))
      throw std::invalid_argument("polynomial " + p.to_string() + " is reducible over the base field");
    FieldPtr l = NumberField::create_trusted(m, symbol);
    // coordinates of a and x in the basis theta^k
    const int dim = alg.dim();
    linalg::Matrix<Rational> mat(dim, std::vector<Rational>(dim));
    for (int i = 0; i < dim; ++i)
      for (int kk = 0; kk < dim; ++kk) mat[i][kk] = powers[kk][i];
    std::vector<AlgNum> a_elem(alg.d(), AlgNum(k, Rational(0)));
    a_elem[0] = a;
    std::vector<AlgNum> x_elem(alg.d(), AlgNum(k, Rational(0)));
    x_elem[1] = AlgNum(k, Rational(1));
    auto ca = linalg::solve(mat, alg.flatten(a_elem));
    auto cx = linalg::solve(mat, alg.flatten(x_elem));
    if (!ca || !cx) throw std::logic_error("primitive element basis is singular");
    return Adjunction{l, FieldEmbedding{k, l, AlgNum(l, *ca)}, AlgNum(l, *cx), true};
  }
  throw std::runtime_error("no primitive element found");
}

std::optional<FieldEmbedding> rebase_field(const AlgNum& gamma, const std::string& symbol) {
  const FieldPtr& l = gamma.field();
  const int n = l->degree();
  UPolyQ m = minimal_polynomial_of(gamma);
  if (m.degree() != n) return std::nullopt;
  FieldPtr l2 = NumberField::create_trusted(m, symbol);
  if (n == 1) return FieldEmbedding{l, l2, AlgNum(l2, AlgNum::generator(l).rational())};
  linalg::Matrix<Rational> mat(n, std::vector<Rational>(n));
  AlgNum pw(l, Rational(1));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) mat[i][k] = pw.coeffs()[i];
    pw *= gamma;
  }
  auto c = linalg::solve(mat, AlgNum::generator(l).coeffs());
  if (!c) return std::nullopt;
  return FieldEmbedding{l, l2, AlgNum(l2, *c)};
}

}  // namespace g29

namespace g29 {

Compositum compositum(const FieldPtr& a, const FieldPtr& b, const std::string& symbol) {
  if (a->same_as(*b) || b->is_rationals())
    return {a, FieldEmbedding::identity(a), FieldEmbedding{b, a, b->is_rationals() ? AlgNum(a, Rational(0)) : AlgNum::generator(a)}};
  if (a->is_rationals()) return {b, FieldEmbedding{a, b, AlgNum(b, Rational(0))}, FieldEmbedding::identity(b)};
  auto factors = factor_over_field(UPolyK::from_rational(a, b->minimal_polynomial()));
  const UPolyK* best = &factors.front().first;
  for (auto& [q, m] : factors)
    if (q.degree() < best->degree()) best = &q;
  if (best->degree() == 1) return {a, FieldEmbedding::identity(a), FieldEmbedding{b, a, -best->coeff(0)}};
  auto adj = adjoin_root(*best, symbol);
  return {adj.field, adj.embedding, FieldEmbedding{b, adj.field, adj.root}};
}

}  // namespace g29
