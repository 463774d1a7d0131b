#include "g29/multipoly/ops.hpp"

#include <algorithm>
#include <functional>

namespace g29 {

Poly partial_derivative(const Poly& p, int var) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    int e = t.m[var];
    if (e == 0) continue;
    Monomial m = t.m;
    m.e[var] = static_cast<std::uint8_t>(e - 1);
    out.push_back(Term{m, t.c * AlgNum(static_cast<long>(e))});
  }
  return Poly(p.ring(), std::move(out));
}

Poly partial_derivative(const Poly& p, const std::string& var) {
  int i = p.ring()->index_of(var);
  if (i < 0) throw std::invalid_argument("unknown variable '" + var + "'");
  return partial_derivative(p, i);
}

AlgNum evaluate(const Poly& p, const std::vector<AlgNum>& point) {
  const int n = p.ring()->nvars();
  if (static_cast<int>(point.size()) != n) throw std::invalid_argument("point has the wrong number of coordinates");
  FieldPtr f = p.ring()->field;
  for (const auto& c : point) f = common_field(f, c.field());
  std::vector<std::vector<AlgNum>> powers(n);
  for (int i = 0; i < n; ++i) {
    int d = std::max(0, p.degree_in(i));
    powers[i].push_back(AlgNum(f, Rational(1)));
    AlgNum xi = point[i].in_field(f);
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * xi);
  }
  AlgNum sum(f, Rational(0));
  for (const auto& t : p.terms()) {
    AlgNum v = t.c.in_field(f);
    for (int i = 0; i < n && !v.is_zero(); ++i)
      if (t.m[i]) v *= powers[i][t.m[i]];
    sum += v;
  }
  return sum;
}

Poly substitute(const Poly& p, const std::map<int, Poly>& assignments, const RingPtr& target) {
  const int n = p.ring()->nvars();
  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) {
    auto it = assignments.find(i);
    if (it != assignments.end()) {
      if (!it->second.ring()->same_as(*target)) throw RingMismatch();
      images.push_back(it->second);
    } else {
      images.push_back(Poly::variable(target, p.ring()->vars[i]));
    }
  }
  std::vector<std::vector<Poly>> powers(n);
  for (int i = 0; i < n; ++i) {
    powers[i].push_back(Poly::constant(target, AlgNum(1)));
    for (int k = 1; k <= std::max(0, p.degree_in(i)); ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Poly r(target);
  for (const auto& t : p.terms()) {
    Poly term = Poly::constant(target, t.c);
    for (int i = 0; i < n; ++i)
      if (t.m[i]) term = term * powers[i][t.m[i]];
    r += term;
  }
  return r;
}

Poly change_ring(const Poly& p, const RingPtr& target) {
  const int n = p.ring()->nvars();
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) {
    idx[i] = target->index_of(p.ring()->vars[i]);
    if (idx[i] < 0 && p.degree_in(i) > 0)
      throw std::invalid_argument("variable '" + p.ring()->vars[i] + "' missing in target ring");
  }
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Monomial m;
    for (int i = 0; i < n; ++i)
      if (t.m[i]) m.e[idx[i]] = t.m.e[i];
    out.push_back(Term{m, t.c.in_field(target->field)});
  }
  return Poly(target, std::move(out));
}

Poly map_coefficients(const Poly& p, const FieldEmbedding& emb, const RingPtr& target) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) out.push_back(Term{t.m, emb.apply(t.c)});
  return Poly(target, std::move(out));
}

Poly hessian_det(const Poly& p) {
  const int n = p.ring()->nvars();
  std::vector<std::vector<Poly>> h(n);
  for (int i = 0; i < n; ++i) {
    Poly di = partial_derivative(p, i);
    for (int j = 0; j < n; ++j) h[i].push_back(partial_derivative(di, j));
  }
  // Laplace expansion along the first remaining row
  std::function<Poly(int, std::vector<int>&)> det = [&](int row, std::vector<int>& cols) -> Poly {
    if (row == n) return Poly::constant(p.ring(), AlgNum(1));
    Poly acc(p.ring());
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      int c = cols[k];
      if (!h[row][c].is_zero()) {
        cols.erase(cols.begin() + k);
        Poly minor = det(row + 1, cols);
        cols.insert(cols.begin() + k, c);
        Poly term = h[row][c] * minor;
        if (sign > 0)
          acc += term;
        else
          acc -= term;
      }
      sign = -sign;
    }
    return acc;
  };
  std::vector<int> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = i;
  return det(0, cols);
}

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  const RingPtr& ring = a.ring();
  const Term& lb = b.terms()[0];
  AlgNum inv = lb.c.inverse();
  Poly r = a;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& lr = r.terms()[0];
    if (!lb.m.divides(lr.m)) return std::nullopt;
    Term t{lb.m.quotient_of(lr.m), lr.c * inv};
    r -= Poly::monomial(ring, t.m, t.c) * b;
    q.push_back(std::move(t));
  }
  return Poly(ring, std::move(q));
}

Poly divide_exact(const Poly& a, const Poly& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::domain_error("inexact polynomial division");
  return *q;
}

namespace {

Poly normalized(const Poly& p) {
  if (p.is_zero()) return p;
  return p * p.terms()[0].c.inverse();
}

// coefficients of p as a polynomial in variable v
std::vector<Poly> coeffs_in(const Poly& p, int v) {
  std::vector<std::vector<Term>> buckets(std::max(0, p.degree_in(v)) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.m;
    int e = m.e[v];
    m.e[v] = 0;
    buckets[e].push_back(Term{m, t.c});
  }
  std::vector<Poly> out;
  for (auto& b : buckets) out.emplace_back(p.ring(), std::move(b));
  return out;
}

Poly from_coeffs(const std::vector<Poly>& c, int v, const RingPtr& ring) {
  std::vector<Term> out;
  for (std::size_t e = 0; e < c.size(); ++e)
    for (const auto& t : c[e].terms()) {
      Monomial m = t.m;
      m.e[v] = static_cast<std::uint8_t>(e);
      out.push_back(Term{m, t.c});
    }
  return Poly(ring, std::move(out));
}

void trim(std::vector<Poly>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, int v) {
  Poly g(p.ring());
  for (const auto& c : coeffs_in(p, v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalized(c) : gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

std::vector<Poly> prem(std::vector<Poly> a, const std::vector<Poly>& b) {
  const int n = static_cast<int>(b.size()) - 1;
  int e = static_cast<int>(a.size()) - n;
  const Poly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= n && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    Poly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= n; ++j) a[da - n + j] -= la * b[j];
    trim(a);
    --e;
  }
  if (e > 0) {
    Poly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  const RingPtr& ring = a.ring();
  if (a.is_constant() || b.is_constant()) return Poly::constant(ring, AlgNum(1));
  const int n = ring->nvars();
  // a variable present in only one argument cannot occur in the gcd
  for (int v = 0; v < n; ++v) {
    int da = a.degree_in(v), db = b.degree_in(v);
    if (da > 0 && db == 0) return gcd_rec(content_in(a, v), b);
    if (db > 0 && da == 0) return gcd_rec(a, content_in(b, v));
  }
  int v = -1;
  for (int w = 0; w < n; ++w) {
    int d = std::max(a.degree_in(w), b.degree_in(w));
    if (d > 0 && (v < 0 || d < std::max(a.degree_in(v), b.degree_in(v)))) v = w;
  }
  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly c = gcd_rec(ca, cb);
  std::vector<Poly> A = coeffs_in(divide_exact(a, ca), v);
  std::vector<Poly> B = coeffs_in(divide_exact(b, cb), v);
  if (A.size() < B.size()) std::swap(A, B);
  Poly g = Poly::constant(ring, AlgNum(1)), h = g;
  for (;;) {
    const int d = static_cast<int>(A.size()) - static_cast<int>(B.size());
    std::vector<Poly> R = prem(A, B);
    if (R.empty()) break;
    if (R.size() == 1) return c;
    A = B;
    Poly div = g * h.pow(static_cast<unsigned>(d));
    for (auto& r : R) r = divide_exact(r, div);
    B = std::move(R);
    g = A.back();
    if (d == 1)
      h = g;
    else if (d > 1)
      h = divide_exact(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
  }
  Poly pb = from_coeffs(B, v, ring);
  pb = divide_exact(pb, content_in(pb, v));
  return normalized(c * pb);
}

}  // namespace

Poly gcd_poly(const Poly& a, const Poly& b) {
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch();
  return gcd_rec(a, b);
}

UPolyK restrict_to_line(const Poly& p, const std::vector<AlgNum>& a, const std::vector<AlgNum>& b) {
  const int n = p.ring()->nvars();
  FieldPtr f = p.ring()->field;
  for (const auto& c : a) f = common_field(f, c.field());
  for (const auto& c : b) f = common_field(f, c.field());
  std::vector<std::vector<UPolyK>> powers(n);
  for (int i = 0; i < n; ++i) {
    UPolyK lin(f, {a[i], b[i]});
    powers[i].push_back(UPolyK(f, {AlgNum(f, Rational(1))}));
    for (int k = 1; k <= std::max(0, p.degree_in(i)); ++k) powers[i].push_back(powers[i].back() * lin);
  }
  UPolyK r(f);
  for (const auto& t : p.terms()) {
    UPolyK term(f, {t.c});
    for (int i = 0; i < n; ++i)
      if (t.m[i]) term = term * powers[i][t.m[i]];
    r += term;
  }
  return r;
}

bool is_squarefree_by_gcd(const Poly& p) {
  for (int v = 0; v < p.ring()->nvars(); ++v) {
    if (p.degree_in(v) <= 0) continue;
    if (!gcd_poly(p, partial_derivative(p, v)).is_constant()) return false;
  }
  return true;
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree test of the zero polynomial");
  if (p.is_constant()) return true;
  // Restriction certificate: if p(a + s b) has full degree and is squarefree,
  // any square factor of p would restrict to a square factor of positive degree.
  const int n = p.ring()->nvars();
  const Poly top = p.homogeneous_part(p.total_degree());
  std::uint64_t seed = 0x2545F4914F6CDD1DULL;
  auto next = [&seed]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return static_cast<long>(seed % 23) - 11;
  };
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<AlgNum> a, b;
    for (int i = 0; i < n; ++i) {
      a.emplace_back(next());
      b.emplace_back(next());
    }
    if (evaluate(top, b).is_zero()) continue;
    UPolyK r = restrict_to_line(p, a, b);
    if (r.degree() == p.total_degree() && g29::is_squarefree(r)) return true;
  }
  return is_squarefree_by_gcd(p);
}

}  // namespace g29
