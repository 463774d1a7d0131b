#include "g29/singlocus/witness.hpp"

#include "g29/groebner/solve.hpp"
#include "g29/multipoly/ops.hpp"

#include <stdexcept>

namespace g29 {

Slice Slice::coordinate(int k) {
  Slice s;
  s.a[k] = Rational(1);
  return s;
}

int Slice::pivot() const {
  for (int k = 3; k >= 0; --k)
    if (a[k] != Rational(0)) return k;
  throw std::invalid_argument("zero hyperplane");
}

std::array<int, 3> Slice::free_coordinates() const {
  std::array<int, 3> f{};
  int n = 0, p = pivot();
  for (int k = 0; k < 4; ++k)
    if (k != p) f[n++] = k;
  return f;
}

bool Slice::contains(const ProjectivePoint& p) const {
  AlgNum s(p.field(), Rational(0));
  for (int k = 0; k < 4; ++k) s += p.x[k] * AlgNum(a[k]);
  return s.is_zero();
}

std::string Slice::to_string() const {
  static const char* names[] = {"x", "y", "z", "t"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (a[k] == Rational(0)) continue;
    std::string c = g29::to_string(a[k]);
    if (!out.empty() && c[0] != '-') out += "+";
    out += (c == "1" ? "" : c == "-1" ? "-" : c + "*") + names[k];
  }
  return out + " = 0";
}

namespace {

UPolyK to_upoly(const Poly& p, int v) {
  const FieldPtr& k = p.ring()->field;
  int d = std::max(0, p.degree_in(v));
  std::vector<AlgNum> c(d + 1, AlgNum(k, Rational(0)));
  for (auto& t : p.terms()) {
    for (int u = 0; u < p.ring()->nvars(); ++u)
      if (u != v && t.m.e[u]) throw std::logic_error("polynomial is not univariate");
    c[t.m.e[v]] += t.c;
  }
  return UPolyK(k, c);
}

// x,y,z,t as polynomials in slice coordinates u0, u1, u2 (images in `r`)
std::map<int, Poly> restriction(const Slice& s, const std::array<Poly, 3>& u, const RingPtr& r) {
  std::map<int, Poly> sub;
  auto f = s.free_coordinates();
  int p = s.pivot();
  Poly solved(r);
  for (int j = 0; j < 3; ++j) {
    sub.emplace(f[j], u[j]);
    solved -= u[j] * AlgNum(s.a[f[j]] / s.a[p]);
  }
  sub.emplace(p, solved);
  return sub;
}

// full coordinates of the slice point u
ProjectivePoint lift(const Slice& s, const std::array<AlgNum, 3>& u) {
  auto f = s.free_coordinates();
  int p = s.pivot();
  std::vector<AlgNum> x(4, AlgNum(u[0].field(), Rational(0)));
  for (int j = 0; j < 3; ++j) {
    x[f[j]] = u[j];
    x[p] -= u[j] * AlgNum(s.a[f[j]] / s.a[p]);
  }
  return ProjectivePoint::normalized(std::move(x));
}

// u coordinates of a point on the slice
std::array<AlgNum, 3> slice_coordinates(const Slice& s, const ProjectivePoint& p) {
  auto f = s.free_coordinates();
  return {p.x[f[0]], p.x[f[1]], p.x[f[2]]};
}

WitnessClass make_class(const Slice& s, int chart, const UPolyK& q) {
  WitnessClass c;
  c.slice = s;
  c.chart = chart;
  c.factor = q;
  auto adj = adjoin_root(q, "a");
  c.field = adj.field;
  c.embedding = adj.embedding;
  AlgNum one(adj.field, Rational(1)), zero(adj.field, Rational(0));
  if (chart == 1)
    c.point = lift(s, {zero, one, adj.root});
  else
    c.point = lift(s, {zero, zero, one});
  return c;
}

}  // namespace

int chart_on_slice(const Slice& s, const ProjectivePoint& p) {
  if (!s.contains(p)) return -1;
  auto u = slice_coordinates(s, p);
  for (int i = 0; i < 3; ++i)
    if (!u[i].is_zero()) return i;
  return -1;
}

std::vector<WitnessClass> witness_points(const SurfaceSpec& s, const Slice& slice, const GBBudget& budget) {
  const FieldPtr& K = s.field;
  auto partials = jacobian_ideal(s.F).generators;
  std::vector<WitnessClass> out;

  // chart u0 = 1 in coordinates (u1, u2). The homogeneous grevlex basis with
  // u0 last dehomogenizes to a grevlex basis of the chart ideal; computing it
  // homogeneously avoids the coefficient swell of the affine run.
  auto rh = Ring::make({"u1", "u2", "u0"}, K);
  auto r12 = Ring::make({"u1", "u2"}, K);
  std::vector<Poly> gens;
  {
    auto sub = restriction(slice, {Poly::variable(rh, 2), Poly::variable(rh, 0), Poly::variable(rh, 1)}, rh);
    std::vector<Poly> hom;
    for (auto& p : partials) hom.push_back(substitute(p, sub, rh));
    Ideal Ih(rh, hom);
    if (Ih.generators.empty()) throw std::domain_error("singular locus contains the slice");
    auto Gh = buchberger(Ih, MonomialOrder::grevlex(), budget);
    std::map<int, Poly> dehom{{0, Poly::variable(r12, 0)}, {1, Poly::variable(r12, 1)},
                              {2, Poly::constant(r12, AlgNum(K, Rational(1)))}};
    for (auto& g : Gh.basis) gens.push_back(substitute(g, dehom, r12));
  }
  auto G12 = minimal_basis(r12, gens, MonomialOrder::grevlex());
  if (!standard_monomials(G12)) throw std::domain_error("singular locus meets the slice in a curve");
  for (auto& sol : solve_bivariate(G12)) {
    WitnessClass c;
    c.slice = slice;
    c.chart = 0;
    c.shift = sol.shift;
    c.factor = sol.factor;
    c.field = sol.field;
    c.embedding = sol.embedding;
    c.point = lift(slice, {AlgNum(sol.field, Rational(1)), sol.point[0], sol.point[1]});
    out.push_back(std::move(c));
  }

  // chart u = [0 : 1 : w]
  auto r1 = Ring::make({"w"}, K);
  auto sub1 = restriction(slice, {Poly(r1), Poly::constant(r1, AlgNum(K, Rational(1))), Poly::variable(r1, 0)}, r1);
  UPolyK g(K);
  for (auto& p : partials) {
    UPolyK u = to_upoly(substitute(p, sub1, r1), 0);
    g = g.is_zero() ? u : (u.is_zero() ? g : gcd(g, u));
  }
  if (g.is_zero()) throw std::domain_error("singular locus contains a line of the slice");
  if (g.degree() > 0)
    for (auto& [q, mult] : factor_over_field(squarefree_part(g))) out.push_back(make_class(slice, 1, q));

  // u = [0 : 0 : 1]
  AlgNum zero(K, Rational(0)), one(K, Rational(1));
  ProjectivePoint e = lift(slice, {zero, zero, one});
  bool all_zero = true;
  for (auto& p : partials) all_zero = all_zero && evaluate(p, e.x).is_zero();
  if (all_zero) out.push_back(make_class(slice, 2, UPolyK(K, std::vector<AlgNum>{zero, one})));
  return out;
}

std::vector<WitnessClass> witness_points_t0(const SurfaceSpec& s, const GBBudget& budget) {
  return witness_points(s, Slice::coordinate(3), budget);
}

bool in_class(const WitnessClass& c, const ProjectivePoint& p, const FieldEmbedding& k_to_m) {
  if (chart_on_slice(c.slice, p) != c.chart) return false;
  auto u = slice_coordinates(c.slice, p);
  switch (c.chart) {
    case 0: {
      // w separates the singular points of this chart, so the factor decides
      AlgNum w = (u[2] + AlgNum(c.shift) * u[1]) / u[0];
      return k_to_m.apply(c.factor).eval(w).is_zero();
    }
    case 1:
      return k_to_m.apply(c.factor).eval(u[2] / u[1]).is_zero();
    default:
      return true;
  }
}

}  // namespace g29
