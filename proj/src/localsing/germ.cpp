#include "g29/exactfield/linalg.hpp"
#include "g29/groebner/groebner.hpp"
#include "g29/localsing/local.hpp"
#include "g29/multipoly/ops.hpp"

namespace g29 {

namespace {

AlgNum zero_in(const FieldPtr& f) { return AlgNum(f, Rational(0)); }

std::vector<std::vector<AlgNum>> hessian_at_origin(const Poly& g) {
  const int n = g.ring()->nvars();
  std::vector<std::vector<AlgNum>> h(n, std::vector<AlgNum>(n, zero_in(g.ring()->field)));
  for (auto& t : g.terms()) {
    if (t.m.degree() != 2) continue;
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v) {
      if (t.m.e[v] == 2) i = j = v;
      if (t.m.e[v] == 1) (i < 0 ? i : j) = v;
    }
    if (i == j) {
      h[i][i] = t.c * AlgNum(2);
    } else {
      h[i][j] = t.c;
      h[j][i] = t.c;
    }
  }
  return h;
}

// basis of the kernel of a square matrix
std::vector<std::vector<AlgNum>> kernel(std::vector<std::vector<AlgNum>> m) {
  const std::size_t n = m.size();
  linalg::row_reduce(m);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (!m[r][c].is_zero()) {
        pivot_col.push_back(static_cast<int>(c));
        is_pivot[c] = true;
        break;
      }
  }
  std::vector<std::vector<AlgNum>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<AlgNum> v(n, AlgNum(0));
    v[free] = AlgNum(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

LocalGerm germ_from_poly(Poly g) {
  if (!g.coefficient(Monomial()).is_zero()) throw std::invalid_argument("germ must vanish at the origin");
  return LocalGerm{std::move(g), -1};
}

LocalGerm make_germ(const Poly& F, const ProjectivePoint& p) {
  const int n = F.ring()->nvars();
  if (static_cast<int>(p.x.size()) != n) throw std::invalid_argument("point dimension does not match the ring");
  FieldPtr field = p.field();
  for (auto& c : p.x) field = common_field(field, c.field());
  field = common_field(field, F.ring()->field);
  Poly Fk = F.ring()->field->same_as(*field) ? F : change_ring(F, F.ring()->with_field(field));
  if (!evaluate(Fk, p.x).is_zero()) throw NotOnSurface();
  int chart = 0;
  while (p.x[chart].is_zero()) ++chart;
  AlgNum scale = p.x[chart].inverse();
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v)
    if (v != chart) names.push_back(F.ring()->vars[v]);
  auto target = Ring::make(names, field);
  std::map<int, Poly> sub;
  int k = 0;
  for (int v = 0; v < n; ++v) {
    if (v == chart) {
      sub.emplace(v, Poly::constant(target, AlgNum(field, Rational(1))));
    } else {
      sub.emplace(v, Poly::variable(target, k++) + Poly::constant(target, p.x[v] * scale));
    }
  }
  Poly g = substitute(Fk, sub, target);
  return LocalGerm{std::move(g), chart};
}

int multiplicity(const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("multiplicity of the zero germ");
  int m = g.total_degree();
  for (auto& t : g.terms()) m = std::min(m, t.m.degree());
  return m;
}

int multiplicity(const LocalGerm& g) { return multiplicity(g.g); }

int hessian_corank(const LocalGerm& g) {
  auto h = hessian_at_origin(g.g);
  return g.g.ring()->nvars() - linalg::rank(h);
}

int milnor_number(const LocalGerm& g, int degree_cap) {
  std::vector<Poly> gens;
  for (int v = 0; v < g.g.ring()->nvars(); ++v) gens.push_back(partial_derivative(g.g, v));
  return local_length(gens, degree_cap).value;
}

int tjurina_number(const LocalGerm& g, int degree_cap) {
  std::vector<Poly> gens{g.g};
  for (int v = 0; v < g.g.ring()->nvars(); ++v) gens.push_back(partial_derivative(g.g, v));
  return local_length(gens, degree_cap).value;
}

std::string TypeLabel::to_string() const {
  switch (kind) {
    case Kind::A:
      return "A" + std::to_string(k);
    case Kind::D4:
      return "D4";
    case Kind::T444:
      return "T444";
    case Kind::Unrecognized:
      return "X";
  }
  return "X";
}

TypeLabel TypeLabel::parse(const std::string& s) {
  if (s == "D4") return {Kind::D4, 0};
  if (s == "T444") return {Kind::T444, 0};
  if (s == "X") return {Kind::Unrecognized, 0};
  if (s.size() > 1 && s[0] == 'A') {
    int k = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad type label " + s);
      k = k * 10 + (s[i] - '0');
    }
    if (k >= 1) return {Kind::A, k};
  }
  throw std::invalid_argument("bad type label " + s);
}

bool binary_cubic_nondegenerate(const AlgNum& a, const AlgNum& b, const AlgNum& c, const AlgNum& d) {
  AlgNum disc = b * b * c * c - AlgNum(4) * a * c * c * c - AlgNum(4) * b * b * b * d - AlgNum(27) * a * a * d * d +
                AlgNum(18) * a * b * c * d;
  return !disc.is_zero();
}

bool is_triangle_cubic(const Poly& c) {
  if (c.is_zero() || !c.is_homogeneous() || c.total_degree() != 3 || c.ring()->nvars() != 3) return false;
  // three independent lines: Hess(C) = kappa*C with kappa != 0, and the
  // Jacobian scheme is three reduced points
  Poly h = hessian_det(c);
  const Term& lead = c.terms().front();
  AlgNum kappa = h.coefficient(lead.m) / lead.c;
  if (kappa.is_zero() || h != c * kappa) return false;
  std::vector<Poly> jac;
  for (int v = 0; v < 3; ++v) jac.push_back(partial_derivative(c, v));
  auto dd = projective_dimension_and_degree(Ideal(c.ring(), jac));
  return dd.dimension == 0 && dd.degree == 3;
}

TypeLabel classify(const SingularityRecord& rec, const LocalGerm& g) {
  using K = TypeLabel::Kind;
  if (rec.multiplicity == 2 && rec.corank <= 1 && rec.milnor == rec.tjurina && rec.milnor >= 1)
    return {K::A, rec.milnor};
  if (rec.multiplicity == 2 && rec.corank == 2 && rec.milnor == 4 && rec.tjurina == 4 && g.g.ring()->nvars() == 3) {
    auto ker = kernel(hessian_at_origin(g.g));
    if (ker.size() == 2) {
      auto st = Ring::make({"s", "u"}, g.g.ring()->field);
      Poly s = Poly::variable(st, 0), u = Poly::variable(st, 1);
      std::map<int, Poly> sub;
      for (int v = 0; v < 3; ++v) sub.emplace(v, s * ker[0][v] + u * ker[1][v]);
      Poly cubic = substitute(g.g.homogeneous_part(3), sub, st);
      auto co = [&](int i, int j) {
        Monomial m;
        m.e[0] = static_cast<std::uint8_t>(i);
        m.e[1] = static_cast<std::uint8_t>(j);
        return cubic.coefficient(m);
      };
      if (binary_cubic_nondegenerate(co(3, 0), co(2, 1), co(1, 2), co(0, 3))) return {K::D4, 0};
    }
  }
  if (rec.multiplicity == 3 && rec.corank == 3 && rec.milnor == 11 && rec.tjurina == 10 &&
      g.g.ring()->nvars() == 3 && is_triangle_cubic(g.g.homogeneous_part(3)))
    return {K::T444, 0};
  return {K::Unrecognized, 0};
}

bool tangent_cone_smooth(const LocalGerm& g) {
  int m = multiplicity(g);
  if (m < 2) throw std::invalid_argument("tangent cone of a smooth point");
  Poly cone = g.g.homogeneous_part(m);
  std::vector<Poly> jac;
  for (int v = 0; v < cone.ring()->nvars(); ++v) jac.push_back(partial_derivative(cone, v));
  return projective_dimension_and_degree(Ideal(cone.ring(), jac)).dimension == -1;
}

SingularityRecord analyze(const LocalGerm& g, int degree_cap) {
  SingularityRecord r;
  r.multiplicity = multiplicity(g);
  r.corank = hessian_corank(g);
  r.milnor = milnor_number(g, degree_cap);
  r.tjurina = tjurina_number(g, degree_cap);
  r.type = classify(r, g);
  if (r.type.kind == TypeLabel::Kind::Unrecognized && r.multiplicity >= 2) r.tangent_cone_smooth = tangent_cone_smooth(g);
  return r;
}

}  // namespace g29
