#include "g29/paramspace/paramspace.hpp"

#include "g29/exactfield/linalg.hpp"
#include "g29/groebner/solve.hpp"
#include "g29/localsing/local.hpp"
#include "g29/multipoly/invariants.hpp"
#include "g29/multipoly/ops.hpp"
#include "g29/refgroup/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace g29 {

RingPtr parameter_ring() {
  static const RingPtr r = Ring::make({"l", "m"}, gaussian_field());
  return r;
}

SurfaceSpec pencil(const std::string& id, const AlgNum& lambda, const AlgNum& mu) {
  FieldPtr k = common_field(lambda.field(), mu.field());
  return SurfaceSpec{id, lambda.in_field(k), mu.in_field(k), k, pencil_polynomial(lambda, mu, k)};
}

const std::vector<PlaneCurve>& curve_registry() {
  static const std::vector<PlaneCurve> reg = [] {
    auto R = parameter_ring();
    std::vector<std::pair<std::string, std::string>> eqs{
        {"L1", "m"},
        {"L2", "l"},
        {"L3", "l+m"},
        {"L4", "l-15*m-1/45"},
        {"L5+", "l-(4+2*i)*m-(3+i)/320"},
        {"L5-", "l-(4-2*i)*m-(3-i)/320"},
        {"A", "20480*l^3-256*l^2+l+m"},
        {"B", "1342177280*l^6-100663296*l^5+3014656*l^4-3538944*l^3*m-45056*l^3+73728*l^2*m+336*l^2"
              "-288*l*m-l-432*m^2-m"}};
    std::vector<PlaneCurve> out;
    for (auto& [n, e] : eqs) out.push_back(PlaneCurve{n, parse_poly(e, R)});
    return out;
  }();
  return reg;
}

const PlaneCurve& curve(const std::string& name) {
  for (auto& c : curve_registry())
    if (c.name == name) return c;
  throw std::invalid_argument("no curve named " + name);
}

ParameterPoint ParameterPoint::make(std::string name, const std::string& lambda, const std::string& mu,
                                    const FieldPtr& field) {
  ParameterPoint p{std::move(name), parse_algnum(lambda, field), parse_algnum(mu, field), field, std::nullopt};
  if (field->same_as(*gaussian_field())) p.gaussian = FieldEmbedding::identity(field);
  return p;
}

namespace {

// the curve and the point moved into one field
struct Placed {
  Poly poly;
  AlgNum lambda, mu;
};

Placed place(const Poly& c, const ParameterPoint& p) {
  FieldEmbedding g, f;
  if (p.gaussian) {
    g = *p.gaussian;
    f = FieldEmbedding::identity(p.field);
  } else {
    auto comp = compositum(p.field, gaussian_field());
    f = comp.from_a;
    g = comp.from_b;
  }
  Poly src = c.ring()->field->is_rationals() ? change_ring(c, parameter_ring()) : c;
  return {map_coefficients(src, g, parameter_ring()->with_field(g.to)), f.apply(p.lambda), f.apply(p.mu)};
}

}  // namespace

AlgNum evaluate_at(const PlaneCurve& c, const ParameterPoint& p) {
  Placed q = place(c.poly, p);
  return evaluate(q.poly, {q.lambda, q.mu});
}

bool on_curve(const ParameterPoint& p, const PlaneCurve& c) { return evaluate_at(c, p).is_zero(); }

std::vector<std::string> curves_through(const ParameterPoint& p) {
  std::vector<std::string> out;
  for (auto& c : curve_registry())
    if (on_curve(p, c)) out.push_back(c.name);
  return out;
}

std::vector<PointClass> solve_plane_system(const std::vector<Poly>& gens) {
  std::vector<Poly> g;
  for (auto& p : gens) g.push_back(p.ring()->field->is_rationals() ? change_ring(p, parameter_ring()) : p);
  auto G = buchberger(Ideal(parameter_ring(), g), MonomialOrder::grevlex());
  std::vector<PointClass> out;
  for (auto& s : solve_bivariate(G))
    out.push_back(PointClass{ParameterPoint{"", s.point[0], s.point[1], s.field, s.embedding}, s.size()});
  return out;
}

std::vector<PointClass> plane_curve_singular_points(const PlaneCurve& c) {
  return solve_plane_system({c.poly, partial_derivative(c.poly, 0), partial_derivative(c.poly, 1)});
}

int intersection_multiplicity(const Poly& c1, const Poly& c2, const ParameterPoint& p) {
  Placed a = place(c1, p), b = place(c2, p);
  if (!evaluate(a.poly, {a.lambda, a.mu}).is_zero() || !evaluate(b.poly, {b.lambda, b.mu}).is_zero())
    throw std::invalid_argument("point is not on both curves");
  const RingPtr& R = a.poly.ring();
  std::map<int, Poly> shift{{0, Poly::variable(R, 0) + Poly::constant(R, a.lambda)},
                            {1, Poly::variable(R, 1) + Poly::constant(R, a.mu)}};
  return local_length({substitute(a.poly, shift, R), substitute(b.poly, shift, R)}).value;
}

int intersection_multiplicity(const PlaneCurve& c1, const PlaneCurve& c2, const ParameterPoint& p) {
  return intersection_multiplicity(c1.poly, c2.poly, p);
}

std::vector<IntersectionClass> pairwise_intersections() {
  const auto& reg = curve_registry();
  std::vector<IntersectionClass> out;
  for (std::size_t a = 0; a < reg.size(); ++a)
    for (std::size_t b = a + 1; b < reg.size(); ++b)
      for (auto& cls : solve_plane_system({reg[a].poly, reg[b].poly})) {
        auto through = curves_through(cls.point);
        if (through.size() < 2 || through[0] != reg[a].name || through[1] != reg[b].name) continue;
        IntersectionClass ic{cls, through, intersection_multiplicity(reg[a], reg[b], cls.point)};
        ic.cls.point.name = reg[a].name + "∩" + reg[b].name;
        out.push_back(std::move(ic));
      }
  return out;
}

IntersectionSummary summarize(const std::vector<IntersectionClass>& v) {
  IntersectionSummary s;
  for (auto& c : v) {
    s.points += static_cast<std::size_t>(c.cls.size);
    if (c.transversal()) s.transversal += static_cast<std::size_t>(c.cls.size);
  }
  return s;
}

namespace {

FieldPtr sqrt3_field() {
  static const FieldPtr k = NumberField::create(UPolyQ{-3, 0, 1}, "r");
  return k;
}

ExpectedProfile profile(std::map<std::string, std::size_t> types, std::vector<std::size_t> orbits,
                        std::int64_t tau) {
  ExpectedProfile e;
  e.types = std::move(types);
  e.orbit_sizes = std::move(orbits);
  e.tjurina_degree = tau;
  return e;
}

}  // namespace

const std::vector<DistinguishedPoint>& distinguished_points() {
  static const std::vector<DistinguishedPoint> reg = [] {
    FieldPtr Q = NumberField::rationals(), K = gaussian_field(), R3 = sqrt3_field();
    std::vector<DistinguishedPoint> v;
    auto add = [&](std::string surface, std::string name, std::string l, std::string m, FieldPtr f,
                   ExpectedProfile e, std::vector<std::string> curves, bool generic = false) {
      v.push_back(DistinguishedPoint{ParameterPoint::make(std::move(name), l, m, f), std::move(surface), std::move(e),
                                     std::move(curves), generic});
    };
    add("plus", "+", "(3+r)/384", "(-5+3*r)/6912", R3, profile({{"A2", 320}}, {320}, 640), {"B"});
    add("minus", "-", "(3-r)/384", "(-5-3*r)/6912", R3, profile({{"A2", 320}}, {320}, 640), {"B"});
    add("club", "♣", "1/40", "1/5400", Q, profile({{"A3", 160}}, {160}, 480), {"L4", "B"});
    add("diamond", "♦", "1/240", "-13/10800", Q, profile({{"D4", 160}}, {160}, 640), {"L4", "A"});
    auto heart = profile({{"X", 20}}, {20}, 520);
    heart.record = {4, 27, 26};
    heart.tangent_cone_smooth = true;
    add("heart", "♥", "1/64", "0", Q, heart, {"L4", "B"});
    add("spade+", "♠+", "(3+i)/640", "(-7+i)/6400", K, profile({{"T444", 80}}, {80}, 800), {"L5+", "A", "B"});
    add("spade-", "♠-", "(3-i)/640", "(-7-i)/6400", K, profile({{"T444", 80}}, {80}, 800), {"L5-", "A", "B"});
    add("p14", "p14", "1/45", "0", Q, profile({{"T444", 20}, {"A1", 160}}, {20, 160}, 360), {"L1", "L4"});
    add("p5+", "p5+", "(1-i)/320", "(-3-i)/1600", K, profile({{"A1", 560}}, {80, 480}, 560), {"L5+", "A"});
    add("p5-", "p5-", "(1+i)/320", "(-3+i)/1600", K, profile({{"A1", 560}}, {80, 480}, 560), {"L5-", "A"});
    ExpectedProfile zero;
    zero.dimension = 1;
    zero.lines = 30;
    add("zero", "0", "0", "0", Q, zero, {"L1", "L2", "L3", "A", "B"});

    // one explicit sample per curve, off every other curve
    add("generic-L1", "L1 sample", "1/7", "0", Q, profile({{"T444", 20}}, {20}, 200), {"L1"}, true);
    add("generic-L2", "L2 sample", "0", "1/7", Q, profile({{"A1", 120}}, {120}, 120), {"L2"}, true);
    add("generic-L3", "L3 sample", "1/7", "-1/7", Q, profile({{"A1", 40}}, {40}, 40), {"L3"}, true);
    add("generic-L4", "L4 sample", "682/315", "1/7", Q, profile({{"A1", 160}}, {160}, 160), {"L4"}, true);
    add("generic-L5+", "L5+ sample", "(4+2*i)/7+(3+i)/320", "1/7", K, profile({{"A1", 80}}, {80}, 80), {"L5+"},
        true);
    add("generic-L5-", "L5- sample", "(4-2*i)/7+(3-i)/320", "1/7", K, profile({{"A1", 80}}, {80}, 80), {"L5-"},
        true);
    add("generic-A", "A sample", "1/7", "-18737/343", Q, profile({{"A1", 480}}, {480}, 480), {"A"}, true);
    add("generic-B", "B sample", "-11/16", "-6875/54", Q, profile({{"A1", 320}}, {320}, 320), {"B"}, true);
    return v;
  }();
  return reg;
}

const DistinguishedPoint& distinguished(const std::string& surface) {
  for (auto& d : distinguished_points())
    if (d.surface == surface) return d;
  throw std::invalid_argument("no distinguished parameter named " + surface);
}

bool membership_discrepancy(const DistinguishedPoint& d) {
  auto got = curves_through(d.point);
  auto want = d.stated_curves;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got != want;
}

CertifiedProfile certified_profile(const Certificate& c) {
  CertifiedProfile p;
  p.status = c.status;
  p.types = c.profile();
  for (auto& o : c.orbits) {
    for (std::size_t k = 0; k < o.galois_orbits; ++k) p.orbit_sizes.push_back(o.orbit_size);
    p.records.push_back({o.record.multiplicity, o.record.milnor, o.record.tjurina});
    p.tangent_cone_smooth.push_back(o.record.tangent_cone_smooth);
  }
  std::sort(p.orbit_sizes.begin(), p.orbit_sizes.end());
  p.tjurina_degree = c.jacobian_degree;
  for (auto& l : c.lines) p.lines += l.orbit_size;
  return p;
}

namespace {

std::string triple(const std::array<int, 3>& r) {
  return "(" + std::to_string(r[0]) + ", " + std::to_string(r[1]) + ", " + std::to_string(r[2]) + ")";
}

std::string joined(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto n : v) s += (s.empty() ? "" : "+") + std::to_string(n);
  return s.empty() ? std::string("none") : s;
}

std::string type_list(const std::map<std::string, std::size_t>& m) {
  std::string s;
  for (auto& [k, v] : m) s += (s.empty() ? "" : " + ") + std::to_string(v) + " " + k;
  return s.empty() ? std::string("none") : s;
}

}  // namespace

std::vector<std::string> profile_mismatches(const CertifiedProfile& c, const ExpectedProfile& e) {
  std::vector<std::string> out;
  auto say = [&](const std::string& what, const std::string& got, const std::string& want) {
    out.push_back(what + ": got " + got + ", expected " + want);
  };
  if (e.dimension == 1) {
    if (c.status != CertStatus::PositiveDimensional) say("status", to_string(c.status), "POSITIVE_DIMENSIONAL");
    if (c.lines != e.lines) say("singular lines", std::to_string(c.lines), std::to_string(e.lines));
    return out;
  }
  if (c.status != CertStatus::Success) {
    say("status", to_string(c.status), "SUCCESS");
    return out;
  }
  if (c.types != e.types) say("types", type_list(c.types), type_list(e.types));
  if (!e.orbit_sizes.empty()) {
    auto want = e.orbit_sizes;
    std::sort(want.begin(), want.end());
    if (c.orbit_sizes != want) say("orbit sizes", joined(c.orbit_sizes), joined(want));
  }
  if (c.tjurina_degree != e.tjurina_degree)
    say("global Tjurina degree", c.tjurina_degree ? std::to_string(*c.tjurina_degree) : "none",
        std::to_string(e.tjurina_degree));
  if (e.record[0] != 0)
    for (auto& r : c.records)
      if (r != e.record) say("(mult, mu, tau)", triple(r), triple(e.record));
  if (e.tangent_cone_smooth)
    for (auto& t : c.tangent_cone_smooth)
      if (t != e.tangent_cone_smooth)
        say("smooth tangent cone", t ? (*t ? "yes" : "no") : "not examined", *e.tangent_cone_smooth ? "yes" : "no");
  return out;
}

std::vector<std::string> profile_mismatches(const Certificate& c, const ExpectedProfile& e) {
  return profile_mismatches(certified_profile(c), e);
}

std::string describe(const ExpectedProfile& e) {
  if (e.dimension == 1) return std::to_string(e.lines) + " singular lines";
  return type_list(e.types);
}

std::string describe(const CertifiedProfile& c) {
  if (c.status == CertStatus::PositiveDimensional) return std::to_string(c.lines) + " singular lines";
  if (c.status != CertStatus::Success) return to_string(c.status);
  return type_list(c.types);
}

Poly lift(const Poly& F, int k) {
  if (k < 1) throw std::invalid_argument("lift needs k >= 1");
  std::vector<Term> terms;
  for (auto& t : F.terms()) {
    Monomial m = t.m;
    for (int v = 0; v < F.ring()->nvars(); ++v) m.e[v] *= k;
    terms.push_back(Term{m, t.c});
  }
  return Poly(F.ring(), std::move(terms));
}

namespace {

using Change = std::array<std::array<Rational, 4>, 4>;

std::size_t power(std::size_t k, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= k;
  return r;
}

std::size_t preimages(const std::vector<AlgNum>& x, std::size_t k) {
  int nz = 0;
  for (auto& c : x) nz += c.is_zero() ? 0 : 1;
  return power(k, nz - 1);
}

std::vector<AlgNum> transform(const Change& c, const std::vector<AlgNum>& x) {
  std::vector<AlgNum> y;
  for (int r = 0; r < 4; ++r) {
    AlgNum s(x[0].field(), Rational(0));
    for (int j = 0; j < 4; ++j) s += AlgNum(c[r][j]) * x[j];
    y.push_back(s);
  }
  return y;
}

// rows (1, a, a^2, a^3) for four consecutive integers a starting at s
Change vandermonde(int s) {
  Change c;
  for (int r = 0; r < 4; ++r) {
    Rational a(s + r), p(1);
    for (int j = 0; j < 4; ++j) {
      c[r][j] = p;
      p = p * a;
    }
  }
  return c;
}

}  // namespace

LiftCount lift_count(const Certificate& c, int k) {
  if (k < 1) throw std::invalid_argument("lift needs k >= 1");
  if (c.status != CertStatus::Success) throw std::invalid_argument("lift count needs a SUCCESS certificate");
  std::vector<std::pair<std::vector<ProjectivePoint>, std::size_t>> orbits;
  for (auto& o : c.orbits) {
    FieldEmbedding gi = gaussian_embedding(o.field, o.i_image);
    orbits.emplace_back(orbit_point(g29_invariant_frame(), o.point, &gi), o.galois_orbits);
  }
  LiftCount out;
  out.k = k;
  const auto kk = static_cast<std::size_t>(k);
  for (auto& [pts, g] : orbits)
    for (auto& p : pts) out.literal += g * preimages(p.x, kk);
  for (int s = 2; s < 40 && !out.all_nonzero; ++s) {
    Change ch = vandermonde(s);
    bool ok = true;
    std::size_t n = 0;
    for (auto& [pts, g] : orbits)
      for (auto& p : pts) {
        auto y = transform(ch, p.x);
        for (auto& v : y) ok = ok && !v.is_zero();
        n += g * preimages(y, kk);
      }
    if (ok) {
      out.change = ch;
      out.general = n;
      out.all_nonzero = true;
    }
  }
  if (!out.all_nonzero) throw std::runtime_error("no coordinate change moved the points off the coordinate planes");
  return out;
}

Poly change_coordinates(const Poly& F, const Change& change) {
  // x = change^-1 y, column by column
  linalg::Matrix<Rational> a(4, std::vector<Rational>(4));
  for (int r = 0; r < 4; ++r)
    for (int j = 0; j < 4; ++j) a[r][j] = change[r][j];
  Matrix4 inv = Matrix4::identity(NumberField::rationals());
  for (int j = 0; j < 4; ++j) {
    std::vector<Rational> e(4, Rational(0));
    e[j] = Rational(1);
    auto col = linalg::solve(a, e);
    if (!col) throw std::invalid_argument("coordinate change is singular");
    for (int r = 0; r < 4; ++r) inv(r, j) = AlgNum((*col)[r]);
  }
  return act(inv, F);
}

DiscoveryResult discover_curves_t0(const GBBudget& budget) {
  DiscoveryResult res;
  auto R6 = Ring::make({"x", "y", "z", "t", "l", "m"});
  const auto& inv = invariants_q();
  Poly f1 = change_ring(inv.f1, R6), f2 = change_ring(inv.f2, R6), f3 = change_ring(inv.f3, R6);
  Poly F = f3 + Poly::variable(R6, 4) * f2 * f1 + Poly::variable(R6, 5) * f1.pow(3);
  // chart x = 1 of the plane t = 0
  auto R4 = Ring::make({"y", "z", "l", "m"});
  std::map<int, Poly> sub{{0, Poly::constant(R4, AlgNum(Rational(1)))}, {3, Poly(R4)}};
  std::vector<Poly> gens;
  for (int v = 0; v < 4; ++v) gens.push_back(substitute(partial_derivative(F, v), sub, R4));
  try {
    Ideal E = eliminate(Ideal(R4, gens), {"y", "z"}, budget);
    if (E.generators.empty()) {
      res.note = "elimination ideal is zero";
      return res;
    }
    Poly g = E.generators[0];
    for (std::size_t j = 1; j < E.generators.size(); ++j) g = gcd_poly(g, E.generators[j]);
    Poly gi = change_ring(g, parameter_ring());
    res.generator = gi;
    res.complete = true;
    for (auto& c : curve_registry()) res.divisible[c.name] = try_divide(gi, c.poly).has_value();
  } catch (const BudgetExceeded& e) {
    res.note = e.what();
  }
  return res;
}

}  // namespace g29
