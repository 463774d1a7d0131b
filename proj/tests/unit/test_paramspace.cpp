#include "doctest.h"

#include "g29/exactfield/complex_ball.hpp"
#include "g29/exactfield/linalg.hpp"
#include "g29/multipoly/invariants.hpp"
#include "g29/multipoly/ops.hpp"
#include "g29/paramspace/paramspace.hpp"
#include "g29/refgroup/group.hpp"

#include <algorithm>
#include <array>
#include <random>

using namespace g29;

namespace {

Poly lm(const std::string& s) { return parse_poly(s, parameter_ring()); }

// i -> -i on coefficients
Poly conjugate(const Poly& p) {
  FieldEmbedding c{gaussian_field(), gaussian_field(), -AlgNum::generator(gaussian_field())};
  return map_coefficients(p, c, p.ring());
}

UPolyK to_upoly(const Poly& p) {
  const FieldPtr& k = p.ring()->field;
  std::vector<AlgNum> c(std::max(0, p.total_degree()) + 1, AlgNum(k, Rational(0)));
  for (auto& t : p.terms()) c[t.m.e[0]] += t.c;
  return UPolyK(k, c);
}

// every registry curve except B is a graph: one coordinate as a polynomial in the other
struct Graph {
  int over;  // the free coordinate, 0 = l, 1 = m
  std::string other;
};
Graph graph_of(const std::string& name) {
  if (name == "L1") return {0, "0"};
  if (name == "L2") return {1, "0"};
  if (name == "L3") return {0, "-s"};
  if (name == "L4") return {1, "15*s+1/45"};
  if (name == "L5+") return {1, "(4+2*i)*s+(3+i)/320"};
  if (name == "L5-") return {1, "(4-2*i)*s+(3-i)/320"};
  if (name == "A") return {0, "-20480*s^3+256*s^2-s"};
  throw std::invalid_argument(name);
}

// the other curve along the graph, as a polynomial in the free coordinate
UPolyK along(const std::string& g, const PlaneCurve& c) {
  auto R = Ring::make({"s"}, gaussian_field());
  Graph gr = graph_of(g);
  Poly s = Poly::variable(R, 0), e = parse_poly(gr.other, R);
  std::map<int, Poly> sub;
  sub.emplace(gr.over, s);
  sub.emplace(1 - gr.over, e);
  return to_upoly(substitute(c.poly, sub, R));
}

int root_multiplicity(UPolyK u, const AlgNum& r) {
  int k = 0;
  while (!u.is_zero() && u.eval(r).is_zero()) {
    u = u.derivative();
    ++k;
  }
  return k;
}

// 512-bit midpoint arithmetic; the lifted equation cancels far below long double
constexpr long kPrec = 512;

double magnitude(const ComplexBall& z) {
  BigFloat h(kPrec);
  mpfr_hypot(h.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return h.to_double();
}

ComplexBall complex_sqrt(const ComplexBall& w) {
  // sqrt((|w|+a)/2) + i sign(b) sqrt((|w|-a)/2)
  BigFloat r(kPrec), u(kPrec), v(kPrec);
  mpfr_hypot(r.get(), w.re().get(), w.im().get(), MPFR_RNDN);
  mpfr_add(u.get(), r.get(), w.re().get(), MPFR_RNDN);
  mpfr_div_2ui(u.get(), u.get(), 1, MPFR_RNDN);
  mpfr_sqrt(u.get(), u.get(), MPFR_RNDN);
  mpfr_sub(v.get(), r.get(), w.re().get(), MPFR_RNDN);
  mpfr_div_2ui(v.get(), v.get(), 1, MPFR_RNDN);
  mpfr_sqrt(v.get(), v.get(), MPFR_RNDN);
  if (mpfr_sgn(w.im().get()) < 0) mpfr_neg(v.get(), v.get(), MPFR_RNDN);
  ComplexBall z(kPrec);
  mpfr_set(z.re().get(), u.get(), MPFR_RNDN);
  mpfr_set(z.im().get(), v.get(), MPFR_RNDN);
  return z;
}

// first complex embedding of a field and of K inside it
struct Embedding {
  ComplexBall root, k_gen;
  Embedding(const FieldPtr& m, const AlgNum& k_image)
      : root(isolate_roots(m->minimal_polynomial(), kPrec)[0]), k_gen(eval_ball(k_image.as_poly(), root)) {}
  ComplexBall of_m(const AlgNum& a) const { return eval_ball(a.as_poly(), root); }
  ComplexBall of_k(const AlgNum& a) const { return eval_ball(a.as_poly(), k_gen); }
};

struct NumericValue {
  ComplexBall value{kPrec};
  double scale = 0;  // sum of absolute term values
};

NumericValue numeric(const Poly& p, const Embedding& e, const std::vector<ComplexBall>& z) {
  NumericValue out;
  for (auto& t : p.terms()) {
    ComplexBall v = e.of_k(t.c);
    for (int j = 0; j < 4; ++j)
      for (int q = 0; q < t.m.e[j]; ++q) v = v * z[j];
    out.value = out.value + v;
    out.scale += magnitude(v);
  }
  return out;
}

}  // namespace

TEST_CASE("curve registry") {
  const auto& reg = curve_registry();
  REQUIRE(reg.size() == 8);
  std::vector<int> deg;
  int total = 0;
  for (auto& c : reg) {
    deg.push_back(c.degree());
    total += c.degree();
    CHECK_FALSE(c.poly.is_zero());
    CHECK(is_squarefree(c.poly));
  }
  CHECK(deg == std::vector<int>{1, 1, 1, 1, 1, 1, 3, 6});
  CHECK(total == 15);
  CHECK(conjugate(curve("L5+").poly) == curve("L5-").poly);
  CHECK(conjugate(curve("B").poly) == curve("B").poly);
  CHECK(curve("L4").poly == lm("l-15*m-1/45"));
  CHECK_THROWS_AS(curve("L6"), std::invalid_argument);
}

TEST_CASE("pencil members") {
  const auto& inv = invariants_q();
  auto z = pencil("zero", AlgNum(0), AlgNum(0));
  CHECK(z.F == inv.f3);
  auto p = pencil("p14", AlgNum(Rational(1, 45)), AlgNum(0));
  CHECK(p.F == inv.f3 + inv.f2 * inv.f1 * AlgNum(Rational(1, 45)));
  CHECK(p.F.total_degree() == 12);
  CHECK(p.F.is_homogeneous());
  const auto& d = distinguished("plus");
  auto s = pencil("plus", d.point.lambda, d.point.mu);
  CHECK(s.field->degree() == 2);
  CHECK(is_g29_invariant_dodecic(s.F));
}

TEST_CASE("named points and their curves") {
  for (auto& d : distinguished_points()) {
    auto through = curves_through(d.point);
    CAPTURE(d.surface);
    if (d.surface == "heart") {
      CHECK(membership_discrepancy(d));
      CHECK(through == std::vector<std::string>{"L1", "B"});
      CHECK((evaluate_at(curve("L4"), d.point) - AlgNum(Rational(1, 64) - Rational(1, 45))).is_zero());
    } else {
      CHECK_FALSE(membership_discrepancy(d));
    }
    if (d.generic_sample) CHECK(through.size() == 1);
  }
  auto diamond = distinguished("diamond").point;
  for (auto n : {"L1", "L2", "L3", "L5+", "L5-", "B"}) CHECK_FALSE(on_curve(diamond, curve(n)));
  auto spade = distinguished("spade+").point;
  for (auto n : {"L5+", "A", "B"}) CHECK(on_curve(spade, curve(n)));
  CHECK(on_curve(distinguished("p5+").point, curve("L5+")));
  CHECK_FALSE(on_curve(distinguished("p5+").point, curve("L5-")));
  // the point's field meets Q(i) only in Q, so both choices of i agree
  CHECK(on_curve(distinguished("plus").point, curve("B")));
  CHECK_FALSE(on_curve(distinguished("plus").point, curve("L5+")));
  CHECK_THROWS_AS(distinguished("nowhere"), std::invalid_argument);
}

TEST_CASE("singular points of the registry curves") {
  for (auto n : {"L1", "L2", "L3", "L4", "L5+", "L5-", "A"}) CHECK(plane_curve_singular_points(curve(n)).empty());
  auto S = plane_curve_singular_points(curve("B"));
  int total = 0;
  for (auto& c : S) {
    total += c.size;
    // 384 lambda = 3 +- sqrt 3
    AlgNum l = c.point.lambda, six(c.point.field, Rational(6));
    CHECK((l * l * AlgNum(Rational(147456)) - l * AlgNum(Rational(2304)) + six).is_zero());
  }
  CHECK(total == 2);
  // the stated points, checked by substitution alone
  for (auto n : {"plus", "minus"}) {
    auto p = distinguished(n).point;
    const Poly& B = curve("B").poly;
    CHECK(evaluate_at(PlaneCurve{"dB/dl", partial_derivative(B, 0)}, p).is_zero());
    CHECK(evaluate_at(PlaneCurve{"dB/dm", partial_derivative(B, 1)}, p).is_zero());
    CHECK(on_curve(p, curve("B")));
    CHECK(curves_through(p) == std::vector<std::string>{"B"});
  }
}

TEST_CASE("intersection multiplicities") {
  auto origin = ParameterPoint::make("0", "0", "0", NumberField::rationals());
  CHECK(intersection_multiplicity(lm("m"), lm("m-l^2"), origin) == 2);
  CHECK(intersection_multiplicity(lm("m-l^3"), lm("m"), origin) == 3);
  CHECK(intersection_multiplicity(lm("m"), lm("l"), origin) == 1);
  auto club = distinguished("club").point, diamond = distinguished("diamond").point,
       heart = distinguished("heart").point;
  CHECK(intersection_multiplicity(curve("L4"), curve("B"), club) == 2);
  CHECK(intersection_multiplicity(curve("B"), curve("L4"), club) == 2);
  CHECK(intersection_multiplicity(curve("L4"), curve("A"), diamond) == 3);
  CHECK(intersection_multiplicity(curve("A"), curve("L4"), diamond) == 3);
  CHECK(intersection_multiplicity(curve("L1"), curve("B"), heart) == 4);
  CHECK_THROWS_AS(intersection_multiplicity(curve("L4"), curve("B"), heart), std::invalid_argument);
  // oracle: order of vanishing of the other curve along the line
  CHECK(root_multiplicity(along("L4", curve("B")), club.mu) == 2);
  CHECK(root_multiplicity(along("L4", curve("A")), diamond.mu) == 3);
  CHECK(root_multiplicity(along("L1", curve("B")), heart.lambda) == 4);
  CHECK(root_multiplicity(along("A", curve("L5+")), distinguished("spade+").point.lambda) == 2);
}

TEST_CASE("39 intersection points, 33 transversal") {
  auto v = pairwise_intersections();
  auto s = summarize(v);
  CHECK(s.points == 39);
  CHECK(s.transversal == 33);

  // oracle: each pair separately through a graph parametrization; a point on
  // k curves is met by k(k-1)/2 pairs
  const auto& reg = curve_registry();
  std::size_t pair_points = 0;
  for (std::size_t a = 0; a < reg.size(); ++a)
    for (std::size_t b = a + 1; b < reg.size(); ++b) {
      UPolyK u = along(reg[a].name, reg[b]);
      REQUIRE_FALSE(u.is_zero());
      if (u.degree() > 0) pair_points += static_cast<std::size_t>(squarefree_part(u).degree());
    }
  std::size_t weighted = 0;
  for (auto& c : v) weighted += static_cast<std::size_t>(c.cls.size) * c.curves.size() * (c.curves.size() - 1) / 2;
  CHECK(pair_points == weighted);

  // the non-transversal ones are exactly the special points
  std::vector<std::string> special;
  for (auto& c : v)
    if (!c.transversal()) {
      for (auto& d : distinguished_points())
        if (!d.generic_sample && curves_through(d.point) == c.curves && on_curve(d.point, curve(c.curves[0])) &&
            intersection_multiplicity(curve(c.curves[0]), curve(c.curves[1]), d.point) == c.multiplicity) {
          bool same = true;
          // same point: both coordinates agree after moving into a common field
          auto comp = compositum(c.cls.point.field, d.point.field);
          same = comp.from_a.apply(c.cls.point.lambda) == comp.from_b.apply(d.point.lambda) &&
                 comp.from_a.apply(c.cls.point.mu) == comp.from_b.apply(d.point.mu);
          if (same) special.push_back(d.surface);
        }
    }
  std::sort(special.begin(), special.end());
  CHECK(special == std::vector<std::string>{"club", "diamond", "heart", "spade+", "spade-", "zero"});
}

TEST_CASE("plane solver agrees with resultants on random systems") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9);
  auto R = Ring::make({"l", "m"});
  int tried = 0;
  while (tried < 6) {
    std::array<long, 6> a{}, b{};  // l^2, l*m, m^2, l, m, 1
    for (auto& c : a) c = coef(rng);
    for (auto& c : b) c = coef(rng);
    // no common point at infinity: the quadratic parts have nonzero resultant
    long r = (a[0] * b[2] - b[0] * a[2]) * (a[0] * b[2] - b[0] * a[2]) -
             (a[0] * b[1] - b[0] * a[1]) * (a[1] * b[2] - b[1] * a[2]);
    if (r == 0) continue;
    ++tried;
    auto conic = [&](const std::array<long, 6>& c) {
      std::string s;
      const char* mono[] = {"l^2", "l*m", "m^2", "l", "m", "1"};
      for (int k = 0; k < 6; ++k) s += "+(" + std::to_string(c[k]) + ")*" + mono[k];
      return parse_poly(s, R);
    };
    Poly f = conic(a), g = conic(b);
    auto sols = solve_plane_system({f, g});
    int n = 0;
    for (auto& c : sols) {
      n += c.size;
      const FieldPtr& L = c.point.field;
      // Sylvester matrix in m at l = lambda is singular
      auto coeffs_m = [&](const Poly& p) {
        std::vector<AlgNum> a(3, AlgNum(L, Rational(0)));
        for (auto& t : p.terms()) a[t.m.e[1]] += t.c.in_field(L) * c.point.lambda.pow(t.m.e[0]);
        return a;
      };
      auto a = coeffs_m(f), b = coeffs_m(g);
      linalg::Matrix<AlgNum> S{{a[2], a[1], a[0], AlgNum(L, Rational(0))},
                               {AlgNum(L, Rational(0)), a[2], a[1], a[0]},
                               {b[2], b[1], b[0], AlgNum(L, Rational(0))},
                               {AlgNum(L, Rational(0)), b[2], b[1], b[0]}};
      CHECK(linalg::rank(S) < 4);
      CHECK(evaluate(change_ring(f, parameter_ring()->with_field(L)), {c.point.lambda, c.point.mu}).is_zero());
    }
    CHECK(n == 4);  // Bezout, all four affine and simple for these seeds
  }
}

TEST_CASE("lifting") {
  auto F = parse_poly("x^2*y+3*z*t^2", xyzt_ring());
  CHECK(lift(F, 1) == F);
  CHECK(lift(F, 2) == parse_poly("x^4*y^2+3*z^2*t^4", xyzt_ring()));
  CHECK(lift(F, 3).total_degree() == 9);
  CHECK_THROWS_AS(lift(F, 0), std::invalid_argument);
  const auto& d = distinguished("plus");
  auto S = pencil("plus", d.point.lambda, d.point.mu);
  CHECK(lift(S.F, 2).total_degree() == 24);
}

TEST_CASE("the lift of S12+ has 2560 singular preimages") {
  const auto& d = distinguished("plus");
  auto cert = certify_surface(pencil("plus", d.point.lambda, d.point.mu));
  REQUIRE(cert.status == CertStatus::Success);
  auto lc = lift_count(cert, 2);
  CHECK(lc.all_nonzero);
  CHECK(lc.general == 320 * 8);
  CHECK(lc.literal < lc.general);  // some cusps lie on coordinate planes
  CHECK(lift_count(cert, 1).general == 320);
  CHECK(lift_count(cert, 3).general == 320 * 27);

  // numeric oracle: preimages of transformed orbit points are singular points
  // of the lifted equation with a Hessian of corank one
  const OrbitEntry& o = cert.orbits[0];
  Embedding emb(o.field, o.k_image);
  Poly L = lift(change_coordinates(cert.F, lc.change), 2);
  std::vector<Poly> grad, hess;
  for (int a = 0; a < 4; ++a) grad.push_back(partial_derivative(L, a));
  for (int a = 1; a < 4; ++a)
    for (int b = 1; b < 4; ++b) hess.push_back(partial_derivative(grad[a], b));
  FieldEmbedding gi = gaussian_embedding(o.field, o.i_image);
  auto pts = orbit_point(g29_invariant_frame(), o.point, &gi);
  constexpr double kVanish = 1e-60;  // |value| relative to the absolute term sum
  constexpr double kCorank = 1e-60;  // |det H| relative to max|H_ab|^3
  constexpr double kRank2 = 1e-8;    // largest 2x2 minor relative to max|H_ab|^2
  for (std::size_t n = 0; n < pts.size(); n += 79) {
    std::vector<AlgNum> y;
    for (int r = 0; r < 4; ++r) {
      AlgNum s(o.field, Rational(0));
      for (int j = 0; j < 4; ++j) s += AlgNum(o.field, lc.change[r][j]) * pts[n].x[j];
      y.push_back(s);
    }
    std::vector<ComplexBall> roots;
    for (int j = 1; j < 4; ++j) roots.push_back(complex_sqrt(emb.of_m(y[j] / y[0])));
    for (int signs = 0; signs < 8; ++signs) {
      std::vector<ComplexBall> z{ComplexBall::exact(Rational(1), kPrec)};
      for (int j = 1; j < 4; ++j)
        z.push_back((signs >> (j - 1)) & 1 ? ComplexBall::exact(Rational(-1), kPrec) * roots[j - 1] : roots[j - 1]);
      auto f = numeric(L, emb, z);
      CHECK(magnitude(f.value) / f.scale < kVanish);
      for (auto& g : grad) {
        auto v = numeric(g, emb, z);
        CHECK(magnitude(v.value) / v.scale < kVanish);
      }
      std::vector<ComplexBall> H;
      double norm = 0;
      for (auto& h : hess) {
        H.push_back(numeric(h, emb, z).value);
        norm = std::max(norm, magnitude(H.back()));
      }
      auto at = [&](int a, int b) { return H[3 * a + b]; };
      ComplexBall det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                        at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                        at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
      double minor = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          for (int c = 0; c < 3; ++c)
            for (int e = c + 1; e < 3; ++e)
              minor = std::max(minor, magnitude(at(a, c) * at(b, e) - at(a, e) * at(b, c)));
      CHECK(magnitude(det) / (norm * norm * norm) < kCorank);
      CHECK(minor / (norm * norm) > kRank2);
    }
  }
}

TEST_CASE("curve discovery respects its budget") {
  GBBudget b;
  b.seconds = 2;
  auto r = discover_curves_t0(b);
  CHECK_FALSE(r.complete);
  CHECK(r.note.find("budget") != std::string::npos);
}
