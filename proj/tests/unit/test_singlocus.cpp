#include "doctest.h"

#include "g29/multipoly/invariants.hpp"
#include "g29/multipoly/ops.hpp"
#include "g29/refgroup/group.hpp"
#include "g29/singlocus/certificate_io.hpp"

#include <random>

using namespace g29;

namespace {

FieldPtr sqrt3() {
  static FieldPtr k = NumberField::create(UPolyQ{-3, 0, 1}, "r");
  return k;
}

SurfaceSpec member(const std::string& id, const std::string& l, const std::string& m, const FieldPtr& k) {
  AlgNum lambda = parse_algnum(l, k), mu = parse_algnum(m, k);
  return SurfaceSpec{id, lambda, mu, k, pencil_polynomial(lambda, mu, k)};
}

const SurfaceSpec& plus() {
  static SurfaceSpec s = member("plus", "(3+r)/384", "(-5+3*r)/6912", sqrt3());
  return s;
}

const Certificate& plus_certificate() {
  static Certificate c = certify_surface(plus());
  return c;
}

Poly xyzt(const std::string& s) { return parse_poly(s, xyzt_ring()); }

bool singular_at(const Poly& F, const std::vector<AlgNum>& p) {
  for (int v = 0; v < 4; ++v) {
    Poly d = partial_derivative(F, v);
    if (!evaluate(d, p).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Jacobian schemes of small surfaces") {
  auto q = jacobian_scheme_exact(xyzt("x^2+y^2+z^2+t^2"));
  CHECK(q.dimension == -1);
  CHECK(global_tjurina_degree(xyzt("x^2+y^2+z^2+t^2")) == 0);
  Poly cayley = xyzt("x*y*z+x*y*t+x*z*t+y*z*t");
  auto c = jacobian_scheme_exact(cayley);
  CHECK(c.dimension == 0);
  CHECK(*c.degree == 4);
  CHECK(global_tjurina_degree(cayley) == 4);
  // brute force: the nodes are the coordinate points
  for (int k = 0; k < 4; ++k) {
    std::vector<AlgNum> e(4, AlgNum(0));
    e[k] = 1;
    CHECK(singular_at(cayley, e));
  }
  auto m = jacobian_scheme_modular(cayley);
  CHECK(m.dimension == 0);
  CHECK(*m.degree >= 4);
  // x y z t is singular along the six coordinate lines
  CHECK_THROWS_AS(global_tjurina_degree(xyzt("x*y*z*t")), std::domain_error);
}

TEST_CASE("witnesses on t = 0 for small surfaces") {
  CHECK(witness_points_t0(surface_from_poly("quadric", xyzt("x^2+y^2+z^2+t^2"))).empty());
  auto W = witness_points_t0(surface_from_poly("cayley", xyzt("x*y*z+x*y*t+x*z*t+y*z*t")));
  // three nodes [1:0:0:0], [0:1:0:0], [0:0:1:0] lie on t = 0
  REQUIRE(W.size() == 3);
  for (auto& w : W) {
    CHECK(w.size() == 1);
    CHECK(w.point.x[3].is_zero());
    CHECK(singular_at(xyzt("x*y*z+x*y*t+x*z*t+y*z*t"), w.point.x));
  }
}

TEST_CASE("slices") {
  Slice s;
  s.a = {Rational(1), Rational(0), Rational(-1), Rational(2)};
  CHECK(s.pivot() == 3);
  CHECK(s.free_coordinates() == std::array<int, 3>{0, 1, 2});
  CHECK(s.to_string() == "x-z+2*t = 0");
  CHECK(s.contains(ProjectivePoint::normalized({AlgNum(1), AlgNum(5), AlgNum(3), AlgNum(1)})));
  CHECK(Slice::coordinate(0).pivot() == 0);
  CHECK(chart_on_slice(Slice::coordinate(3), ProjectivePoint::normalized({AlgNum(0), AlgNum(2), AlgNum(1), AlgNum(0)})) ==
        1);
}

TEST_CASE("the pencil members are the G29-invariant dodecics") {
  CHECK(is_g29_invariant_dodecic(plus().F));
  CHECK(is_g29_invariant_dodecic(plus().F * AlgNum(Rational(-7, 3))));
  CHECK_FALSE(is_g29_invariant_dodecic(change_ring(xyzt("x^12"), plus().F.ring())));
  CHECK_FALSE(is_g29_invariant_dodecic(xyzt("x*y*z+x*y*t+x*z*t+y*z*t")));
  CHECK_THROWS_AS(certify_surface(surface_from_poly("cayley", xyzt("x*y*z+x*y*t+x*z*t+y*z*t"))),
                  std::invalid_argument);
}

TEST_CASE("S12+ witnesses are exact singular points") {
  auto W = witness_points_t0(plus());
  REQUIRE_FALSE(W.empty());
  std::size_t n = 0;
  for (auto& w : W) {
    n += static_cast<std::size_t>(w.size());
    Poly FL = map_coefficients(plus().F, w.embedding, plus().F.ring()->with_field(w.field));
    CHECK(w.point.x[3].is_zero());
    CHECK(evaluate(FL, w.point.x).is_zero());
    CHECK(singular_at(FL, w.point.x));
    CHECK(in_class(w, w.point, w.embedding));
  }
  CHECK(n == 24);
}

TEST_CASE("S12+ certificate") {
  const Certificate& c = plus_certificate();
  CHECK(c.status == CertStatus::Success);
  CHECK(c.dimension == 0);
  CHECK(*c.jacobian_degree == 640);
  REQUIRE(c.orbits.size() == 1);
  const OrbitEntry& o = c.orbits[0];
  CHECK(o.points() == 320);
  CHECK(o.record.type.to_string() == "A2");
  CHECK(o.record.multiplicity == 2);
  CHECK(o.record.milnor == 2);
  CHECK(o.record.tjurina == 2);
  CHECK(c.tjurina_sum == 640);
  CHECK(c.profile() == std::map<std::string, std::size_t>{{"A2", 320}});
}

TEST_CASE("orbit points are singular and G29 maps witnesses to singular points") {
  const Certificate& c = plus_certificate();
  const OrbitEntry& o = c.orbits[0];
  FieldEmbedding k_to_m{c.field, o.field, o.k_image};
  Poly FM = map_coefficients(c.F, k_to_m, c.F.ring()->with_field(o.field));
  FieldEmbedding gi = gaussian_embedding(o.field, o.i_image);
  auto pts = orbit_point(g29_invariant_frame(), o.point, &gi);
  CHECK(pts.size() == 320);
  for (std::size_t k = 0; k < pts.size(); k += 37) CHECK(singular_at(FM, pts[k].x));
  std::mt19937 rng(29);
  const auto& els = g29_invariant_frame().elements();
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix4 g = els[pick(rng)].mapped(gi);
    CHECK(singular_at(FM, act(g, o.point).x));
  }
}

TEST_CASE("certificates are unchanged by scaling the equation") {
  SurfaceSpec s = member("club", "1/40", "1/5400", NumberField::rationals());
  SurfaceSpec t = s;
  t.F = s.F * AlgNum(Rational(-5, 7));
  auto a = certify_surface(s), b = certify_surface(t);
  CHECK(a.status == CertStatus::Success);
  CHECK(b.status == CertStatus::Success);
  CHECK(a.profile() == b.profile());
  CHECK(a.profile() == std::map<std::string, std::size_t>{{"A3", 160}});
  CHECK(*a.jacobian_degree == 480);
  CHECK(a.tjurina_sum == b.tjurina_sum);
}

TEST_CASE("S12^0 has a one-dimensional singular locus of 30 lines") {
  auto c = certify_surface(member("zero", "0", "0", NumberField::rationals()));
  CHECK(c.status == CertStatus::PositiveDimensional);
  CHECK(c.dimension == 1);
  REQUIRE(c.lines.size() == 1);
  CHECK(c.lines[0].orbit_size == 30);
  // z = t = 0 is among the lines: the partials vanish on it identically
  std::vector<AlgNum> u{AlgNum(1), AlgNum(0), AlgNum(0), AlgNum(0)}, v{AlgNum(0), AlgNum(1), AlgNum(0), AlgNum(0)};
  for (int k = 0; k < 4; ++k) CHECK(restrict_to_line(partial_derivative(c.F, k), u, v).is_zero());
  CHECK(check_certificate(certificate_to_json(c)).ok);
}

TEST_CASE("certificate JSON and the evaluation-only check") {
  auto j = certificate_to_json(plus_certificate());
  CHECK(j["schema"] == kCertificateSchema);
  CHECK(j["status"] == "SUCCESS");
  CHECK(j["lambda"] == "(3+r)/384");
  CHECK(j["global_tjurina_degree"] == 640);
  auto r = check_certificate(j);
  CHECK(r.ok);
  CHECK(r.points_checked == 320);

  auto t = j;
  t["orbits"][0]["orbit_size"] = 321;
  CHECK_FALSE(check_certificate(t).ok);
  t = j;
  t["orbits"][0]["point"][2] = t["orbits"][0]["point"][2].get<std::string>() + "+1";
  CHECK_FALSE(check_certificate(t).ok);
  t = j;
  t["tjurina_sum"] = 642;
  t["global_tjurina_degree"] = 642;
  t["orbits"][0]["record"]["tjurina"] = 3;
  t["orbits"][0]["record"]["milnor"] = 3;
  t["orbits"][0]["record"]["type"] = "A3";
  CHECK_FALSE(check_certificate(t).ok);
  // a relabel with consistent sums is caught only by the jets at the point
  for (auto [type, tau] : {std::pair{"A3", 3}, std::pair{"A1", 1}}) {
    t = j;
    t["tjurina_sum"] = 320 * tau;
    t["global_tjurina_degree"] = 320 * tau;
    t["orbits"][0]["record"]["tjurina"] = tau;
    t["orbits"][0]["record"]["milnor"] = tau;
    t["orbits"][0]["record"]["type"] = type;
    auto bad = check_certificate(t);
    CHECK_FALSE(bad.ok);
    bool named = false;
    for (auto& e : bad.problems) named = named || e.find("type label") != std::string::npos;
    CHECK(named);
  }
  t = j;
  t["mu"] = "(-5+3*r)/6913";
  CHECK_FALSE(check_certificate(t).ok);
  t = j;
  t["status"] = "INCOMPLETE";
  CHECK_FALSE(check_certificate(t).ok);
}

TEST_CASE("completeness equality on mocked certificates") {
  auto j = certificate_to_json(plus_certificate());
  // an extra orbit claim breaks the equality even when everything else is consistent
  auto t = j;
  t["global_tjurina_degree"] = 642;
  auto r = check_certificate(t);
  CHECK_FALSE(r.ok);
  bool mentions = false;
  for (auto& p : r.problems) mentions = mentions || p.find("global degree") != std::string::npos;
  CHECK(mentions);
}
