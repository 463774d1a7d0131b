#include "doctest.h"

#include "g29/multipoly/invariants.hpp"
#include "g29/multipoly/ops.hpp"
#include "g29/refgroup/projective.hpp"

using namespace g29;

namespace {
FieldPtr QI() { return gaussian_field(); }
AlgNum I() { return AlgNum::generator(QI()); }
std::vector<AlgNum> v4(long a, long b, long c, long d) { return {AlgNum(a), AlgNum(b), AlgNum(c), AlgNum(d)}; }
Group s3_perms() {
  auto g = g29_generators();
  return Group::closure({g[0], g[1]});
}
}  // namespace

TEST_CASE("G29 order, center, reflections") {
  const Group& g = g29::g29();
  CHECK(g.order() == 7680);
  auto gens = g29_generators();
  CHECK(gens[3] * gens[3] == Matrix4::identity(QI()));
  for (const auto& s : gens) {
    CHECK(s * s == Matrix4::identity(QI()));
    CHECK(s.rank_minus_identity() == 1);
  }
  Group z = center(g);
  CHECK(z.order() == 4);
  for (AlgNum c : {AlgNum(1), I(), AlgNum(-1), -I()}) CHECK(z.contains(Matrix4::scalar(c.in_field(QI()))));
  CHECK(reflecting_hyperplanes(g).size() == 40);
  auto refl = reflections(g);
  for (const auto& s : gens) CHECK(std::find(refl.begin(), refl.end(), s) != refl.end());
  // conjugation stability
  CHECK(gens[2].conjugate() == gens[0] * gens[2] * gens[0]);
  for (const auto& s : gens) CHECK(g.contains(s.conjugate()));
}

TEST_CASE("closure idempotence and 2-smooth denominators") {
  const Group& g = g29::g29();
  for (const auto& e : g.elements())
    for (const auto& a : e.a)
      for (const auto& c : a.coeffs()) {
        Integer d = c.get_den();
        while (d % 2 == 0) d /= 2;
        CHECK(d == 1);
      }
  Group again = Group::closure({g.elements()[17], g.elements()[1234], g29_generators()[0], g29_generators()[3]});
  CHECK(again.order() <= g.order());
  for (const auto& e : again.elements()) CHECK(g.contains(e));
}

TEST_CASE("small groups by brute force") {
  Group s3 = s3_perms();
  CHECK(s3.order() == 6);
  CHECK(center(s3).order() == 1);
  Group c2 = Group::closure({g29_generators()[0]});
  CHECK(center(c2).order() == 2);
  auto r = reflections(c2);
  REQUIRE(r.size() == 1);
  auto h = reflecting_hyperplanes(c2);
  REQUIRE(h.size() == 1);
  CHECK(h[0][0] == AlgNum(1));
  CHECK(h[0][1] == AlgNum(-1));
  CHECK(h[0][2].is_zero());
}

TEST_CASE("invariance") {
  const auto& inv = invariants_q();
  const Group& g = g29_invariant_frame();
  CHECK(g.order() == 7680);
  CHECK(is_invariant(inv.f1, g));
  CHECK(is_invariant(inv.f2, g));
  CHECK(is_invariant(inv.f3, g));
  CHECK_FALSE(is_invariant(parse_poly("x^4", xyzt_ring()), g));
  CHECK(is_invariant(parse_poly("5", xyzt_ring()), g));
  // the displayed matrices themselves do not preserve f1
  CHECK_FALSE(is_invariant(inv.f1, g29::g29()));
  Matrix4 h = invariant_frame();
  CHECK(h * h == Matrix4::identity(QI()));
}

TEST_CASE("point and line orbits") {
  Group s3 = s3_perms();
  auto o = orbit_point(s3, ProjectivePoint::normalized(v4(1, 0, 0, 0)));
  CHECK(o.size() == 3);
  CHECK(orbit_point(s3, ProjectivePoint::normalized(v4(1, 1, 1, 1))).size() == 1);
  // line x = y = 0 is spanned by e3, e4
  ProjectiveLine l = ProjectiveLine::through(v4(0, 0, 1, 0), v4(0, 0, 0, 1));
  CHECK(l.plucker_relation_holds());
  CHECK(orbit_line(s3, l).size() == 3);
  Group trivial = Group::from_elements({}, {Matrix4::identity(QI())});
  ProjectiveLine zt = ProjectiveLine::through(v4(1, 0, 0, 0), v4(0, 1, 0, 0));
  CHECK(orbit_line(trivial, zt).size() == 1);
  auto lines = orbit_line(g29_invariant_frame(), zt);
  CHECK(lines.size() == 30);
  for (const auto& x : lines) CHECK(x.plucker_relation_holds());
  CHECK(lines.size() * stabilizer_order(g29_invariant_frame(), zt) == 7680);
  ProjectivePoint p = ProjectivePoint::normalized(v4(1, 2, 0, 0));
  CHECK(orbit_point(g29::g29(), p).size() * stabilizer_order(g29::g29(), p) == 7680);
}
