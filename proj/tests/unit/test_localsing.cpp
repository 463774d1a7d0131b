#include "doctest.h"

#include "g29/localsing/local.hpp"
#include "g29/multipoly/invariants.hpp"
#include "g29/multipoly/ops.hpp"

#include <random>

using namespace g29;

namespace {

RingPtr abc() {
  static RingPtr r = Ring::make({"a", "b", "c"});
  return r;
}
LocalGerm G(const std::string& s) { return germ_from_poly(parse_poly(s, abc())); }

std::vector<Poly> partials(const Poly& g) {
  std::vector<Poly> out;
  for (int v = 0; v < g.ring()->nvars(); ++v) out.push_back(partial_derivative(g, v));
  return out;
}

// g(M u) for an integer matrix M
Poly transform(const Poly& g, const std::array<std::array<int, 3>, 3>& M) {
  std::map<int, Poly> sub;
  for (int i = 0; i < 3; ++i) {
    Poly row(g.ring());
    for (int j = 0; j < 3; ++j) row += Poly::variable(g.ring(), j) * AlgNum(M[i][j]);
    sub.emplace(i, row);
  }
  return substitute(g, sub, g.ring());
}

}  // namespace

TEST_CASE("multiplicity and Hessian corank") {
  CHECK(multiplicity(G("a^2+b^2+c^3")) == 2);
  CHECK(multiplicity(G("abc + a^4 + b^4 + c^4")) == 3);
  CHECK(hessian_corank(G("a^2+b^2+c^2")) == 0);
  CHECK(hessian_corank(G("a^2+b^2+c^3")) == 1);
  CHECK(hessian_corank(G("abc + a^4 + b^4 + c^4")) == 3);
  CHECK(hessian_corank(G("a*b + c^3")) == 1);
  CHECK_THROWS(G("a + 1"));
}

TEST_CASE("Brieskorn Milnor table") {
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 5; ++b)
      for (int c = 2; c <= 5; ++c) {
        auto g = G("a^" + std::to_string(a) + " + b^" + std::to_string(b) + " + c^" + std::to_string(c));
        int mu = milnor_number(g);
        CHECK(mu == (a - 1) * (b - 1) * (c - 1));
        CHECK(tjurina_number(g) == mu);  // quasi-homogeneous
      }
}

TEST_CASE("T444 model: Milnor 11, Tjurina 10") {
  auto g = G("abc + a^4 + b^4 + c^4");
  auto mu = local_length(partials(g.g));
  CHECK(mu.value == 11);
  std::vector<Poly> tj{g.g};
  for (auto& p : partials(g.g)) tj.push_back(p);
  auto tau = local_length(tj);
  CHECK(tau.value == 10);
  // linear-algebra oracle at the certifying truncation and one beyond
  CHECK(truncated_length(partials(g.g), mu.truncation) == 11);
  CHECK(truncated_length(partials(g.g), mu.truncation + 2) == 11);
  CHECK(truncated_length(tj, tau.truncation + 1) == 10);
}

TEST_CASE("Mora agrees with the truncated linear-algebra oracle") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> co(-3, 3);
  for (int trial = 0; trial < 6; ++trial) {
    // A_k-ish and random higher-order perturbations of isolated germs
    std::string s = "a^2 + b^3 + c^" + std::to_string(3 + trial % 3);
    s += " + (" + std::to_string(co(rng)) + ")*a*b^2 + (" + std::to_string(co(rng)) + ")*b^2*c^2";
    s += " + (" + std::to_string(co(rng)) + ")*a*c^3";
    auto g = G(s);
    auto L = local_length(partials(g.g));
    CHECK(truncated_length(partials(g.g), L.truncation) == L.value);
    CHECK(truncated_length(partials(g.g), L.truncation + 3) == L.value);
  }
}

TEST_CASE("non-isolated germs are reported") {
  CHECK_THROWS_AS(milnor_number(G("a^2 + b^2"), 12), NonIsolated);
}

TEST_CASE("Milnor number is invariant under unimodular coordinate changes") {
  std::vector<std::array<std::array<int, 3>, 3>> mats = {
      {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}, {{{1, 0, 0}, {2, 1, 0}, {1, -1, 1}}}, {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}},
      {{{1, 2, 3}, {0, 1, 4}, {0, 0, 1}}}, {{{1, 1, 1}, {1, 2, 1}, {1, 1, 2}}}};
  for (auto& M : mats) {
    int det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
              M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    REQUIRE((det == 1 || det == -1));
    CHECK(milnor_number(germ_from_poly(transform(parse_poly("a^2+b^2+c^3", abc()), M))) == 2);
    CHECK(milnor_number(germ_from_poly(transform(parse_poly("abc+a^4+b^4+c^4", abc()), M))) == 11);
  }
}

TEST_CASE("classifier") {
  CHECK(analyze(G("a^2+b^2+c^3")).type.to_string() == "A2");
  CHECK(analyze(G("a^3+b^3+c^2")).type.to_string() == "D4");
  CHECK(analyze(G("abc+a^4+b^4+c^4")).type.to_string() == "T444");
  for (int k = 1; k <= 6; ++k) {
    auto r = analyze(G("a^2+b^2+c^" + std::to_string(k + 1)));
    CHECK(r.type.to_string() == "A" + std::to_string(k));
    CHECK(r.milnor == k);
    CHECK(r.tjurina == k);
  }
  // scaling the germ changes nothing
  CHECK(analyze(G("-7/3*a^3 - 7/3*b^3 - 7/3*c^2")).type.to_string() == "D4");
  CHECK(analyze(G("5*abc+5*a^4+5*b^4+5*c^4")).type.to_string() == "T444");
  // D4 in disguise: kernel not aligned with coordinates
  CHECK(analyze(germ_from_poly(transform(parse_poly("a^3+b^3+c^2", abc()), {{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}})))
            .type.to_string() == "D4");
  // E6 = a^2 + b^3 + c^4: corank 2, mu 6 -> outside the recognised list
  auto e6 = analyze(G("a^2+b^3+c^4"));
  CHECK(e6.type.to_string() == "X");
  CHECK(e6.milnor == 6);
  // a mult-4 germ with smooth tangent cone
  auto q = analyze(G("a^4+b^4+c^4"));
  CHECK(q.type.to_string() == "X");
  CHECK(q.milnor == 27);
  CHECK(q.tangent_cone_smooth == std::optional<bool>(true));
  CHECK(TypeLabel::parse("A3") == TypeLabel{TypeLabel::Kind::A, 3});
  CHECK_THROWS(TypeLabel::parse("B2"));
}

TEST_CASE("triangle cubics") {
  auto r = abc();
  CHECK(is_triangle_cubic(parse_poly("abc", r)));
  CHECK(is_triangle_cubic(parse_poly("(a+b)*(b+c)*(a+c)", r)));
  CHECK_FALSE(is_triangle_cubic(parse_poly("a^3+b^3+c^3", r)));        // smooth
  CHECK_FALSE(is_triangle_cubic(parse_poly("c*(a*c - b^2)", r)));       // conic and tangent line
  CHECK_FALSE(is_triangle_cubic(parse_poly("c*(a*c - b^2 + a^2)", r)));  // conic and secant line
  CHECK_FALSE(is_triangle_cubic(parse_poly("a*b*(a+b)", r)));           // concurrent lines
  CHECK_FALSE(is_triangle_cubic(parse_poly("b^2*c - a^3 - a^2*c", r)));  // nodal
  CHECK_FALSE(is_triangle_cubic(parse_poly("b^2*c - a^3", r)));          // cuspidal
  CHECK(binary_cubic_nondegenerate(1, 0, 0, 1));
  CHECK_FALSE(binary_cubic_nondegenerate(1, 0, 0, 0));
}

TEST_CASE("tangent cones") {
  CHECK(tangent_cone_smooth(G("a^2+b^2+c^2")));
  CHECK_FALSE(tangent_cone_smooth(G("abc + a^4")));
}

TEST_CASE("germs of projective surfaces") {
  auto R4 = xyzt_ring();
  Poly quadric = parse_poly("x^2+y^2+z^2-t^2", R4);
  auto q = make_germ(quadric, ProjectivePoint::normalized({AlgNum(1), AlgNum(0), AlgNum(0), AlgNum(1)}));
  CHECK(q.chart == 0);
  CHECK(q.g.coefficient(Monomial()).is_zero());
  CHECK(multiplicity(q) == 1);

  Poly cayley = parse_poly("xyz+xyt+xzt+yzt", R4);
  auto c = make_germ(cayley, ProjectivePoint::normalized({AlgNum(1), AlgNum(0), AlgNum(0), AlgNum(0)}));
  CHECK(multiplicity(c) == 2);
  CHECK(hessian_corank(c) == 0);
  CHECK(analyze(c).type.to_string() == "A1");
  CHECK_THROWS_AS(make_germ(cayley, ProjectivePoint::normalized({AlgNum(1), AlgNum(1), AlgNum(1), AlgNum(1)})),
                  NotOnSurface);
}
