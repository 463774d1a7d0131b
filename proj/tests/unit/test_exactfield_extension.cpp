#include "doctest.h"

#include "g29/exactfield/complex_ball.hpp"
#include "g29/exactfield/extension.hpp"

#include <cmath>

using namespace g29;

TEST_CASE("adjoin i to Q(sqrt3)") {
  auto q3 = NumberField::create(UPolyQ{-3, 0, 1}, "r");
  UPolyK t2p1 = UPolyK::from_rational(q3, UPolyQ{1, 0, 1});
  Adjunction adj = adjoin_root(t2p1, "w");
  CHECK(adj.field->degree() == 4);
  AlgNum i = adj.root;
  AlgNum r = adj.embedding.apply(AlgNum::generator(q3));
  CHECK(i * i == AlgNum(-1));
  CHECK(r * r == AlgNum(3));
  // independent oracle: (i + r) is a root of x^4 - 4x^2 + 16
  AlgNum s = i + r;
  CHECK(s.pow(4) - 4 * s.pow(2) + AlgNum(16) == AlgNum(0));
  CHECK(minimal_polynomial_of(s) == UPolyQ{16, 0, -4, 0, 1});
}

TEST_CASE("adjoin trivial and rational cases") {
  auto q = NumberField::rationals();
  auto a = adjoin_root(UPolyK::from_rational(q, UPolyQ{-5, 1}));
  CHECK(a.field->degree() == 1);
  CHECK(a.root == AlgNum(5));
  auto b = adjoin_root(UPolyK::from_rational(q, UPolyQ{-3, 0, 1}));
  CHECK(b.field->degree() == 2);
  CHECK(b.root * b.root == AlgNum(3));
  CHECK_THROWS_AS(adjoin_root(UPolyK::from_rational(q, UPolyQ{1, 2, 1})), std::invalid_argument);
}

TEST_CASE("adjoin rejects reducible polynomial over the base") {
  auto q3 = NumberField::create(UPolyQ{-3, 0, 1}, "r");
  // t^2 - 12 = (t - 2r)(t + 2r) over Q(sqrt3)
  CHECK_THROWS_AS(adjoin_root(UPolyK::from_rational(q3, UPolyQ{-12, 0, 1})), std::invalid_argument);
}

TEST_CASE("factorization over Q(i)") {
  auto qi = NumberField::create(UPolyQ{1, 0, 1}, "i");
  AlgNum i = AlgNum::generator(qi);
  // x^4 + 4 = (x-1-i)(x-1+i)(x+1-i)(x+1+i)
  auto fs = factor_over_field(UPolyK::from_rational(qi, UPolyQ{4, 0, 0, 0, 1}));
  CHECK(fs.size() == 4);
  for (auto& [f, e] : fs) {
    CHECK(f.degree() == 1);
    CHECK(e == 1);
  }
  // x^2 + 1 splits, x^2 - 3 does not
  CHECK(factor_over_field(UPolyK::from_rational(qi, UPolyQ{1, 0, 1})).size() == 2);
  CHECK(is_irreducible_over_field(UPolyK::from_rational(qi, UPolyQ{-3, 0, 1})));
  // repeated factor
  UPolyK g = UPolyK(qi, {i, AlgNum(1)});
  auto h = factor_over_field(g * g * UPolyK::from_rational(qi, UPolyQ{-2, 0, 1}));
  REQUIRE(h.size() == 2);
  CHECK(((h[0].second == 2 && h[0].first == g) || (h[1].second == 2 && h[1].first == g)));
}

TEST_CASE("rebase a field on a different generator") {
  auto qi = NumberField::create(UPolyQ{1, 0, 1}, "i");
  AlgNum i = AlgNum::generator(qi);
  auto iso = rebase_field(i + 1, "b");
  REQUIRE(iso.has_value());
  CHECK(iso->to->minimal_polynomial() == UPolyQ{2, -2, 1});
  CHECK(iso->apply(i) * iso->apply(i) == AlgNum(-1));
  CHECK_FALSE(rebase_field(AlgNum(qi, Rational(3)), "c").has_value());
}

TEST_CASE("complex embeddings") {
  auto q3 = NumberField::create(UPolyQ{-3, 0, 1}, "r");
  AlgNum r = AlgNum::generator(q3);
  ComplexBall b = embed_complex(r, 0, 64);
  CHECK(b.re().to_double() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(mpfr_cmp_d(b.rad().get(), std::ldexp(1.0, -60)) < 0);
  CHECK(embed_complex(r, 1, 64).re().to_double() < 0);

  auto qi = NumberField::create(UPolyQ{1, 0, 1}, "i");
  ComplexBall bi = embed_complex(AlgNum::generator(qi), 0, 128);
  CHECK(bi.im().to_double() == doctest::Approx(1.0));
  CHECK(std::abs(bi.re().to_double()) < 1e-30);

  ComplexBall q = embed_complex(AlgNum(make_rational(1, 45)), 0, 128);
  CHECK(q.re().to_double() == doctest::Approx(1.0 / 45));
  CHECK(mpfr_cmp_d(q.rad().get(), std::ldexp(1.0, -125)) < 0);
  CHECK(mpfr_zero_p(embed_complex(AlgNum(make_rational(3, 8)), 0, 64).rad().get()));

  // ring homomorphism up to enclosure
  AlgNum a = r * 2 + 1, c = r - 7;
  for (int k = 0; k < 2; ++k) {
    CHECK(embed_complex(a + c, k).overlaps(embed_complex(a, k) + embed_complex(c, k)));
    CHECK(embed_complex(a * c, k).overlaps(embed_complex(a, k) * embed_complex(c, k)));
  }
  // radius shrinks with precision
  CHECK(mpfr_cmp(embed_complex(a, 0, 256).rad().get(), embed_complex(a, 0, 64).rad().get()) < 0);
}

TEST_CASE("designated root encloses a zero of p") {
  auto q3 = NumberField::create(UPolyQ{-3, 0, 1}, "r");
  UPolyK p = UPolyK::from_rational(q3, UPolyQ{1, 0, 1});
  Adjunction adj = adjoin_root(p, "w");
  auto m = minimal_polynomial_of(adj.root);
  for (int k = 0; k < adj.field->degree(); ++k) {
    ComplexBall z = embed_complex(adj.root, k, 128);
    CHECK(eval_ball(m, z).contains_zero());
  }
}
