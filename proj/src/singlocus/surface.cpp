#include "g29/singlocus/surface.hpp"

#include "g29/multipoly/ops.hpp"

#include <stdexcept>

namespace g29 {

SurfaceSpec surface_from_poly(std::string id, Poly F) {
  if (!F.is_homogeneous()) throw std::invalid_argument("surface equation must be homogeneous");
  FieldPtr k = F.ring()->field;
  return SurfaceSpec{std::move(id), AlgNum(k, Rational(0)), AlgNum(k, Rational(0)), k, std::move(F)};
}

Ideal jacobian_ideal(const Poly& F) {
  if (!F.is_homogeneous()) throw std::invalid_argument("Jacobian ideal of a non-homogeneous polynomial");
  std::vector<Poly> gens;
  for (int v = 0; v < F.ring()->nvars(); ++v) gens.push_back(partial_derivative(F, v));
  return Ideal(F.ring(), gens);
}

JacobianScheme jacobian_scheme_exact(const Poly& F, const GBBudget& budget) {
  auto G = buchberger(jacobian_ideal(F), MonomialOrder::grevlex(), budget);
  auto dd = projective_dimension_and_degree(G);
  JacobianScheme s;
  s.dimension = dd.dimension;
  if (dd.dimension == 0) s.degree = dd.degree;
  s.method = "exact-groebner";
  s.stats = G.stats;
  s.exact = true;
  return s;
}

JacobianScheme jacobian_scheme_modular(const Poly& F, const GBBudget& budget) {
  Ideal J = jacobian_ideal(F);
  std::uint64_t start = 2147483629ULL;
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto [p, root] = choose_prime(F.ring()->field, start);
    try {
      auto m = modular_dimension_and_degree(J, p, root, budget);
      JacobianScheme s;
      s.dimension = m.dd.dimension;
      if (m.dd.dimension == 0) s.degree = m.dd.degree;
      s.method = "modular";
      s.prime = p;
      s.generator_image = root;
      s.stats = m.stats;
      return s;
    } catch (const std::domain_error&) {
      start = p - 2;  // a denominator vanished mod p
    }
  }
  throw std::runtime_error("no usable prime for the modular Jacobian scheme");
}

std::int64_t global_tjurina_degree(const Poly& F, const GBBudget& budget) {
  auto s = jacobian_scheme_exact(F, budget);
  if (s.dimension < 0) return 0;
  if (s.dimension != 0) throw std::domain_error("singular locus is not zero-dimensional");
  return *s.degree;
}

}  // namespace g29
