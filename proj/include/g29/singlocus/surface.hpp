#pragma once

#include "g29/groebner/groebner.hpp"
#include "g29/multipoly/poly.hpp"

#include <optional>
#include <string>

namespace g29 {

/// Member of the pencil, or any quartic-variable form with an id.
struct SurfaceSpec {
  std::string id;
  AlgNum lambda, mu;
  FieldPtr field;
  Poly F;  // homogeneous, ring x,y,z,t over `field`
};

/// A surface given directly by its equation; lambda = mu = 0.
SurfaceSpec surface_from_poly(std::string id, Poly F);

Ideal jacobian_ideal(const Poly& F);

struct JacobianScheme {
  int dimension = -1;
  std::optional<std::int64_t> degree;  // when dimension == 0
  std::string method;                  // "exact-groebner" or "modular"
  std::uint64_t prime = 0;             // modular only
  std::uint64_t generator_image = 0;   // image of the field generator mod prime
  GBStats stats;
  /// true when dimension and degree are exact; the modular route gives upper bounds
  bool exact = false;
};

/// Exact grevlex basis over the surface field.
JacobianScheme jacobian_scheme_exact(const Poly& F, const GBBudget& budget = {});
/// Grevlex basis modulo a prime with a root of the field's minimal polynomial.
/// dimension and degree bound the characteristic-zero values from above.
JacobianScheme jacobian_scheme_modular(const Poly& F, const GBBudget& budget = {});

/// Degree of the zero-dimensional Jacobian scheme by the exact route;
/// throws std::domain_error when the singular locus is positive-dimensional.
std::int64_t global_tjurina_degree(const Poly& F, const GBBudget& budget = {});

}  // namespace g29
