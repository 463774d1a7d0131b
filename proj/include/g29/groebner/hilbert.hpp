#pragma once

#include "g29/multipoly/monomial.hpp"

#include <cstdint>
#include <vector>

namespace g29 {

/// Minimal generators of the monomial ideal, sorted by key.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of k[x_1..x_n]/(gens),
/// low degree first.
std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& gens, int nvars);

/// Krull dimension of k[x]/(gens) as the largest set of variables carrying no
/// generator; -1 when gens contain 1.
int krull_dimension_independent_sets(const std::vector<Monomial>& gens, int nvars);

/// Number of standard monomials of degree d.
std::int64_t hilbert_function(const std::vector<Monomial>& gens, int nvars, int d);

struct DimensionDegree {
  int dimension = -1;   // projective; -1 for the empty scheme
  std::int64_t degree = 0;  // leading coefficient data of the Hilbert polynomial, 0 when empty
};

/// Projective dimension and degree of Proj(k[x]/(gens)) for a homogeneous
/// leading-term ideal. Dimension comes from independent sets and is checked
/// against the pole order of the Hilbert series.
DimensionDegree projective_dimension_degree(const std::vector<Monomial>& gens, int nvars);

}  // namespace g29
