#pragma once

#include "g29/exactfield/extension.hpp"
#include "g29/groebner/groebner.hpp"

#include <array>
#include <vector>

namespace g29 {

/// Galois class over K of common zeros of a zero-dimensional ideal of K[v0, v1]:
/// the points where factor(v1 + shift*v0) = 0. The linear form separates all
/// solutions, so the class has factor.degree() points.
struct SolutionClass {
  int shift = 0;
  UPolyK factor;
  FieldPtr field;               // K(root)
  FieldEmbedding embedding;     // K -> field
  std::array<AlgNum, 2> point;  // representative
  int size() const { return factor.degree(); }
};

/// Solutions from a grevlex basis by FGLM to lex in (v0, w), w = v1 + shift*v0,
/// trying shifts until w separates. Throws std::invalid_argument when the ideal
/// is not zero-dimensional.
std::vector<SolutionClass> solve_bivariate(const GroebnerBasis& G);

}  // namespace g29
