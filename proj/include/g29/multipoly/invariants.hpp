#pragma once

#include "g29/multipoly/poly.hpp"

namespace g29 {

/// Ring Q[x, y, z, t].
RingPtr xyzt_ring(FieldPtr field = NumberField::rationals());

/// Sum of the distinct monomials in the orbit of m under permutations of x, y, z, t.
Poly sigma4(const Monomial& m, const RingPtr& ring);

struct Invariants {
  Poly f1, f2, f3;
};

/// The degree 4, 8 and 12 fundamental invariants over the given ring.
Invariants build_invariants(const RingPtr& ring);
const Invariants& invariants_q();

/// f3 + lambda f2 f1 + mu f1^3 over `field`, which must contain lambda and mu.
Poly pencil_polynomial(const AlgNum& lambda, const AlgNum& mu, const FieldPtr& field);

}  // namespace g29
