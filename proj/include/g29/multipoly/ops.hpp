#pragma once

#include "g29/multipoly/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace g29 {

Poly partial_derivative(const Poly& p, int var);
Poly partial_derivative(const Poly& p, const std::string& var);

/// Exact value at a point; coordinates are promoted into a common field.
AlgNum evaluate(const Poly& p, const std::vector<AlgNum>& point);

/// Replaces variables by polynomials of `target`; variables without an
/// assignment map to the variable of the same name in `target`.
Poly substitute(const Poly& p, const std::map<int, Poly>& assignments, const RingPtr& target);

/// Same polynomial in another ring with the same variable names present.
Poly change_ring(const Poly& p, const RingPtr& target);

/// Applies a field embedding to every coefficient; target ring has the same variables.
Poly map_coefficients(const Poly& p, const FieldEmbedding& emb, const RingPtr& target);

/// Determinant of the matrix of second partials.
Poly hessian_det(const Poly& p);

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);
/// Quotient when b divides a, nullopt otherwise.
std::optional<Poly> try_divide(const Poly& a, const Poly& b);

/// gcd, normalized so the grevlex leading coefficient is 1.
Poly gcd_poly(const Poly& a, const Poly& b);

/// gcd(p, dp/dv) constant for all v. A restriction-to-a-line certificate is
/// tried first; the definitional gcd test runs when it is inconclusive.
bool is_squarefree(const Poly& p);
bool is_squarefree_by_gcd(const Poly& p);

/// Univariate restriction s -> p(a + s b).
UPolyK restrict_to_line(const Poly& p, const std::vector<AlgNum>& a, const std::vector<AlgNum>& b);

}  // namespace g29
