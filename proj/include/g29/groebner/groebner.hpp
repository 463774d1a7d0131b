#pragma once

#include "g29/groebner/engine.hpp"
#include "g29/groebner/hilbert.hpp"
#include "g29/multipoly/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g29 {

struct Ideal {
  RingPtr ring;
  std::vector<Poly> generators;  // zero generators are dropped

  Ideal(RingPtr r, std::vector<Poly> gens);
  bool is_homogeneous() const;
};

struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Poly> basis;  // monic, ascending leading monomials; reduced from buchberger
  GBStats stats;

  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant(); }
};

GroebnerBasis buchberger(const Ideal& I, MonomialOrder order, const GBBudget& budget = {});

/// Minimal basis from polynomials already known to form a Gröbner basis for
/// `order`: monic, redundant leading monomials dropped, tails left unreduced.
GroebnerBasis minimal_basis(const RingPtr& ring, std::vector<Poly> gb, MonomialOrder order);

/// Standard monomials of a zero-dimensional (affine) basis; nullopt when the
/// quotient is infinite.
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& G);

/// Basis conversion for zero-dimensional ideals by linear algebra in the
/// quotient (FGLM). Throws invalid_argument when G is not zero-dimensional.
GroebnerBasis fglm(const GroebnerBasis& G, MonomialOrder target);
/// Same for the ideal {f in target_ring : f(images) in I}; images[i] is the
/// element of G's ring that variable i of target_ring maps to. A linear change
/// of coordinates thus costs one quotient computation.
GroebnerBasis fglm(const GroebnerBasis& G, MonomialOrder target, const RingPtr& target_ring,
                   const std::vector<Poly>& images);

Poly normal_form(const Poly& p, const GroebnerBasis& G);
bool ideal_contains(const GroebnerBasis& G, const Poly& p);

/// Generators of I ∩ k[remaining variables], in the ring of the remaining variables.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& front_variables, const GBBudget& budget = {});

/// Dimension and degree of Proj(R/I) for homogeneous I via a grevlex basis.
DimensionDegree projective_dimension_and_degree(const Ideal& I, const GBBudget& budget = {});
DimensionDegree projective_dimension_and_degree(const GroebnerBasis& G);

/// Reduction of I modulo a prime: the field generator maps to `alpha_image`,
/// which must be a root of its minimal polynomial mod p. Throws when a
/// coefficient denominator vanishes mod p.
std::vector<GPoly<ModpDomain>> reduce_mod_p(const Ideal& I, std::uint64_t p, std::uint64_t alpha_image);

struct ModularHilbert {
  std::uint64_t prime = 0;
  std::uint64_t alpha_image = 0;
  DimensionDegree dd;
  GBStats stats;
};

/// Grevlex Gröbner basis of I mod p and the resulting dimension and degree.
/// The mod-p Hilbert function dominates the characteristic-zero one in every
/// degree, so dd.dimension and (when both are zero-dimensional) dd.degree are
/// upper bounds for those of I.
ModularHilbert modular_dimension_and_degree(const Ideal& I, std::uint64_t p, std::uint64_t alpha_image,
                                            const GBBudget& budget = {});

/// (p, root): the largest prime <= start at which the field's minimal
/// polynomial is squarefree and has a root; the smallest root is taken.
std::pair<std::uint64_t, std::uint64_t> choose_prime(const FieldPtr& field, std::uint64_t start = 2147483629ULL);

}  // namespace g29
