#pragma once

#include "g29/exactfield/upoly_k.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace g29 {

/// Field homomorphism K -> L fixed by the image of K's generator.
struct FieldEmbedding {
  FieldPtr from;
  FieldPtr to;
  AlgNum image;  // image of the generator of `from`, an element of `to`

  static FieldEmbedding identity(const FieldPtr& k);
  AlgNum apply(const AlgNum& a) const;
  UPolyK apply(const UPolyK& p) const;
  FieldEmbedding then(const FieldEmbedding& next) const;
};

/// Monic irreducible factors over K with multiplicities. Over Q this is
/// Zassenhaus; over an extension it uses the norm method (shift until the
/// norm is squarefree, factor the norm over Q, pull factors back by gcd).
std::vector<std::pair<UPolyK, int>> factor_over_field(const UPolyK& p);

bool is_irreducible_over_field(const UPolyK& p);

struct Adjunction {
  FieldPtr field;           // absolute field L = K(root)
  FieldEmbedding embedding; // K -> L
  AlgNum root;              // designated root of p in L
  bool certified = true;    // irreducibility of p over K was proven
};

/// L = K[x]/(p) as an absolute extension of Q through a primitive element.
/// Throws std::invalid_argument when p is constant, not squarefree, or
/// reducible over K.
Adjunction adjoin_root(const UPolyK& p, const std::string& symbol = "a");

/// Re-presents L with gamma as generator when gamma generates L.
/// Returns the isomorphism L -> Q(gamma), or nullopt when deg(gamma) < deg(L).
std::optional<FieldEmbedding> rebase_field(const AlgNum& gamma, const std::string& symbol);

}  // namespace g29

namespace g29 {

struct Compositum {
  FieldPtr field;
  FieldEmbedding from_a, from_b;
};

/// A field holding a and b together; a itself when b already embeds in it.
/// The embedding of b uses the first lowest-degree factor of b's minimal
/// polynomial over a, so it is one fixed choice among the conjugate ones.
Compositum compositum(const FieldPtr& a, const FieldPtr& b, const std::string& symbol = "c");

}  // namespace g29
