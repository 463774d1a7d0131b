#pragma once

#include "g29/exactfield/upoly.hpp"

#include <utility>
#include <vector>

namespace g29 {

/// Complete factorization over Q into monic irreducible factors with
/// multiplicities (Zassenhaus: modular factorization, Hensel lifting,
/// subset recombination). Factors are sorted by degree, then coefficients.
std::vector<std::pair<UPolyQ, int>> factor_rational(const UPolyQ& p);

bool is_irreducible_rational(const UPolyQ& p);

}  // namespace g29
