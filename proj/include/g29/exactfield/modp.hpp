#pragma once

#include "g29/exactfield/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace g29::modp {

/// Primes handled here are below 2^31 so products fit in 64 bits.
using Word = std::uint64_t;
using PolyP = std::vector<Word>;  // low degree first, trimmed

Word add(Word a, Word b, Word p);
Word sub(Word a, Word b, Word p);
Word mul(Word a, Word b, Word p);
Word pow(Word a, std::uint64_t e, Word p);
Word inv(Word a, Word p);
bool is_prime(std::uint64_t n);

/// Reduction of a p-integral rational; nullopt when p divides the denominator.
std::optional<Word> reduce(const Rational& q, Word p);
Word reduce(const Integer& z, Word p);

void trim(PolyP& a);
int degree(const PolyP& a);
PolyP add(const PolyP& a, const PolyP& b, Word p);
PolyP sub(const PolyP& a, const PolyP& b, Word p);
PolyP mul(const PolyP& a, const PolyP& b, Word p);
PolyP scale(const PolyP& a, Word s, Word p);
void divmod(const PolyP& a, const PolyP& b, Word p, PolyP& q, PolyP& r);
PolyP rem(const PolyP& a, const PolyP& b, Word p);
PolyP gcd(PolyP a, PolyP b, Word p);
PolyP monic(const PolyP& a, Word p);
PolyP derivative(const PolyP& a, Word p);
PolyP powmod(const PolyP& base, const Integer& e, const PolyP& m, Word p);

/// Monic irreducible factors of a squarefree polynomial (p odd).
std::vector<PolyP> factor_squarefree(const PolyP& f, Word p, std::mt19937_64& rng);

/// Roots of f in F_p, ascending.
std::vector<Word> roots(const PolyP& f, Word p);

}  // namespace g29::modp
