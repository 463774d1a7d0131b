#include "g29/multipoly/invariants.hpp"

#include "g29/multipoly/ops.hpp"

#include <algorithm>
#include <set>

namespace g29 {

RingPtr xyzt_ring(FieldPtr field) { return Ring::make({"x", "y", "z", "t"}, std::move(field)); }

Poly sigma4(const Monomial& m, const RingPtr& ring) {
  if (ring->nvars() != 4) throw std::invalid_argument("sigma4 needs a ring in four variables");
  std::array<int, 4> perm{0, 1, 2, 3};
  std::set<std::uint64_t> seen;
  std::vector<Term> terms;
  do {
    Monomial r;
    for (int i = 0; i < 4; ++i) r.e[perm[i]] = m.e[i];
    if (seen.insert(r.key()).second) terms.push_back(Term{r, AlgNum(ring->field, Rational(1))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Poly(ring, std::move(terms));
}

namespace {

Monomial mono(int a, int b, int c = 0, int d = 0) {
  Monomial m;
  m.e[0] = static_cast<std::uint8_t>(a);
  m.e[1] = static_cast<std::uint8_t>(b);
  m.e[2] = static_cast<std::uint8_t>(c);
  m.e[3] = static_cast<std::uint8_t>(d);
  return m;
}

}  // namespace

Invariants build_invariants(const RingPtr& ring) {
  auto S = [&](int a, int b, int c = 0, int d = 0) { return sigma4(mono(a, b, c, d), ring); };
  auto k = [&](long v) { return AlgNum(ring->field, Rational(v)); };
  Invariants inv{Poly(ring), Poly(ring), Poly(ring)};
  inv.f1 = S(4, 0) - k(6) * S(2, 2);
  inv.f2 = S(8, 0) + k(4) * S(6, 2) + k(6) * S(4, 4) - k(20) * S(4, 2, 2) + k(152) * S(2, 2, 2, 2);
  inv.f3 = S(8, 2, 2) - S(6, 4, 2) + k(2) * S(6, 2, 2, 2) - k(2) * S(4, 4, 4) + k(2) * S(4, 4, 2, 2);
  return inv;
}

const Invariants& invariants_q() {
  static const Invariants inv = build_invariants(xyzt_ring());
  return inv;
}

Poly pencil_polynomial(const AlgNum& lambda, const AlgNum& mu, const FieldPtr& field) {
  auto R = xyzt_ring(field);
  const auto& inv = invariants_q();
  Poly f1 = change_ring(inv.f1, R), f2 = change_ring(inv.f2, R), f3 = change_ring(inv.f3, R);
  return f3 + lambda.in_field(field) * (f2 * f1) + mu.in_field(field) * f1.pow(3);
}

}  // namespace g29
