#include "g29/groebner/solve.hpp"

#include <stdexcept>

namespace g29 {

namespace {

UPolyK univariate(const Poly& p, int v) {
  const FieldPtr& k = p.ring()->field;
  std::vector<AlgNum> c(std::max(0, p.degree_in(v)) + 1, AlgNum(k, Rational(0)));
  for (auto& t : p.terms()) c[t.m.e[v]] += t.c;
  return UPolyK(k, c);
}

bool only_last(const Poly& p) {
  for (auto& t : p.terms())
    if (t.m.e[0]) return false;
  return true;
}

// false when w = v1 + shift*v0 fails to separate
bool try_shift(const GroebnerBasis& G, int shift, std::vector<SolutionClass>& out) {
  const FieldPtr& K = G.ring->field;
  auto r2 = Ring::make({G.ring->vars[0], "w"}, K);
  Poly v0 = Poly::variable(G.ring, 0), v1 = Poly::variable(G.ring, 1);
  auto L = fglm(G, MonomialOrder::lex(), r2, {v0, v1 + v0 * AlgNum(shift)});
  if (L.is_unit()) return true;
  const Poly* hw = nullptr;
  for (auto& g : L.basis)
    if (only_last(g)) hw = &g;
  if (!hw) throw std::logic_error("zero-dimensional lex basis without eliminant");
  std::vector<SolutionClass> found;
  for (auto& [q, mult] : factor_over_field(squarefree_part(univariate(*hw, 1)))) {
    auto adj = adjoin_root(q, "a");
    // fiber over the root: gcd of the basis elements as polynomials in v0
    UPolyK g(adj.field);
    for (auto& b : L.basis) {
      std::vector<AlgNum> c(b.degree_in(0) + 1, AlgNum(adj.field, Rational(0)));
      for (auto& t : b.terms()) c[t.m.e[0]] += adj.embedding.apply(t.c) * adj.root.pow(t.m.e[1]);
      UPolyK u(adj.field, c);
      g = g.is_zero() ? u : (u.is_zero() ? g : gcd(g, u));
    }
    g = squarefree_part(g);  // fibers of non-reduced points are powers
    if (g.degree() != 1) return false;
    AlgNum x0 = -(g.coeff(0) / g.coeff(1));
    found.push_back(SolutionClass{shift, q, adj.field, adj.embedding, {x0, adj.root - AlgNum(shift) * x0}});
  }
  out = std::move(found);
  return true;
}

}  // namespace

std::vector<SolutionClass> solve_bivariate(const GroebnerBasis& G) {
  if (G.ring->nvars() != 2) throw std::invalid_argument("solve_bivariate needs two variables");
  if (!standard_monomials(G)) throw std::invalid_argument("ideal is not zero-dimensional");
  std::vector<SolutionClass> out;
  for (int shift : {0, 1, 2, -1, 3, -2, 5, -3, 7, 11, -13})
    if (try_shift(G, shift, out)) return out;
  throw std::runtime_error("no separating linear form found");
}

}  // namespace g29
