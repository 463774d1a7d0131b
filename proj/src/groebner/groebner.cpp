#include "g29/groebner/groebner.hpp"

#include "g29/exactfield/modp.hpp"
#include "g29/multipoly/ops.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace g29 {

Ideal::Ideal(RingPtr r, std::vector<Poly> gens) : ring(std::move(r)) {
  for (auto& g : gens) {
    if (!g.ring()->same_as(*ring)) throw RingMismatch();
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  for (auto& g : generators)
    if (!g.is_homogeneous()) return false;
  return true;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (auto& g : basis) out.push_back(g.leading(order).m);
  return out;
}

namespace {

using XP = GPoly<ExactDomain>;

XP to_engine(const Poly& f, const FieldPtr& field) {
  XP r;
  for (auto& t : f.terms()) {
    r.m.push_back(t.m);
    r.c.push_back(t.c.in_field(field));
  }
  return r;
}

Poly from_engine(const XP& f, const RingPtr& ring) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < f.size(); ++k) terms.push_back(Term{f.m[k], f.c[k]});
  return Poly(ring, std::move(terms));
}

}  // namespace

GroebnerBasis buchberger(const Ideal& I, MonomialOrder order, const GBBudget& budget) {
  const int n = I.ring->nvars();
  std::vector<XP> in;
  for (auto& g : I.generators) in.push_back(to_engine(g, I.ring->field));
  if (order.kind() != MonomialOrder::Kind::Grevlex && in.size() > 1) {
    // a grevlex basis first is usually far cheaper and makes a good input
    GBEngine<ExactDomain> pre(ExactDomain{I.ring->field}, n, MonomialOrder::grevlex(), budget);
    in = pre.run(std::move(in));
    GroebnerBasis P;
    P.ring = I.ring;
    for (auto& f : in) P.basis.push_back(from_engine(f, I.ring));
    P.stats = pre.stats();
    if (standard_monomials(P)) {
      auto G = fglm(P, order);
      G.stats = P.stats;
      return G;
    }
  }
  GBEngine<ExactDomain> eng(ExactDomain{I.ring->field}, n, order, budget);
  auto out = eng.run(std::move(in));
  GroebnerBasis G;
  G.ring = I.ring;
  G.order = order;
  for (auto& f : out) G.basis.push_back(from_engine(f, I.ring));
  G.stats = eng.stats();
  return G;
}

GroebnerBasis minimal_basis(const RingPtr& ring, std::vector<Poly> gb, MonomialOrder order) {
  GroebnerBasis G;
  G.ring = ring;
  G.order = order;
  std::vector<Poly> kept;
  for (auto& g : gb) {
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      G.basis = {Poly::constant(ring, AlgNum(ring->field, Rational(1)))};
      return G;
    }
    kept.push_back(g * g.leading(order).c.inverse());
  }
  std::vector<Monomial> lm;
  for (auto& g : kept) lm.push_back(g.leading(order).m);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < kept.size() && !redundant; ++j)
      if (j != i && lm[j].divides(lm[i]) && (lm[j] != lm[i] || j < i)) redundant = true;
    if (!redundant) G.basis.push_back(kept[i]);
  }
  std::sort(G.basis.begin(), G.basis.end(),
            [&](const Poly& a, const Poly& b) { return order.compare(a.leading(order).m, b.leading(order).m, ring->nvars()) < 0; });
  return G;
}

std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& G) {
  const int n = G.ring->nvars();
  if (G.is_unit()) return std::vector<Monomial>{};
  auto lms = G.leading_monomials();
  for (int v = 0; v < n; ++v) {
    bool pure = false;
    for (auto& m : lms)
      if (m.e[v] && m.degree() == m.e[v]) pure = true;
    if (!pure) return std::nullopt;
  }
  auto standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<Monomial> out;
  if (!standard(Monomial())) return out;
  std::set<std::uint64_t> seen{Monomial().key()};
  out.push_back(Monomial());
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int v = 0; v < n; ++v) {
      Monomial m = out[k] * Monomial::var(v);
      if (seen.insert(m.key()).second && standard(m)) out.push_back(m);
    }
  return out;
}

GroebnerBasis fglm(const GroebnerBasis& G, MonomialOrder target) {
  std::vector<Poly> vars;
  for (int v = 0; v < G.ring->nvars(); ++v) vars.push_back(Poly::variable(G.ring, v));
  return fglm(G, target, G.ring, vars);
}

GroebnerBasis fglm(const GroebnerBasis& G, MonomialOrder target, const RingPtr& target_ring,
                   const std::vector<Poly>& images) {
  auto stdm = standard_monomials(G);
  if (!stdm) throw std::invalid_argument("fglm needs a zero-dimensional ideal");
  if (static_cast<int>(images.size()) != target_ring->nvars()) throw std::invalid_argument("one image per variable");
  for (auto& p : images)
    if (!p.ring()->same_as(*G.ring)) throw RingMismatch();
  const FieldPtr& K = G.ring->field;
  const int n = target_ring->nvars();
  GroebnerBasis out;
  out.ring = target_ring;
  out.order = target;
  if (stdm->empty()) {
    out.basis.push_back(Poly::constant(target_ring, AlgNum(K, Rational(1))));
    return out;
  }
  const std::size_t D = stdm->size();
  using Vec = std::vector<AlgNum>;
  const AlgNum zero(K, Rational(0));
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < D; ++k) index[(*stdm)[k]] = k;

  GBEngine<ExactDomain> eng(ExactDomain{K}, G.ring->nvars(), G.order);
  std::vector<XP> basis;
  for (auto& g : G.basis) {
    XP x = to_engine(g, K);
    eng.normalize(x);
    basis.push_back(std::move(x));
  }
  // columns of the multiplication maps, filled on demand
  std::vector<std::vector<std::optional<Vec>>> mult(n, std::vector<std::optional<Vec>>(D));
  auto column = [&](int v, std::size_t k) -> const Vec& {
    auto& slot = mult[v][k];
    if (!slot) {
      Vec c(D, zero);
      Poly prod = images[v] * Poly::monomial(G.ring, (*stdm)[k], AlgNum(K, Rational(1)));
      XP r = eng.normal_form(to_engine(prod, K), basis);
      for (std::size_t t = 0; t < r.size(); ++t) c[index.at(r.m[t])] = r.c[t];
      slot = std::move(c);
    }
    return *slot;
  };

  struct Row {
    Vec v;
    std::size_t pivot;
    Vec comb;  // coefficients over the new staircase
  };
  std::vector<Row> rows;
  std::vector<Monomial> stair;
  std::vector<Vec> stair_vec;
  std::unordered_map<Monomial, std::size_t, MonomialHash> stair_index;
  std::vector<Monomial> new_lms;
  auto cmp = [&](const Monomial& a, const Monomial& b) { return target.compare(a, b, n) < 0; };
  std::set<Monomial, decltype(cmp)> cand(cmp);
  cand.insert(Monomial());

  while (!cand.empty()) {
    Monomial m = *cand.begin();
    cand.erase(cand.begin());
    if (std::any_of(new_lms.begin(), new_lms.end(), [&](const Monomial& l) { return l.divides(m); })) continue;
    Vec v(D, zero);
    if (m.is_one()) {
      v[index.at(Monomial())] = AlgNum(K, Rational(1));
    } else {
      int var = -1;
      std::size_t from = 0;
      for (int u = 0; u < n && var < 0; ++u)
        if (m.e[u]) {
          Monomial q = m;
          --q.e[u];
          if (auto it = stair_index.find(q); it != stair_index.end()) {
            var = u;
            from = it->second;
          }
        }
      if (var < 0) throw std::logic_error("fglm candidate without a predecessor");
      const Vec& src = stair_vec[from];
      for (std::size_t k = 0; k < D; ++k)
        if (!src[k].is_zero()) {
          const Vec& c = column(var, k);
          for (std::size_t t = 0; t < D; ++t)
            if (!c[t].is_zero()) v[t] += src[k] * c[t];
        }
    }
    Vec r = v;
    Vec comb(stair.size() + 1, zero);
    comb[stair.size()] = AlgNum(K, Rational(1));
    for (auto& row : rows) {
      if (r[row.pivot].is_zero()) continue;
      AlgNum c = r[row.pivot];
      for (std::size_t t = 0; t < D; ++t)
        if (!row.v[t].is_zero()) r[t] -= c * row.v[t];
      for (std::size_t t = 0; t < row.comb.size(); ++t)
        if (!row.comb[t].is_zero()) comb[t] -= c * row.comb[t];
    }
    auto piv = std::find_if(r.begin(), r.end(), [](const AlgNum& a) { return !a.is_zero(); });
    if (piv == r.end()) {
      // m minus a combination of staircase monomials lies in the ideal
      std::vector<Term> terms{Term{m, AlgNum(K, Rational(1))}};
      for (std::size_t t = 0; t < stair.size(); ++t)
        if (!comb[t].is_zero()) terms.push_back(Term{stair[t], comb[t]});
      out.basis.push_back(Poly(target_ring, std::move(terms)));
      new_lms.push_back(m);
      continue;
    }
    std::size_t pivot = static_cast<std::size_t>(piv - r.begin());
    AlgNum inv = piv->inverse();
    for (auto& a : r) a *= inv;
    for (auto& a : comb) a *= inv;
    rows.push_back(Row{std::move(r), pivot, std::move(comb)});
    stair_index[m] = stair.size();
    stair.push_back(m);
    stair_vec.push_back(std::move(v));
    for (int u = 0; u < n; ++u) cand.insert(m * Monomial::var(u));
  }
  std::sort(out.basis.begin(), out.basis.end(), [&](const Poly& a, const Poly& b) {
    return target.compare(a.leading(target).m, b.leading(target).m, n) < 0;
  });
  return out;
}

Poly normal_form(const Poly& p, const GroebnerBasis& G) {
  if (!p.ring()->same_as(*G.ring)) throw RingMismatch();
  const int n = G.ring->nvars();
  GBEngine<ExactDomain> eng(ExactDomain{G.ring->field}, n, G.order);
  std::vector<XP> basis;
  for (auto& g : G.basis) {
    XP x = to_engine(g, G.ring->field);
    eng.normalize(x);
    basis.push_back(std::move(x));
  }
  return from_engine(eng.normal_form(to_engine(p, G.ring->field), basis), G.ring);
}

bool ideal_contains(const GroebnerBasis& G, const Poly& p) { return normal_form(p, G).is_zero(); }

Ideal eliminate(const Ideal& I, const std::vector<std::string>& front_variables, const GBBudget& budget) {
  std::vector<std::string> order_vars, rest;
  for (auto& v : front_variables) {
    if (I.ring->index_of(v) < 0) throw std::invalid_argument("unknown variable " + v);
    order_vars.push_back(v);
  }
  for (auto& v : I.ring->vars)
    if (std::find(front_variables.begin(), front_variables.end(), v) == front_variables.end()) {
      order_vars.push_back(v);
      rest.push_back(v);
    }
  auto work = Ring::make(order_vars, I.ring->field);
  std::vector<Poly> gens;
  for (auto& g : I.generators) gens.push_back(change_ring(g, work));
  auto G = buchberger(Ideal(work, gens), MonomialOrder::block(static_cast<int>(front_variables.size())), budget);
  auto target = Ring::make(rest, I.ring->field);
  std::vector<Poly> out;
  const int k = static_cast<int>(front_variables.size());
  for (auto& g : G.basis) {
    bool free = true;
    for (auto& t : g.terms())
      for (int v = 0; v < k; ++v)
        if (t.m.e[v]) free = false;
    if (free) out.push_back(change_ring(g, target));
  }
  return Ideal(target, out);
}

DimensionDegree projective_dimension_and_degree(const GroebnerBasis& G) {
  if (G.order.kind() != MonomialOrder::Kind::Grevlex) throw std::invalid_argument("grevlex basis required");
  return projective_dimension_degree(G.leading_monomials(), G.ring->nvars());
}

DimensionDegree projective_dimension_and_degree(const Ideal& I, const GBBudget& budget) {
  if (!I.is_homogeneous()) throw std::invalid_argument("projective dimension needs a homogeneous ideal");
  return projective_dimension_and_degree(buchberger(I, MonomialOrder::grevlex(), budget));
}

std::vector<GPoly<ModpDomain>> reduce_mod_p(const Ideal& I, std::uint64_t p, std::uint64_t alpha_image) {
  std::vector<GPoly<ModpDomain>> out;
  for (auto& g : I.generators) {
    GPoly<ModpDomain> r;
    for (auto& t : g.terms()) {
      AlgNum c = t.c.in_field(I.ring->field);
      std::uint64_t v = 0, pw = 1;
      for (auto& q : c.coeffs()) {
        auto red = modp::reduce(q, p);
        if (!red) throw std::domain_error("coefficient denominator vanishes mod p");
        v = modp::add(v, modp::mul(*red, pw, p), p);
        pw = modp::mul(pw, alpha_image, p);
      }
      if (v) {
        r.m.push_back(t.m);
        r.c.push_back(static_cast<std::uint32_t>(v));
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

ModularHilbert modular_dimension_and_degree(const Ideal& I, std::uint64_t p, std::uint64_t alpha_image,
                                            const GBBudget& budget) {
  if (!I.is_homogeneous()) throw std::invalid_argument("modular Hilbert bound needs a homogeneous ideal");
  const int n = I.ring->nvars();
  GBEngine<ModpDomain> eng(ModpDomain{p}, n, MonomialOrder::grevlex(), budget, "modular groebner");
  auto out = eng.run(reduce_mod_p(I, p, alpha_image));
  std::vector<Monomial> lms;
  for (auto& f : out) lms.push_back(f.m[0]);
  ModularHilbert r;
  r.prime = p;
  r.alpha_image = alpha_image;
  r.dd = projective_dimension_degree(lms, n);
  r.stats = eng.stats();
  return r;
}

std::pair<std::uint64_t, std::uint64_t> choose_prime(const FieldPtr& field, std::uint64_t start) {
  const auto& mp = field->minimal_polynomial();
  for (std::uint64_t p = start | 1; p > 3; p -= 2) {
    if (!modp::is_prime(p)) continue;
    modp::PolyP f;
    bool ok = true;
    for (int k = 0; k <= mp.degree(); ++k) {
      auto r = modp::reduce(mp.coeff(k), p);
      if (!r) {
        ok = false;
        break;
      }
      f.push_back(*r);
    }
    if (!ok) continue;
    modp::trim(f);
    if (modp::degree(f) != mp.degree()) continue;
    if (modp::degree(modp::gcd(f, modp::derivative(f, p), p)) > 0) continue;
    auto roots = modp::roots(f, p);
    if (!roots.empty()) return {p, roots.front()};
  }
  throw std::runtime_error("no suitable prime");
}

}  // namespace g29
