#include "g29/exactfield/factor.hpp"

#include "g29/exactfield/modp.hpp"

#include <algorithm>
#include <random>

namespace g29 {

namespace {

using PolyZ = std::vector<Integer>;  // low degree first

void trim(PolyZ& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const PolyZ& a) { return static_cast<int>(a.size()) - 1; }

void reduce_mod(PolyZ& a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  trim(a);
}

PolyZ mul_mod(const PolyZ& a, const PolyZ& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  PolyZ r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  reduce_mod(r, m);
  return r;
}

PolyZ add_mod(const PolyZ& a, const PolyZ& b, const Integer& m, bool subtract = false) {
  PolyZ r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (subtract)
      r[i] -= b[i];
    else
      r[i] += b[i];
  }
  reduce_mod(r, m);
  return r;
}

// Division by a monic polynomial modulo m.
void divmod_monic(const PolyZ& a, const PolyZ& b, const Integer& m, PolyZ& q, PolyZ& r) {
  r = a;
  trim(r);
  const int db = deg(b);
  if (deg(r) < db) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, Integer(0));
  for (int i = deg(r); i >= db; --i) {
    Integer f = r[i] % m;
    if (f < 0) f += m;
    if (f == 0) continue;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  r.resize(db);
  reduce_mod(r, m);
  reduce_mod(q, m);
}

PolyZ to_z(const modp::PolyP& a) {
  PolyZ r;
  r.reserve(a.size());
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

modp::PolyP to_p(const PolyZ& a, modp::Word p) {
  modp::PolyP r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(modp::reduce(c, p));
  modp::trim(r);
  return r;
}

// s*g + t*h = 1 mod p
void bezout_mod_p(const modp::PolyP& g, const modp::PolyP& h, modp::Word p, modp::PolyP& s,
                  modp::PolyP& t) {
  modp::PolyP r0 = g, r1 = h, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    modp::PolyP q, r;
    modp::divmod(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = modp::sub(s0, modp::mul(q, s1, p), p);
    auto t2 = modp::sub(t0, modp::mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  modp::Word li = modp::inv(r0.back(), p);
  s = modp::scale(s0, li, p);
  t = modp::scale(t0, li, p);
}

void hensel_step(const PolyZ& f, PolyZ& g, PolyZ& h, PolyZ& s, PolyZ& t, const Integer& m) {
  Integer m2 = m * m;
  PolyZ fm = f;
  reduce_mod(fm, m2);
  PolyZ e = add_mod(fm, mul_mod(g, h, m2), m2, true);
  PolyZ q, r;
  divmod_monic(mul_mod(s, e, m2), h, m2, q, r);
  PolyZ g2 = add_mod(add_mod(g, mul_mod(t, e, m2), m2), mul_mod(q, g, m2), m2);
  PolyZ h2 = add_mod(h, r, m2);
  PolyZ b = add_mod(add_mod(mul_mod(s, g2, m2), mul_mod(t, h2, m2), m2), PolyZ{Integer(1)}, m2,
                    true);
  PolyZ c, d;
  divmod_monic(mul_mod(s, b, m2), h2, m2, c, d);
  PolyZ s2 = add_mod(s, d, m2, true);
  PolyZ t2 = add_mod(add_mod(t, mul_mod(t, b, m2), m2, true), mul_mod(c, g2, m2), m2, true);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

// Lifts the monic modular factors of f (mod p) to modulus p^(2^steps).
void lift_tree(const PolyZ& f, const std::vector<modp::PolyP>& factors, modp::Word p, int steps,
               std::vector<PolyZ>& out) {
  Integer P(static_cast<unsigned long>(p));
  if (factors.size() == 1) {
    Integer M = P;
    for (int i = 0; i < steps; ++i) M *= M;
    PolyZ g = f;
    reduce_mod(g, M);
    Integer lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), g.back().get_mpz_t(), M.get_mpz_t());
    for (auto& c : g) c *= lc_inv;
    reduce_mod(g, M);
    out.push_back(g);
    return;
  }
  std::size_t k = factors.size() / 2;
  std::vector<modp::PolyP> left(factors.begin(), factors.begin() + k);
  std::vector<modp::PolyP> right(factors.begin() + k, factors.end());
  modp::PolyP g0{modp::reduce(f.back(), p)}, h0{1};
  for (const auto& u : left) g0 = modp::mul(g0, u, p);
  for (const auto& u : right) h0 = modp::mul(h0, u, p);
  modp::PolyP s0, t0;
  bezout_mod_p(g0, h0, p, s0, t0);
  PolyZ g = to_z(g0), h = to_z(h0), s = to_z(s0), t = to_z(t0);
  Integer m = P;
  for (int i = 0; i < steps; ++i) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  lift_tree(g, left, p, steps, out);
  lift_tree(h, right, p, steps, out);
}

Integer symmetric(const Integer& c, const Integer& M) {
  Integer r = c % M;
  if (r < 0) r += M;
  if (2 * r > M) r -= M;
  return r;
}

PolyZ primitive(PolyZ a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact division over Z; returns false when b does not divide a.
bool divide_exact(const PolyZ& a, const PolyZ& b, PolyZ& q) {
  PolyZ r = a;
  const int db = deg(b);
  if (deg(r) < db) return false;
  q.assign(r.size() - b.size() + 1, Integer(0));
  for (int i = deg(r); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer f = r[i] / b.back();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  trim(q);
  return true;
}

std::vector<PolyZ> zassenhaus(PolyZ f) {
  const int n = deg(f);
  if (n <= 1) return {f};
  // Choose the prime giving the fewest modular factors among a few candidates.
  std::mt19937_64 rng(0x2545F4914F6CDD1DULL);
  std::vector<modp::PolyP> best;
  modp::Word best_p = 0;
  int tried = 0;
  for (modp::Word p = 3; tried < 6 && p < 100000; p += 2) {
    if (!modp::is_prime(p)) continue;
    if (modp::reduce(f.back(), p) == 0) continue;
    auto fp = to_p(f, p);
    if (modp::degree(modp::gcd(fp, modp::derivative(fp, p), p)) != 0) continue;
    auto facs = modp::factor_squarefree(fp, p, rng);
    ++tried;
    if (best_p == 0 || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (best.size() == 1) return {f};
  }
  // Coefficient bound for factors of lc*f.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = root * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  bound = 2 * bound + 1;
  Integer P(static_cast<unsigned long>(best_p));
  Integer M = P;
  int steps = 0;
  while (M <= bound) {
    M *= M;
    ++steps;
  }
  std::vector<PolyZ> lifted;
  lift_tree(f, best, best_p, steps, lifted);

  std::vector<PolyZ> result;
  std::vector<bool> used(lifted.size(), false);
  std::size_t remaining = lifted.size();
  for (std::size_t size = 1; 2 * size <= remaining; ++size) {
    bool found = true;
    while (found && 2 * size <= remaining) {
      found = false;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (!used[i]) idx.push_back(i);
      std::vector<int> sel(size);
      for (std::size_t i = 0; i < size; ++i) sel[i] = static_cast<int>(i);
      const Integer lc = f.back();
      const Integer lc_f0 = lc * f[0];
      while (true) {
        PolyZ g{lc};
        for (int s : sel) g = mul_mod(g, lifted[idx[s]], M);
        for (auto& c : g) c = symmetric(c, M);
        trim(g);
        bool plausible = g[0] == 0 || lc_f0 == 0 ||
                         mpz_divisible_p(lc_f0.get_mpz_t(), g[0].get_mpz_t());
        if (plausible) {
          PolyZ cand = primitive(g);
          PolyZ q;
          if (divide_exact(f, cand, q)) {
            result.push_back(cand);
            f = q;
            for (int s : sel) used[idx[s]] = true;
            remaining -= size;
            found = true;
            break;
          }
        }
        // next combination
        int i = static_cast<int>(size) - 1;
        while (i >= 0 && sel[i] == static_cast<int>(idx.size() - size + i)) --i;
        if (i < 0) break;
        ++sel[i];
        for (std::size_t j = i + 1; j < size; ++j) sel[j] = sel[j - 1] + 1;
      }
    }
  }
  if (deg(f) > 0) result.push_back(primitive(f));
  return result;
}

bool poly_less(const UPolyQ& a, const UPolyQ& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

std::vector<std::pair<UPolyQ, int>> factor_rational(const UPolyQ& p) {
  std::vector<std::pair<UPolyQ, int>> out;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    PolyZ f = primitive_integer_part(part);
    // pull out powers of x first so the constant-term filter applies
    if (f[0] == 0) {
      out.emplace_back(UPolyQ::x(), mult);
      f.erase(f.begin());
    }
    if (deg(f) <= 0) continue;
    for (auto& g : zassenhaus(f)) out.emplace_back(from_integers(g).monic(), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible_rational(const UPolyQ& p) {
  if (p.degree() <= 0) return false;
  auto f = factor_rational(p);
  return f.size() == 1 && f[0].second == 1;
}

}  // namespace g29
