#include "g29/groebner/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace g29 {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    return da != db ? da < db : a.key() < b.key();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool red = false;
    for (auto& h : out)
      if (h.divides(g)) {
        red = true;
        break;
      }
    if (!red) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.key() < b.key(); });
  return out;
}

namespace {

using Series = std::vector<std::int64_t>;

Series mul(const Series& a, const Series& b) {
  Series r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Series add(Series a, const Series& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] += b[j];
  return a;
}

Series one_minus_t_pow(int d) {
  Series r(d + 1, 0);
  r[0] += 1;
  r[d] -= 1;
  return r;
}

bool pairwise_coprime(const std::vector<Monomial>& g) {
  Monomial acc;
  for (auto& m : g) {
    if (!Monomial::coprime(acc, m)) return false;
    acc = Monomial::lcm(acc, m);
  }
  return true;
}

Series numerator(std::vector<Monomial> gens, int n) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (pairwise_coprime(gens)) {
    Series r{1};
    for (auto& g : gens) r = mul(r, one_minus_t_pow(g.degree()));
    return r;
  }
  // Bigatti pivot: most frequent variable, median exponent
  int best = 0, count = -1;
  for (int v = 0; v < n; ++v) {
    int c = 0;
    for (auto& g : gens) c += g.e[v] > 0;
    if (c > count) {
      count = c;
      best = v;
    }
  }
  // exponents of the pivot variable in generators that are not pure powers;
  // x^e then lies outside I, so both branches make progress
  std::vector<int> ex;
  for (auto& g : gens)
    if (g.e[best] && g.degree() > g.e[best]) ex.push_back(g.e[best]);
  std::sort(ex.begin(), ex.end());
  int e = ex[ex.size() / 2];
  Monomial piv = Monomial::var(best, e);
  std::vector<Monomial> colon;
  for (auto& g : gens) {
    Monomial q = g;
    q.e[best] = static_cast<std::uint8_t>(g.e[best] > e ? g.e[best] - e : 0);
    colon.push_back(q);
  }
  std::vector<Monomial> plus = gens;
  plus.push_back(piv);
  // HS(I) = HS(I + p) + t^e HS(I : p)
  return add(numerator(std::move(plus), n), numerator(std::move(colon), n), e);
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& gens, int nvars) {
  Series r = numerator(gens, nvars);
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

int krull_dimension_independent_sets(const std::vector<Monomial>& gens, int nvars) {
  auto g = minimalize(gens);
  for (auto& m : g)
    if (m.is_one()) return -1;
  int best = 0;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (auto& m : g) {
      bool inside = true;
      for (int v = 0; v < nvars && inside; ++v)
        if (m.e[v] && !(mask >> v & 1)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::int64_t hilbert_function(const std::vector<Monomial>& gens, int nvars, int d) {
  std::int64_t count = 0;
  Monomial m;
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == nvars - 1) {
      m.e[v] = static_cast<std::uint8_t>(left);
      for (auto& g : gens)
        if (g.divides(m)) return;
      ++count;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.e[v] = static_cast<std::uint8_t>(e);
      self(self, v + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return count;
}

DimensionDegree projective_dimension_degree(const std::vector<Monomial>& gens, int nvars) {
  int krull = krull_dimension_independent_sets(gens, nvars);
  DimensionDegree out;
  if (krull <= 0) return out;  // unit ideal or irrelevant
  Series num = hilbert_numerator(gens, nvars);
  // divide by (1 - t) while it divides
  int pole = nvars;
  auto at_one = [](const Series& s) {
    std::int64_t v = 0;
    for (auto c : s) v += c;
    return v;
  };
  while (at_one(num) == 0 && num.size() > 1) {
    Series q(num.size() - 1);
    std::int64_t carry = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      carry += num[i];
      q[i] = carry;
    }
    num = q;
    --pole;
  }
  if (pole != krull) throw std::logic_error("Hilbert series pole order disagrees with independent-set dimension");
  out.dimension = krull - 1;
  out.degree = at_one(num);
  return out;
}

}  // namespace g29
