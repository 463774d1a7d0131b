#include "g29/exactfield/linalg.hpp"
#include "g29/localsing/local.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

namespace g29 {

namespace {

struct LPoly {
  std::vector<Monomial> m;  // descending in the local order: m[0] has the lowest degree
  std::vector<AlgNum> c;
  bool empty() const { return m.empty(); }
};

class Mora {
 public:
  Mora(int nvars, int D) : n_(nvars), D_(D) {}

  int cmp(const Monomial& a, const Monomial& b) const { return ord_.compare(a, b, n_); }

  LPoly from_poly(const Poly& p) const {
    LPoly r;
    for (auto& t : p.terms())
      if (t.m.degree() <= D_) {
        r.m.push_back(t.m);
        r.c.push_back(t.c);
      }
    std::vector<std::size_t> idx(r.m.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cmp(r.m[a], r.m[b]) > 0; });
    LPoly s;
    for (auto i : idx) {
      s.m.push_back(r.m[i]);
      s.c.push_back(r.c[i]);
    }
    return s;
  }

  static int ecart(const LPoly& f) {
    int top = 0;
    for (auto& m : f.m) top = std::max(top, m.degree());
    return top - f.m[0].degree();
  }

  void make_monic(LPoly& f) const {
    if (f.c[0].is_one()) return;
    AlgNum inv = f.c[0].inverse();
    for (auto& c : f.c) c *= inv;
  }

  // f - c * t * g with terms above degree D dropped
  LPoly sub(const LPoly& f, const AlgNum& c, const Monomial& t, const LPoly& g) const {
    LPoly r;
    std::size_t i = 0, j = 0;
    const int dt = t.degree();
    while (i < f.m.size() || j < g.m.size()) {
      if (j < g.m.size() && g.m[j].degree() + dt > D_) {
        ++j;
        continue;
      }
      if (j >= g.m.size()) {
        r.m.push_back(f.m[i]);
        r.c.push_back(f.c[i]);
        ++i;
        continue;
      }
      Monomial mj = t * g.m[j];
      int s = i < f.m.size() ? cmp(f.m[i], mj) : -1;
      if (s > 0) {
        r.m.push_back(f.m[i]);
        r.c.push_back(f.c[i]);
        ++i;
      } else if (s < 0) {
        r.m.push_back(mj);
        r.c.push_back(-(c * g.c[j]));
        ++j;
      } else {
        AlgNum v = f.c[i] - c * g.c[j];
        if (!v.is_zero()) {
          r.m.push_back(mj);
          r.c.push_back(std::move(v));
        }
        ++i;
        ++j;
      }
    }
    return r;
  }

  // Mora's normal form with ecart-driven reducer choice
  LPoly normal_form(LPoly h, const std::vector<LPoly>& G) const {
    std::vector<LPoly> extra;
    while (!h.empty()) {
      const LPoly* best = nullptr;
      int best_ecart = 0;
      auto consider = [&](const LPoly& g) {
        if (!g.m[0].divides(h.m[0])) return;
        int e = ecart(g);
        if (!best || e < best_ecart) {
          best = &g;
          best_ecart = e;
        }
      };
      for (auto& g : G) consider(g);
      for (auto& g : extra) consider(g);
      if (!best) break;
      LPoly chosen = *best;
      if (best_ecart > ecart(h)) extra.push_back(h);
      Monomial t = chosen.m[0].quotient_of(h.m[0]);
      AlgNum c = h.c[0] / chosen.c[0];
      h = sub(h, c, t, chosen);
    }
    return h;
  }

  LPoly spoly(const LPoly& a, const LPoly& b) const {
    Monomial l = Monomial::lcm(a.m[0], b.m[0]);
    LPoly ta = sub(LPoly{}, AlgNum(-1) / a.c[0], a.m[0].quotient_of(l), a);
    return sub(ta, AlgNum(1) / b.c[0], b.m[0].quotient_of(l), b);
  }

  std::vector<LPoly> standard_basis(const std::vector<Poly>& gens) const {
    std::vector<LPoly> S;
    using Item = std::tuple<int, int, int>;  // lcm degree, j, i
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pairs;
    auto add = [&](LPoly h) {
      make_monic(h);
      int k = static_cast<int>(S.size());
      for (int i = 0; i < k; ++i) {
        if (Monomial::coprime(S[i].m[0], h.m[0])) continue;
        pairs.emplace(Monomial::lcm(S[i].m[0], h.m[0]).degree(), k, i);
      }
      S.push_back(std::move(h));
    };
    for (auto& g : gens) {
      LPoly h = normal_form(from_poly(g), S);
      if (!h.empty()) add(std::move(h));
    }
    while (!pairs.empty()) {
      auto [deg, j, i] = pairs.top();
      pairs.pop();
      if (deg > D_) continue;  // every term of the S-polynomial is truncated away
      LPoly h = normal_form(spoly(S[i], S[j]), S);
      if (!h.empty()) add(std::move(h));
    }
    return S;
  }

 private:
  int n_, D_;
  MonomialOrder ord_ = MonomialOrder::local();
};

void enumerate_monomials(int n, int D, const std::function<void(const Monomial&)>& f) {
  Monomial m;
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == n) {
      f(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.e[v] = static_cast<std::uint8_t>(e);
      self(self, v + 1, left - e);
    }
    m.e[v] = 0;
  };
  rec(rec, 0, D);
}

}  // namespace

LocalLength local_length(const std::vector<Poly>& gens, int degree_cap) {
  if (gens.empty()) throw std::invalid_argument("local_length needs generators");
  const int n = gens[0].ring()->nvars();
  for (const auto& g : gens) {
    AlgNum c0 = g.coefficient(Monomial());
    if (!c0.is_zero()) return LocalLength{0, 0};  // a unit: the origin is not in the zero set
  }
  for (int D : {4, 6, 8, 12, 16, 24, 32, 40, 48, 64}) {
    D = std::min(D, degree_cap);
    Mora mora(n, D);
    auto S = mora.standard_basis(gens);
    int count = 0;
    bool top = false;
    enumerate_monomials(n, D, [&](const Monomial& m) {
      for (auto& s : S)
        if (s.m[0].divides(m)) return;
      ++count;
      if (m.degree() == D) top = true;
    });
    if (!top) return LocalLength{count, D};
    if (D >= degree_cap) break;
  }
  throw NonIsolated(degree_cap);
}

int truncated_length(const std::vector<Poly>& gens, int D) {
  if (gens.empty()) throw std::invalid_argument("truncated_length needs generators");
  const int n = gens[0].ring()->nvars();
  std::map<std::uint64_t, int> col;
  enumerate_monomials(n, D, [&](const Monomial& m) { col.emplace(m.key(), static_cast<int>(col.size())); });
  linalg::Matrix<AlgNum> rows;
  for (auto& g : gens) {
    int ord = D + 1;
    for (auto& t : g.terms()) ord = std::min(ord, t.m.degree());
    if (ord > D) continue;
    enumerate_monomials(n, D - ord, [&](const Monomial& u) {
      std::vector<AlgNum> row(col.size(), AlgNum(0));
      bool any = false;
      for (auto& t : g.terms()) {
        Monomial m = u * t.m;
        if (m.degree() > D) continue;
        row[col.at(m.key())] = t.c;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    });
  }
  int rank = linalg::rank(rows);
  return static_cast<int>(col.size()) - rank;
}

}  // namespace g29
