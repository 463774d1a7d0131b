#pragma once

// Buchberger's algorithm over an abstract coefficient domain (see domain.hpp).
// Homogeneous grevlex input over F_p in at most four variables takes a dense
// per-degree reduction path; everything else uses sorted sparse merges.

#include "g29/groebner/domain.hpp"
#include "g29/multipoly/monomial.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace g29 {

/// Resource caps; zero means unlimited.
struct GBBudget {
  std::size_t max_basis = 200000;
  std::size_t max_terms = 400000000;  // summed over stored basis elements
  std::size_t max_steps = 0;          // S-polynomial reductions
  double seconds = 0;
};

struct BudgetExceeded : std::runtime_error {
  std::string what_cap;
  BudgetExceeded(const std::string& cap, const std::string& stage)
      : std::runtime_error(stage + ": budget exceeded (" + cap + ")"), what_cap(cap) {}
};

struct GBStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
  int max_degree = 0;
  double seconds = 0;
};

template <class D>
struct GPoly {
  std::vector<Monomial> m;  // descending in the engine's order
  std::vector<typename D::E> c;
  int sugar = 0;
  bool empty() const { return m.empty(); }
  std::size_t size() const { return m.size(); }
};

template <class D>
class GBEngine {
 public:
  using E = typename D::E;
  using P = GPoly<D>;

  GBEngine(D dom, int nvars, MonomialOrder order, GBBudget budget = {}, std::string stage = "groebner")
      : dom_(std::move(dom)), n_(nvars), ord_(order), budget_(budget), stage_(std::move(stage)) {
    if (!order.is_global()) throw std::invalid_argument("Buchberger needs a global order");
  }

  int cmp(const Monomial& a, const Monomial& b) const { return ord_.compare(a, b, n_); }

  /// Sorts descending, merges duplicates, drops zeros.
  void normalize(P& f) const {
    std::vector<std::size_t> idx(f.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cmp(f.m[a], f.m[b]) > 0; });
    P r;
    r.sugar = f.sugar;
    for (auto i : idx) {
      if (!r.m.empty() && r.m.back() == f.m[i]) {
        r.c.back() = dom_.add(r.c.back(), f.c[i]);
        if (dom_.is_zero(r.c.back())) {
          r.m.pop_back();
          r.c.pop_back();
        }
      } else if (!dom_.is_zero(f.c[i])) {
        r.m.push_back(f.m[i]);
        r.c.push_back(f.c[i]);
      }
    }
    f = std::move(r);
  }

  /// Reduced Gröbner basis, sorted by ascending leading monomial.
  std::vector<P> run(std::vector<P> input) {
    start_ = std::chrono::steady_clock::now();
    dense_ = is_dense_candidate(input);
    for (auto& f : input) {
      normalize(f);
      if (f.empty()) continue;
      f.sugar = std::max(f.sugar, max_degree(f));
      make_monic(f);
      f = reduce(std::move(f));
      if (f.empty()) continue;
      make_monic(f);
      insert(std::move(f));
    }
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      check_budget();
      ++stats_.pairs_reduced;
      P s = spoly(pr);
      s = reduce(std::move(s));
      if (s.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      make_monic(s);
      insert(std::move(s));
    }
    auto out = interreduce();
    stats_.basis_size = out.size();
    stats_.seconds = elapsed();
    return out;
  }

  /// Full normal form of f with respect to basis (any order-compatible list).
  P normal_form(P f, const std::vector<P>& basis) {
    std::vector<P> saved;
    saved.swap(G_);
    G_ = basis;
    rebuild_masks();
    normalize(f);
    auto r = reduce_sparse(std::move(f));
    G_.swap(saved);
    rebuild_masks();
    return r;
  }

  const GBStats& stats() const { return stats_; }

 private:
  struct Pair {
    int i, j;
    Monomial lcm;
    int sugar;
  };
  struct PairLess {
    const GBEngine* e;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = e->cmp(a.lcm, b.lcm);
      if (c) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  static int max_degree(const P& f) {
    int d = 0;
    for (auto& m : f.m) d = std::max(d, m.degree());
    return d;
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void check_budget() {
    if (budget_.max_steps && stats_.pairs_reduced >= budget_.max_steps) throw BudgetExceeded("steps", stage_);
    if (budget_.seconds > 0 && elapsed() > budget_.seconds) throw BudgetExceeded("seconds", stage_);
  }

  void make_monic(P& f) const {
    if (f.empty()) return;
    if (f.c[0] == dom_.one()) return;
    E inv = dom_.inv(f.c[0]);
    for (auto& c : f.c) c = dom_.mul(c, inv);
  }

  // ---- divisibility masks ---------------------------------------------------

  std::uint64_t mask_of(const Monomial& m) const {
    std::uint64_t r = 0;
    for (int v = 0; v < n_; ++v) {
      int e = m.e[v];
      for (int k = 0; k < 8 && e > (1 << k) - 1; ++k)  // bits for e >= 1, 2, 4, ..., 128
        r |= std::uint64_t(1) << (v * 8 + k);
    }
    return r;
  }
  void rebuild_masks() {
    masks_.clear();
    for (auto& g : G_) masks_.push_back(mask_of(g.m[0]));
  }

  // first basis element (smallest size preferred among the first few) whose LM divides m
  int find_reducer(const Monomial& m, std::size_t from = 0) const {
    std::uint64_t mm = mask_of(m);
    int best = -1;
    for (std::size_t k = from; k < G_.size(); ++k) {
      if (masks_[k] & ~mm) continue;
      if (!G_[k].m[0].divides(m)) continue;
      if (best < 0 || G_[k].size() < G_[best].size()) best = static_cast<int>(k);
      if (G_[best].size() <= 2) break;
    }
    return best;
  }

  // ---- S-polynomials and pair management ------------------------------------

  P mul_term(const P& g, const Monomial& t, const E& c) const {
    P r;
    r.m.reserve(g.size());
    r.c.reserve(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      r.m.push_back(t * g.m[k]);
      r.c.push_back(dom_.mul(c, g.c[k]));
    }
    r.sugar = g.sugar + t.degree();
    return r;
  }

  P spoly(const Pair& pr) const {
    const P& a = G_[pr.i];
    const P& b = G_[pr.j];
    Monomial ta = a.m[0].quotient_of(pr.lcm), tb = b.m[0].quotient_of(pr.lcm);
    P r;
    // both monic: (ta*a - tb*b) without their common leading term
    std::size_t i = 1, j = 1;
    while (i < a.size() || j < b.size()) {
      if (j >= b.size() || (i < a.size() && cmp(ta * a.m[i], tb * b.m[j]) > 0)) {
        r.m.push_back(ta * a.m[i]);
        r.c.push_back(a.c[i]);
        ++i;
      } else if (i >= a.size() || cmp(ta * a.m[i], tb * b.m[j]) < 0) {
        r.m.push_back(tb * b.m[j]);
        r.c.push_back(dom_.neg(b.c[j]));
        ++j;
      } else {
        E c = dom_.sub(a.c[i], b.c[j]);
        if (!dom_.is_zero(c)) {
          r.m.push_back(ta * a.m[i]);
          r.c.push_back(c);
        }
        ++i;
        ++j;
      }
    }
    r.sugar = pr.sugar;
    return r;
  }

  void insert(P h) {
    if (budget_.max_basis && G_.size() >= budget_.max_basis) throw BudgetExceeded("basis size", stage_);
    terms_ += h.size();
    if (budget_.max_terms && terms_ > budget_.max_terms) throw BudgetExceeded("terms", stage_);
    stats_.max_degree = std::max(stats_.max_degree, max_degree(h));
    const int hi = static_cast<int>(G_.size());
    const Monomial lh = h.m[0];
    G_.push_back(std::move(h));
    masks_.push_back(mask_of(lh));
    auto lcm_with = [&](int g) { return Monomial::lcm(G_[g].m[0], lh); };

    // Gebauer-Möller update
    std::vector<int> C(active_.begin(), active_.end()), Dset;
    for (std::size_t a = 0; a < C.size(); ++a) {
      int g1 = C[a];
      Monomial l1 = lcm_with(g1);
      bool keep = Monomial::coprime(G_[g1].m[0], lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (lcm_with(C[b]).divides(l1)) keep = false;
        for (std::size_t b = 0; b < Dset.size() && keep; ++b)
          if (lcm_with(Dset[b]).divides(l1)) keep = false;
      }
      if (keep) Dset.push_back(g1);
    }
    std::vector<Pair> fresh;
    for (int g : Dset) {
      if (Monomial::coprime(G_[g].m[0], lh)) continue;
      Monomial l = lcm_with(g);
      int sug = std::max(G_[g].sugar - G_[g].m[0].degree(), G_[hi].sugar - lh.degree()) + l.degree();
      fresh.push_back(Pair{g, hi, l, sug});
    }
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (lh.divides(p.lcm) && Monomial::lcm(G_[p.i].m[0], lh) != p.lcm &&
          Monomial::lcm(G_[p.j].m[0], lh) != p.lcm)
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (auto& p : fresh) pairs_.insert(p);
    stats_.pairs_created += fresh.size();
    std::vector<int> next;
    for (int g : active_)
      if (!lh.divides(G_[g].m[0])) next.push_back(g);
    next.push_back(hi);
    active_ = std::move(next);
  }

  std::vector<P> interreduce() {
    // minimal basis: active elements (no LM divides another's)
    std::vector<int> minimal;
    for (int g : active_) {
      bool redundant = false;
      for (int h : active_)
        if (h != g && G_[h].m[0].divides(G_[g].m[0])) redundant = true;
      if (!redundant) minimal.push_back(g);
    }
    std::vector<P> out;
    for (int g : minimal) {
      P f = G_[g];
      P tail;
      tail.m.assign(f.m.begin() + 1, f.m.end());
      tail.c.assign(f.c.begin() + 1, f.c.end());
      tail.sugar = f.sugar;
      tail = reduce(std::move(tail));
      P r;
      r.m.push_back(f.m[0]);
      r.c.push_back(f.c[0]);
      r.m.insert(r.m.end(), tail.m.begin(), tail.m.end());
      r.c.insert(r.c.end(), tail.c.begin(), tail.c.end());
      r.sugar = f.sugar;
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const P& a, const P& b) { return cmp(a.m[0], b.m[0]) < 0; });
    return out;
  }

  // ---- reduction ------------------------------------------------------------

  P reduce(P f) {
    if constexpr (std::is_same_v<D, ModpDomain>) {
      if (dense_ && !f.empty()) return reduce_dense(std::move(f));
    }
    return reduce_sparse(std::move(f));
  }

  // f - c * t * g restricted to positions >= from (terms before are final)
  void sub_multiple(P& f, std::size_t from, const E& c, const Monomial& t, const P& g, std::size_t gstart) {
    P r;
    r.m.reserve(f.size() + g.size());
    r.c.reserve(f.size() + g.size());
    for (std::size_t k = 0; k < from; ++k) {
      r.m.push_back(f.m[k]);
      r.c.push_back(std::move(f.c[k]));
    }
    std::size_t i = from, j = gstart;
    while (i < f.size() || j < g.size()) {
      if (j >= g.size()) {
        r.m.push_back(f.m[i]);
        r.c.push_back(std::move(f.c[i]));
        ++i;
        continue;
      }
      Monomial mj = t * g.m[j];
      int s = i < f.size() ? cmp(f.m[i], mj) : -1;
      if (s > 0) {
        r.m.push_back(f.m[i]);
        r.c.push_back(std::move(f.c[i]));
        ++i;
      } else if (s < 0) {
        r.m.push_back(mj);
        r.c.push_back(dom_.neg(dom_.mul(c, g.c[j])));
        ++j;
      } else {
        E v = dom_.sub(f.c[i], dom_.mul(c, g.c[j]));
        if (!dom_.is_zero(v)) {
          r.m.push_back(mj);
          r.c.push_back(std::move(v));
        }
        ++i;
        ++j;
      }
    }
    r.sugar = std::max(f.sugar, g.sugar + t.degree());
    f = std::move(r);
  }

  P reduce_sparse(P f) {
    std::size_t pos = 0;
    while (pos < f.size()) {
      int g = find_reducer(f.m[pos]);
      if (g < 0) {
        ++pos;
        continue;
      }
      const P& gg = G_[g];
      Monomial t = gg.m[0].quotient_of(f.m[pos]);
      E c = f.c[pos];  // gg monic
      // drop the cancelled term, then subtract the tail of t*gg
      f.m.erase(f.m.begin() + pos);
      f.c.erase(f.c.begin() + pos);
      sub_multiple(f, pos, c, t, gg, 1);
    }
    return f;
  }

  // ---- dense homogeneous path (F_p, grevlex, <= 4 variables) ---------------

  bool is_dense_candidate(const std::vector<P>& in) const {
    if constexpr (!std::is_same_v<D, ModpDomain>) return false;
    if (ord_.kind() != MonomialOrder::Kind::Grevlex || n_ > 4 || n_ < 1) return false;
    for (auto& f : in) {
      if (f.empty()) continue;
      int d = f.m[0].degree();
      for (auto& m : f.m)
        if (m.degree() != d) return false;
    }
    return true;
  }

  struct DegreeTable {
    int d = 0;
    std::vector<Monomial> mons;  // descending grevlex
    std::vector<int> index;      // (d+1)^(n-1) cells
    std::vector<int> reducer;    // cached reducer per rank, -1 none yet
    std::vector<int> checked;    // basis prefix already scanned
  };

  int cell(const DegreeTable& T, const Monomial& m) const {
    int k = 0;
    for (int v = 0; v + 1 < n_; ++v) k = k * (T.d + 1) + m.e[v];
    return k;
  }

  DegreeTable& table(int d) {
    if (d >= static_cast<int>(tables_.size())) tables_.resize(d + 1);
    DegreeTable& T = tables_[d];
    if (!T.mons.empty() || (d == 0 && !T.index.empty())) return T;
    T.d = d;
    std::vector<Monomial> all;
    Monomial m;
    // enumerate exponent vectors of total degree d
    auto rec = [&](auto&& self, int v, int left) -> void {
      if (v == n_ - 1) {
        m.e[v] = static_cast<std::uint8_t>(left);
        all.push_back(m);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        m.e[v] = static_cast<std::uint8_t>(e);
        self(self, v + 1, left - e);
      }
    };
    rec(rec, 0, d);
    std::sort(all.begin(), all.end(), [&](const Monomial& a, const Monomial& b) { return cmp(a, b) > 0; });
    std::size_t cells = 1;
    for (int v = 0; v + 1 < n_; ++v) cells *= static_cast<std::size_t>(d + 1);
    T.index.assign(cells, -1);
    for (std::size_t r = 0; r < all.size(); ++r) T.index[cell(T, all[r])] = static_cast<int>(r);
    T.mons = std::move(all);
    T.reducer.assign(T.mons.size(), -1);
    T.checked.assign(T.mons.size(), 0);
    return T;
  }

  P reduce_dense(P f) {
    const std::uint64_t p = dom_.p;
    const int d = f.m[0].degree();
    DegreeTable& T = table(d);
    acc_.assign(T.mons.size(), 0);
    std::size_t first = T.mons.size();
    for (std::size_t k = 0; k < f.size(); ++k) {
      std::size_t r = static_cast<std::size_t>(T.index[cell(T, f.m[k])]);
      acc_[r] = f.c[k];
      first = std::min(first, r);
    }
    P out;
    out.sugar = d;
    for (std::size_t i = first; i < acc_.size(); ++i) {
      std::uint64_t a = acc_[i];
      if (!a) continue;
      int g = T.reducer[i];
      if (g < 0) {
        std::size_t from = static_cast<std::size_t>(T.checked[i]);
        if (from < G_.size()) {
          g = find_reducer(T.mons[i], from);
          T.checked[i] = static_cast<int>(G_.size());
          T.reducer[i] = g;
        }
      }
      if (g < 0) {
        out.m.push_back(T.mons[i]);
        out.c.push_back(static_cast<E>(a));
        continue;
      }
      const P& gg = G_[g];
      Monomial t = gg.m[0].quotient_of(T.mons[i]);
      const std::uint64_t negc = p - a;
      for (std::size_t k = 1; k < gg.size(); ++k) {
        Monomial mk = t * gg.m[k];
        std::size_t r = static_cast<std::size_t>(T.index[cell(T, mk)]);
        acc_[r] = (acc_[r] + negc * gg.c[k]) % p;
      }
      acc_[i] = 0;
    }
    return out;
  }

  D dom_;
  int n_;
  MonomialOrder ord_;
  GBBudget budget_;
  std::string stage_;
  std::vector<P> G_;
  std::vector<std::uint64_t> masks_;
  std::vector<int> active_;
  std::set<Pair, PairLess> pairs_{PairLess{this}};
  std::size_t terms_ = 0;
  GBStats stats_;
  bool dense_ = false;
  std::vector<DegreeTable> tables_;
  std::vector<std::uint64_t> acc_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace g29
