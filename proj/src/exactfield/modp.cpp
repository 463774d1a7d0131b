#include "g29/exactfield/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace g29::modp {

Word add(Word a, Word b, Word p) {
  Word s = a + b;
  return s >= p ? s - p : s;
}
Word sub(Word a, Word b, Word p) { return a >= b ? a - b : a + p - b; }
Word mul(Word a, Word b, Word p) { return (a * b) % p; }

Word pow(Word a, std::uint64_t e, Word p) {
  Word r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

Word inv(Word a, Word p) {
  if (a % p == 0) throw DivisionByZero();
  return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for n < 2^32 with bases 2, 7, 61.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Word reduce(const Integer& z, Word p) {
  Integer r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::optional<Word> reduce(const Rational& q, Word p) {
  Word den = reduce(Integer(q.get_den()), p);
  if (den == 0) return std::nullopt;
  return mul(reduce(Integer(q.get_num()), p), inv(den, p), p);
}

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

PolyP add(const PolyP& a, const PolyP& b, Word p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i], p);
  trim(r);
  return r;
}

PolyP sub(const PolyP& a, const PolyP& b, Word p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i], p);
  trim(r);
  return r;
}

PolyP mul(const PolyP& a, const PolyP& b, Word p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

PolyP scale(const PolyP& a, Word s, Word p) {
  PolyP r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], s, p);
  trim(r);
  return r;
}

void divmod(const PolyP& a, const PolyP& b, Word p, PolyP& q, PolyP& r) {
  if (b.empty()) throw DivisionByZero();
  r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, 0);
  Word li = inv(b.back(), p);
  for (int i = degree(r); i >= db; --i) {
    if (r[i] == 0) continue;
    Word f = mul(r[i], li, p);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = sub(r[i - db + j], mul(f, b[j], p), p);
  }
  r.resize(db);
  trim(r);
  trim(q);
}

PolyP rem(const PolyP& a, const PolyP& b, Word p) {
  PolyP q, r;
  divmod(a, b, p, q, r);
  return r;
}

PolyP monic(const PolyP& a, Word p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

PolyP gcd(PolyP a, PolyP b, Word p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

PolyP derivative(const PolyP& a, Word p) {
  if (a.size() <= 1) return {};
  PolyP r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p, p);
  trim(r);
  return r;
}

PolyP powmod(const PolyP& base, const Integer& e, const PolyP& m, Word p) {
  PolyP result{1};
  PolyP b = rem(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

namespace {

// Splits a product of distinct monic irreducibles of common degree d.
void equal_degree_split(const PolyP& f, int d, Word p, std::mt19937_64& rng,
                        std::vector<PolyP>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_pow_ui(e.get_mpz_t(), Integer(static_cast<unsigned long>(p)).get_mpz_t(), d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<Word> dist(0, p - 1);
  for (;;) {
    PolyP a(degree(f));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (degree(a) < 1) continue;
    PolyP g = gcd(a, f, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      PolyP q, r;
      divmod(f, g, p, q, r);
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(monic(q, p), d, p, rng, out);
      return;
    }
    PolyP b = powmod(a, e, f, p);
    b = sub(b, PolyP{1}, p);
    g = gcd(b, f, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      PolyP q, r;
      divmod(f, g, p, q, r);
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(monic(q, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolyP> factor_squarefree(const PolyP& f0, Word p, std::mt19937_64& rng) {
  std::vector<PolyP> out;
  PolyP f = monic(f0, p);
  if (degree(f) <= 0) return out;
  PolyP x{0, 1};
  PolyP h = x;
  Integer P(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, P, f, p);
    PolyP g = gcd(sub(h, x, p), f, p);
    if (degree(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      PolyP q, r;
      divmod(f, g, p, q, r);
      f = monic(q, p);
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const PolyP& a, const PolyP& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::vector<Word> roots(const PolyP& f0, Word p) {
  std::vector<Word> out;
  PolyP f = monic(f0, p);
  if (degree(f) <= 0) return out;
  PolyP x{0, 1};
  PolyP xp = powmod(x, Integer(static_cast<unsigned long>(p)), f, p);
  PolyP g = gcd(sub(xp, x, p), f, p);
  if (degree(g) <= 0) return out;
  std::mt19937_64 rng(0x5eed);
  std::vector<PolyP> lin;
  equal_degree_split(g, 1, p, rng, lin);
  for (const auto& l : lin) out.push_back(sub(0, l[0], p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace g29::modp
