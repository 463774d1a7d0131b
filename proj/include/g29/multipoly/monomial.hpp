#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>

namespace g29 {

constexpr int kMaxVars = 8;

/// Exponent vector, at most 8 variables and exponents below 256.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int operator[](int i) const { return e[i]; }
  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const { return key() == 0; }
  std::uint64_t key() const {
    std::uint64_t k;
    std::memcpy(&k, e.data(), sizeof k);
    return k;
  }
  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint8_t>(power);
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = a.e[i] + b.e[i];
      if (s > 255) throw std::overflow_error("monomial exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    return r;
  }
  bool divides(const Monomial& b) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
  /// b / this, assuming divides(b).
  Monomial quotient_of(const Monomial& b) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = b.e[i] - e[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    return std::hash<std::uint64_t>()(m.key() * 0x9e3779b97f4a7c15ULL);
  }
};

/// Monomial orders. Global orders have 1 smallest; the local order has 1
/// largest (negative degree, ties by reverse lex) and is only for Mora.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block, Local };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// grevlex on the first `front` variables, then grevlex on the rest
  static MonomialOrder block(int front) { return MonomialOrder(Kind::Block, front); }
  static MonomialOrder local() { return MonomialOrder(Kind::Local, 0); }

  Kind kind() const { return kind_; }
  int front() const { return front_; }
  bool is_global() const { return kind_ != Kind::Local; }

  /// -1, 0, 1 as a <, =, > b; nvars limits the compared variables.
  int compare(const Monomial& a, const Monomial& b, int nvars) const {
    switch (kind_) {
      case Kind::Lex:
        for (int i = 0; i < nvars; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      case Kind::Grevlex:
        return grevlex_range(a, b, 0, nvars);
      case Kind::Block: {
        int c = grevlex_range(a, b, 0, front_);
        return c ? c : grevlex_range(a, b, front_, nvars);
      }
      case Kind::Local: {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? 1 : -1;
        for (int i = nvars - 1; i >= 0; --i)
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
      }
    }
    return 0;
  }

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && front_ == o.front_; }

 private:
  MonomialOrder(Kind k, int front) : kind_(k), front_(front) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  int front_;
};

}  // namespace g29
