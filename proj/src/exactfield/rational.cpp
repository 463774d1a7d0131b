#include "g29/exactfield/rational.hpp"

#include <functional>

namespace g29 {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid(num) || !valid(den)) throw ParseError("malformed rational: '" + s + "'");
  Integer n(num), d(den);
  if (d == 0) throw DivisionByZero();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::size_t hash_value(const Rational& q) {
  const __mpz_struct* n = q.get_num_mpz_t();
  const __mpz_struct* d = q.get_den_mpz_t();
  std::size_t h = static_cast<std::size_t>(n->_mp_size) * 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < std::abs(n->_mp_size); ++i)
    h = (h ^ n->_mp_d[i]) * 0x100000001b3ULL;
  for (int i = 0; i < std::abs(d->_mp_size); ++i)
    h = (h ^ d->_mp_d[i]) * 0x100000001b3ULL + 7;
  return h;
}

}  // namespace g29
