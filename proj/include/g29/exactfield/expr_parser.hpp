#pragma once

#include "g29/exactfield/rational.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace g29::detail {

/// Recursive-descent parser for ring expressions:
///   expr := term (('+'|'-') term)*
///   term := unary ( ['*'|'/'] unary )*     (juxtaposition multiplies)
///   unary := ('+'|'-') unary | power
///   power := atom ('^' integer)?
/// Policy supplies: T number(const Integer&), T symbol(const std::string&),
/// bool is_symbol(const std::string&), T divide(const T&, const T&).
template <class T, class Policy>
class ExprParser {
 public:
  ExprParser(const std::string& text, Policy& policy) : policy_(policy) {
    normalize(text);
  }

  T parse() {
    pos_ = 0;
    T v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  void normalize(const std::string& text) {
    // U+2212 MINUS SIGN is accepted as '-'
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
          static_cast<unsigned char>(text[i + 1]) == 0x88 &&
          static_cast<unsigned char>(text[i + 2]) == 0x92) {
        s_.push_back('-');
        i += 2;
      } else {
        s_.push_back(text[i]);
      }
    }
  }

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  T expr() {
    T v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v = v + term();
      } else if (peek('-')) {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  T term() {
    T v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v = v * unary();
      } else if (peek('/')) {
        ++pos_;
        T d = unary();
        v = policy_.divide(v, d);
      } else if (starts_atom()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  T unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  T power() {
    T base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
      T r = policy_.number(Integer(1));
      for (unsigned i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  T atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return policy_.number(Integer(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (policy_.is_symbol(name)) return policy_.symbol(name);
      // juxtaposed single names such as "xy": split greedily into known symbols
      T v = policy_.number(Integer(1));
      std::size_t i = 0;
      while (i < name.size()) {
        std::size_t len = name.size() - i;
        for (; len > 0; --len)
          if (policy_.is_symbol(name.substr(i, len))) break;
        if (len == 0) {
          pos_ = start + i;
          fail("unknown symbol '" + name + "'");
        }
        v = v * policy_.symbol(name.substr(i, len));
        i += len;
      }
      return v;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Policy& policy_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace g29::detail
