#pragma once

#include "g29/exactfield/number_field.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <vector>

namespace g29 {

struct InsufficientPrecision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// RAII holder for one mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(long prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

/// Disc {z : |z - mid| <= rad} in C.
class ComplexBall {
 public:
  explicit ComplexBall(long prec = 128);
  static ComplexBall exact(const Rational& q, long prec = 128);

  long prec() const { return re_.prec(); }
  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  const BigFloat& rad() const { return rad_; }
  BigFloat& re() { return re_; }
  BigFloat& im() { return im_; }
  BigFloat& rad() { return rad_; }

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);

  bool contains_zero() const;
  bool overlaps(const ComplexBall& o) const;
  /// Upper bound on |z| for z in the ball.
  double abs_upper() const;

  std::string to_string(int digits = 20) const;

 private:
  BigFloat re_, im_, rad_;
};

/// Isolating balls for all complex roots of a squarefree p, ordered by real
/// part descending, then imaginary part descending. Radius is
/// deg(p) * |p(z)/p'(z)|, bounded from above.
std::vector<ComplexBall> isolate_roots(const UPolyQ& p, long prec = 128);

/// Image of a under the embedding sending the generator to root root_index.
ComplexBall embed_complex(const AlgNum& a, int root_index, long prec = 128);

/// Evaluates p at a ball (Horner).
ComplexBall eval_ball(const UPolyQ& p, const ComplexBall& z);

}  // namespace g29
