#include "g29/exactfield/complex_ball.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace g29 {

namespace {

// |mid| upper bound via |re| + |im|
void abs_bound(mpfr_ptr out, const ComplexBall& z) {
  BigFloat t(out->_mpfr_prec);
  mpfr_abs(out, z.re().get(), MPFR_RNDU);
  mpfr_abs(t.get(), z.im().get(), MPFR_RNDU);
  mpfr_add(out, out, t.get(), MPFR_RNDU);
}

// one-ulp style rounding allowance: |mid| * 2^(2 - prec)
void add_rounding(ComplexBall& z) {
  BigFloat m(z.prec());
  abs_bound(m.get(), z);
  mpfr_mul_2si(m.get(), m.get(), 2 - z.prec(), MPFR_RNDU);
  mpfr_add(z.rad().get(), z.rad().get(), m.get(), MPFR_RNDU);
}

}  // namespace

ComplexBall::ComplexBall(long prec) : re_(prec), im_(prec), rad_(prec) {}

ComplexBall ComplexBall::exact(const Rational& q, long prec) {
  ComplexBall z(prec);
  int t = mpfr_set_q(z.re_.get(), q.get_mpq_t(), MPFR_RNDN);
  if (t != 0) {
    // not dyadic: one ulp of slack
    mpfr_abs(z.rad_.get(), z.re_.get(), MPFR_RNDU);
    mpfr_mul_2si(z.rad_.get(), z.rad_.get(), 1 - prec, MPFR_RNDU);
  }
  return z;
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall r(std::max(a.prec(), b.prec()));
  mpfr_add(r.re().get(), a.re().get(), b.re().get(), MPFR_RNDN);
  mpfr_add(r.im().get(), a.im().get(), b.im().get(), MPFR_RNDN);
  mpfr_add(r.rad().get(), a.rad().get(), b.rad().get(), MPFR_RNDU);
  add_rounding(r);
  return r;
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall r(std::max(a.prec(), b.prec()));
  mpfr_sub(r.re().get(), a.re().get(), b.re().get(), MPFR_RNDN);
  mpfr_sub(r.im().get(), a.im().get(), b.im().get(), MPFR_RNDN);
  mpfr_add(r.rad().get(), a.rad().get(), b.rad().get(), MPFR_RNDU);
  add_rounding(r);
  return r;
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  const long prec = std::max(a.prec(), b.prec());
  ComplexBall r(prec);
  BigFloat t1(prec), t2(prec);
  mpfr_mul(t1.get(), a.re().get(), b.re().get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im().get(), b.im().get(), MPFR_RNDN);
  mpfr_sub(r.re().get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re().get(), b.im().get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im().get(), b.re().get(), MPFR_RNDN);
  mpfr_add(r.im().get(), t1.get(), t2.get(), MPFR_RNDN);
  // |a| rb + |b| ra + ra rb
  BigFloat na(prec), nb(prec), acc(prec);
  abs_bound(na.get(), a);
  abs_bound(nb.get(), b);
  mpfr_mul(acc.get(), na.get(), b.rad().get(), MPFR_RNDU);
  mpfr_mul(t1.get(), nb.get(), a.rad().get(), MPFR_RNDU);
  mpfr_add(acc.get(), acc.get(), t1.get(), MPFR_RNDU);
  mpfr_mul(t1.get(), a.rad().get(), b.rad().get(), MPFR_RNDU);
  mpfr_add(r.rad().get(), acc.get(), t1.get(), MPFR_RNDU);
  // rounding of the four products and two sums
  mpfr_mul(t1.get(), na.get(), nb.get(), MPFR_RNDU);
  mpfr_mul_2si(t1.get(), t1.get(), 3 - prec, MPFR_RNDU);
  mpfr_add(r.rad().get(), r.rad().get(), t1.get(), MPFR_RNDU);
  return r;
}

bool ComplexBall::contains_zero() const {
  BigFloat d(prec());
  // |mid| lower bound: max(|re|, |im|)
  BigFloat a(prec()), b(prec());
  mpfr_abs(a.get(), re_.get(), MPFR_RNDD);
  mpfr_abs(b.get(), im_.get(), MPFR_RNDD);
  mpfr_max(d.get(), a.get(), b.get(), MPFR_RNDD);
  return mpfr_lessequal_p(d.get(), rad_.get());
}

bool ComplexBall::overlaps(const ComplexBall& o) const {
  return (*this - o).contains_zero();
}

double ComplexBall::abs_upper() const {
  BigFloat m(prec());
  abs_bound(m.get(), *this);
  mpfr_add(m.get(), m.get(), rad_.get(), MPFR_RNDU);
  return mpfr_get_d(m.get(), MPFR_RNDU);
}

std::string ComplexBall::to_string(int digits) const {
  std::ostringstream os;
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, re_.get());
  os << "(" << buf;
  mpfr_snprintf(buf, sizeof buf, "%+.*Rg", digits, im_.get());
  os << " " << buf << "i";
  mpfr_snprintf(buf, sizeof buf, "%.3Rg", rad_.get());
  os << " +/- " << buf << ")";
  return os.str();
}

ComplexBall eval_ball(const UPolyQ& p, const ComplexBall& z) {
  ComplexBall r(z.prec());
  for (int i = p.degree(); i >= 0; --i) r = r * z + ComplexBall::exact(p.coeff(i), z.prec());
  return r;
}

namespace {

struct Cx {
  BigFloat re, im;
  explicit Cx(long prec) : re(prec), im(prec) {}
};

void cx_mul(Cx& out, const Cx& a, const Cx& b, long prec) {
  BigFloat t1(prec), t2(prec), r(prec), i(prec);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(i.get(), t1.get(), t2.get(), MPFR_RNDN);
  out.re = r;
  out.im = i;
}

void cx_div(Cx& out, const Cx& a, const Cx& b, long prec) {
  BigFloat den(prec), t(prec);
  mpfr_sqr(den.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);
  Cx conj(prec);
  conj.re = b.re;
  mpfr_neg(conj.im.get(), b.im.get(), MPFR_RNDN);
  Cx num(prec);
  cx_mul(num, a, conj, prec);
  mpfr_div(out.re.get(), num.re.get(), den.get(), MPFR_RNDN);
  mpfr_div(out.im.get(), num.im.get(), den.get(), MPFR_RNDN);
}

// p(z) and p'(z) by Horner
void horner(Cx& val, Cx& der, const std::vector<BigFloat>& c, const Cx& z, long prec) {
  mpfr_set_zero(val.re.get(), 1);
  mpfr_set_zero(val.im.get(), 1);
  mpfr_set_zero(der.re.get(), 1);
  mpfr_set_zero(der.im.get(), 1);
  Cx t(prec);
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    cx_mul(t, der, z, prec);
    mpfr_add(der.re.get(), t.re.get(), val.re.get(), MPFR_RNDN);
    mpfr_add(der.im.get(), t.im.get(), val.im.get(), MPFR_RNDN);
    cx_mul(t, val, z, prec);
    mpfr_add(val.re.get(), t.re.get(), c[i].get(), MPFR_RNDN);
    val.im = t.im;
  }
}

double cx_abs(const Cx& z) {
  return std::hypot(mpfr_get_d(z.re.get(), MPFR_RNDN), mpfr_get_d(z.im.get(), MPFR_RNDN));
}

// Aberth iteration at working precision.
std::vector<Cx> aberth(const UPolyQ& p, long prec) {
  const int n = p.degree();
  std::vector<BigFloat> c;
  for (int i = 0; i <= n; ++i) {
    BigFloat v(prec);
    mpfr_set_q(v.get(), p.coeff(i).get_mpq_t(), MPFR_RNDN);
    c.push_back(v);
  }
  double bound = 0;
  for (int i = 0; i < n; ++i)
    bound = std::max(bound, std::abs(mpfr_get_d(c[i].get(), MPFR_RNDN) / mpfr_get_d(c[n].get(), MPFR_RNDN)));
  bound = 1 + bound;
  std::vector<Cx> z;
  for (int k = 0; k < n; ++k) {
    Cx v(prec);
    double ang = 2 * M_PI * k / n + 0.4;
    double r = bound * (0.5 + 0.5 * (k % 3) / 3.0);
    mpfr_set_d(v.re.get(), r * std::cos(ang), MPFR_RNDN);
    mpfr_set_d(v.im.get(), r * std::sin(ang), MPFR_RNDN);
    z.push_back(v);
  }
  Cx val(prec), der(prec), w(prec), sum(prec), diff(prec), inv(prec), one(prec), t(prec);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  const double target = std::ldexp(1.0, -static_cast<int>(std::min<long>(prec, 1000)) + 4);
  for (int iter = 0; iter < 5000; ++iter) {
    double worst = 0;
    for (int k = 0; k < n; ++k) {
      horner(val, der, c, z[k], prec);
      if (mpfr_zero_p(der.re.get()) && mpfr_zero_p(der.im.get())) continue;
      cx_div(w, val, der, prec);
      mpfr_set_zero(sum.re.get(), 1);
      mpfr_set_zero(sum.im.get(), 1);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        mpfr_sub(diff.re.get(), z[k].re.get(), z[j].re.get(), MPFR_RNDN);
        mpfr_sub(diff.im.get(), z[k].im.get(), z[j].im.get(), MPFR_RNDN);
        cx_div(inv, one, diff, prec);
        mpfr_add(sum.re.get(), sum.re.get(), inv.re.get(), MPFR_RNDN);
        mpfr_add(sum.im.get(), sum.im.get(), inv.im.get(), MPFR_RNDN);
      }
      // step = w / (1 - w * sum)
      cx_mul(t, w, sum, prec);
      mpfr_ui_sub(t.re.get(), 1, t.re.get(), MPFR_RNDN);
      mpfr_neg(t.im.get(), t.im.get(), MPFR_RNDN);
      cx_div(t, w, t, prec);
      mpfr_sub(z[k].re.get(), z[k].re.get(), t.re.get(), MPFR_RNDN);
      mpfr_sub(z[k].im.get(), z[k].im.get(), t.im.get(), MPFR_RNDN);
      double zk = std::max(1.0, cx_abs(z[k]));
      worst = std::max(worst, cx_abs(t) / zk);
    }
    if (worst < target) break;
  }
  return z;
}

std::mutex cache_mutex;
std::map<std::pair<std::string, long>, std::vector<ComplexBall>> root_cache;

}  // namespace

std::vector<ComplexBall> isolate_roots(const UPolyQ& p_in, long prec) {
  if (p_in.degree() < 1) return {};
  const std::string key = p_in.to_string();
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = root_cache.find({key, prec});
    if (it != root_cache.end()) return it->second;
  }
  if (!is_squarefree(p_in)) throw std::invalid_argument("root isolation needs a squarefree polynomial");
  const UPolyQ p = p_in.monic();
  const int n = p.degree();
  const long work = prec + 32 + 4 * n;
  std::vector<Cx> approx = aberth(p, work);
  UPolyQ dp = p.derivative();
  std::vector<ComplexBall> balls;
  for (const auto& z : approx) {
    ComplexBall b(work);
    b.re() = z.re;
    b.im() = z.im;
    ComplexBall v = eval_ball(p, b), d = eval_ball(dp, b);
    // radius n * (|p(z)| upper) / (|p'(z)| lower)
    BigFloat up(work), low(work), t(work);
    mpfr_sqr(up.get(), v.re().get(), MPFR_RNDU);
    mpfr_sqr(t.get(), v.im().get(), MPFR_RNDU);
    mpfr_add(up.get(), up.get(), t.get(), MPFR_RNDU);
    mpfr_sqrt(up.get(), up.get(), MPFR_RNDU);
    mpfr_add(up.get(), up.get(), v.rad().get(), MPFR_RNDU);
    mpfr_sqr(low.get(), d.re().get(), MPFR_RNDD);
    mpfr_sqr(t.get(), d.im().get(), MPFR_RNDD);
    mpfr_add(low.get(), low.get(), t.get(), MPFR_RNDD);
    mpfr_sqrt(low.get(), low.get(), MPFR_RNDD);
    mpfr_sub(low.get(), low.get(), d.rad().get(), MPFR_RNDD);
    if (mpfr_sgn(low.get()) <= 0)
      throw InsufficientPrecision("derivative not bounded away from zero at an approximate root");
    mpfr_div(b.rad().get(), up.get(), low.get(), MPFR_RNDU);
    mpfr_mul_ui(b.rad().get(), b.rad().get(), n, MPFR_RNDU);
    balls.push_back(b);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (balls[i].overlaps(balls[j]))
        throw InsufficientPrecision("root enclosures overlap at " + std::to_string(prec) + " bits");
  auto real_close = [](const ComplexBall& a, const ComplexBall& b) {
    BigFloat d(a.prec()), r(a.prec());
    mpfr_sub(d.get(), a.re().get(), b.re().get(), MPFR_RNDN);
    mpfr_abs(d.get(), d.get(), MPFR_RNDU);
    mpfr_add(r.get(), a.rad().get(), b.rad().get(), MPFR_RNDU);
    return mpfr_lessequal_p(d.get(), r.get());
  };
  std::sort(balls.begin(), balls.end(), [&](const ComplexBall& a, const ComplexBall& b) {
    if (!real_close(a, b)) return mpfr_greater_p(a.re().get(), b.re().get()) != 0;
    return mpfr_greater_p(a.im().get(), b.im().get()) != 0;
  });
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    root_cache[{key, prec}] = balls;
  }
  return balls;
}

ComplexBall embed_complex(const AlgNum& a, int root_index, long prec) {
  const FieldPtr& k = a.field();
  if (k->is_rationals() || a.is_rational()) return ComplexBall::exact(a.coeffs()[0], prec);
  auto roots = isolate_roots(k->minimal_polynomial(), prec);
  if (root_index < 0 || root_index >= static_cast<int>(roots.size()))
    throw std::out_of_range("root index " + std::to_string(root_index) + " out of range");
  ComplexBall r = eval_ball(a.as_poly(), roots[root_index]);
  return r;
}

}  // namespace g29
