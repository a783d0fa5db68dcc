#pragma once

#include <mpfr.h>

#include <string>

#include "wsat/rational.hpp"

namespace wsat {

// Closed interval [lo, hi] of MPFR numbers. Every operation rounds lo down and
// hi up, so the exact result of the real operation always lies inside.
class Interval {
 public:
  static constexpr mpfr_prec_t kPrecision = 160;

  Interval();
  explicit Interval(const Rational& q);
  Interval(const Interval& other);
  Interval& operator=(const Interval& other);
  ~Interval();

  static Interval point(const mpfr_t x);

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  // Upper bound minus lower bound, rounded up.
  double width() const;

  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
  bool certainly_geq(const Rational& q) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

  // Natural log and exp; log requires lo > 0.
  friend Interval log(const Interval& a);
  friend Interval exp(const Interval& a);

  std::string to_string(int digits = 12) const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace wsat
