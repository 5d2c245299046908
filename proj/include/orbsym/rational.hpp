#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbsym {

using Q = mpq_class;

// Parses "num", "num/den" or "-num/den" into a canonical rational.
Q parse_rat(const std::string& s);

// Canonical "num/den" rendering ("3", "-1/2", "0").
std::string rat_str(const Q& q);

// q^e for integer e (negative allowed; q must be nonzero then).
Q qpow(const Q& q, long e);

Q factorial(long n);
Q binomial(long n, long k);

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

// a + b*i with exact rational parts; enough field arithmetic for the
// sqrt(-1)-rescaled intertwiner checks.
struct GaussQ {
  Q re, im;
  GaussQ() : re(0), im(0) {}
  GaussQ(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussQ(const Q& r) : re(r), im(0) {}

  GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
  GaussQ operator-(const GaussQ& o) const { return {re - o.re, im - o.im}; }
  GaussQ operator*(const GaussQ& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

// i^e for any integer e.
GaussQ i_power(long e);

std::string gauss_str(const GaussQ& g);

}  // namespace orbsym
