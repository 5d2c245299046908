#include "orbsym/rational.hpp"

namespace orbsym {

Q parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Q q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Q& q) { return q.get_str(); }

Q qpow(const Q& q, long e) {
  if (e == 0) return Q(1);
  if (sgn(q) == 0) {
    if (e < 0) throw std::domain_error("qpow: zero base, negative exponent");
    return Q(0);
  }
  Q base = e > 0 ? q : Q(1) / q;
  unsigned long k = e > 0 ? e : -e;
  Q acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Q factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Q(z);
}

Q binomial(long n, long k) {
  if (k < 0 || k > n) return Q(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Q(z);
}

GaussQ i_power(long e) {
  long r = ((e % 4) + 4) % 4;
  switch (r) {
    case 0: return {Q(1), Q(0)};
    case 1: return {Q(0), Q(1)};
    case 2: return {Q(-1), Q(0)};
    default: return {Q(0), Q(-1)};
  }
}

std::string gauss_str(const GaussQ& g) {
  if (sgn(g.im) == 0) return rat_str(g.re);
  return rat_str(g.re) + (sgn(g.im) >= 0 ? "+" : "") + rat_str(g.im) + "i";
}

}  // namespace orbsym
