// Small helpers on top of GMP's C++ classes.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pinwheel {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Normalized rational from a possibly unreduced pair.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Floor of the square root; n must be nonnegative.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Least nonnegative residue of a mod m (m > 0).
inline Int mod_reduce(const Int& a, const Int& m) {
  if (m <= 0) throw std::domain_error("mod_reduce: modulus must be positive");
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Inverse of a mod m; throws when gcd(a, m) != 1.
inline Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("mod_inverse: not invertible");
  return r;
}

// Conversion guard for loop bounds that must fit a machine integer.
inline unsigned long to_ulong_checked(const Int& n, const char* what) {
  if (n < 0 || !n.fits_ulong_p())
    throw std::overflow_error(std::string(what) + ": value out of supported range");
  return n.get_ui();
}

}  // namespace pinwheel
