#pragma once

#include <gmpxx.h>

#include <string>

#include "nca/error.hpp"

namespace nca {

// Exact scalars. mpq_class keeps the canonical-form invariant we need
// (gcd(num, den) = 1, den > 0) as long as values are canonicalized on entry;
// all arithmetic preserves it.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw error("bad-rational", "cannot parse rational: '" + s + "'");
  if (r.get_den() == 0)
    throw error("bad-rational", "zero denominator in rational: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational pow_rational(const Rational& base, unsigned e) {
  Rational out(1);
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace nca
