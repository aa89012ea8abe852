#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wpline {

// Exact rational scalar used throughout. GMP keeps Gaussian elimination and
// rewriting coefficients exact no matter how the parameters specialize.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::domain_error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace wpline
