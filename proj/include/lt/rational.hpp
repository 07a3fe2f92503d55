#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace lt {

// Exact arbitrary-precision rational, always kept canonical (reduced, positive denominator).
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; this does.
inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline long rat_to_long(const Rat& r) {
  if (!rat_is_integer(r) || !r.get_num().fits_slong_p())
    throw std::domain_error("rational is not a machine integer: " + r.get_str());
  return r.get_num().get_si();
}

}  // namespace lt
