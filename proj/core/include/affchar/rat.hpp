#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace affchar {

using Rat = mpq_class;
using Int = long;  // matches the GMP expression-template overload set

#define AFF_REQUIRE(cond, msg)                       \
  do {                                               \
    if (!(cond)) throw std::invalid_argument{(msg)}; \
  } while (0)

#define AFF_ASSERT(cond, msg)                   \
  do {                                          \
    if (!(cond)) throw std::logic_error{(msg)}; \
  } while (0)

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// the two-argument mpq_class constructor does not canonicalize; always
// build fractions through this helper
inline Rat frac(Int num, Int den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int to_int(const Rat& r) {
  AFF_ASSERT(is_integer(r), "rational is not an integer");
  AFF_ASSERT(r.get_num().fits_slong_p(), "integer out of range");
  return static_cast<Int>(r.get_num().get_si());
}

// Canonical fraction string: "p" when integral, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s);

}  // namespace affchar
