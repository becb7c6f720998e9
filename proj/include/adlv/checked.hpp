#ifndef ADLV_CHECKED_HPP
#define ADLV_CHECKED_HPP

#include <cstdint>

#include "adlv/errors.hpp"

namespace adlv {

// All lattice coordinates and lengths use 64-bit integers with explicit
// overflow detection. Values never wrap: any operation that would exceed
// the representable range throws OverflowError.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

// a^n for n >= 0.
inline Int checked_pow(Int a, int n) {
  if (n < 0) throw InvalidInput("checked_pow: negative exponent");
  Int r = 1;
  for (int k = 0; k < n; ++k) r = checked_mul(r, a);
  return r;
}

} // namespace adlv

#endif
