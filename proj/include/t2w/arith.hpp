#pragma once

// Checked 64-bit integer arithmetic. Every operation that could leave the
// int64 range throws Error(kOverflow) instead of wrapping.

#include <cstdint>
#include <cstdlib>
#include <string>

#include "t2w/error.hpp"

namespace t2w::arith {

[[noreturn]] inline void overflow(const char* op) {
  throw Error(ErrorCode::kOverflow,
              std::string("integer overflow in ") + op + " (exceeds 64-bit range)");
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) overflow("addition");
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) overflow("subtraction");
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) overflow("multiplication");
  return out;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

// a*d - b*c
inline std::int64_t det2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return sub(mul(a, d), mul(b, c));
}

inline std::uint64_t magnitude(std::int64_t a) {
  return a < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
}

// gcd(|a|, |b|) computed without overflow; gcd(0, 0) == 0.
inline std::uint64_t ugcd(std::int64_t a, std::int64_t b) {
  std::uint64_t x = magnitude(a), y = magnitude(b);
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return x;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  std::uint64_t g = ugcd(a, b);
  if (g > static_cast<std::uint64_t>(INT64_MAX)) overflow("gcd");
  return static_cast<std::int64_t>(g);
}

// Representative of a modulo m in [0, |m|). m must be nonzero.
inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  if (m == 0) throw Error(ErrorCode::kInternal, "floor_mod by zero");
  if (m == -1 || m == 1) return 0;
  std::int64_t am = abs(m);
  std::int64_t r = a % am;
  return r < 0 ? r + am : r;
}

struct ExtendedGcd {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;  // x*a + y*b == g
};

inline ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = sub(old_r, mul(q, r));
    old_r = r;
    r = t;
    t = sub(old_x, mul(q, x));
    old_x = x;
    x = t;
    t = sub(old_y, mul(q, y));
    old_y = y;
    y = t;
  }
  if (old_r < 0) return {neg(old_r), neg(old_x), neg(old_y)};
  return {old_r, old_x, old_y};
}

}  // namespace t2w::arith
