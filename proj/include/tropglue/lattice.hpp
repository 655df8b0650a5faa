#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropglue {

// Exact rational, always canonical (lowest terms, positive denominator).
using Rat = mpq_class;
using BigInt = mpz_class;

// Integral vector in Z^2. Derivatives and directions of tropical edges.
struct IntVec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  constexpr bool is_zero() const { return x == 0 && y == 0; }
  constexpr IntVec2 operator-() const { return {-x, -y}; }
  friend constexpr IntVec2 operator+(IntVec2 a, IntVec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr IntVec2 operator-(IntVec2 a, IntVec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr IntVec2 operator*(std::int64_t k, IntVec2 v) { return {k * v.x, k * v.y}; }
  IntVec2& operator+=(IntVec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend constexpr bool operator==(IntVec2, IntVec2) = default;
  friend constexpr auto operator<=>(IntVec2, IntVec2) = default;
};

std::ostream& operator<<(std::ostream& os, IntVec2 v);
std::string to_string(IntVec2 v);

struct RatPoint {
  Rat x;
  Rat y;

  friend bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const RatPoint& a, const RatPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

RatPoint operator+(const RatPoint& p, const RatPoint& q);
RatPoint operator-(const RatPoint& p, const RatPoint& q);
RatPoint operator*(const Rat& t, IntVec2 v);
std::string to_string(const RatPoint& p);

// u.x*v.y - u.y*v.x. Throws Error(Internal) on int64 overflow.
std::int64_t wedge(IntVec2 u, IntVec2 v);

// Wedge of a rational point-difference with an integral vector.
Rat wedge(const RatPoint& p, IntVec2 v);
Rat wedge(IntVec2 u, const RatPoint& p);

struct PrimitiveDecomposition {
  std::int64_t multiple = 0;  // k >= 0
  IntVec2 primitive;          // gcd 1, same direction as the input; (0,0) iff input is zero
};

// u = k * u0 with u0 primitive. The zero vector maps to (0, (0,0)).
PrimitiveDecomposition primitive_decompose(IntVec2 u);

// Parses "p/q", "p" (optionally signed). Rejects decimals and zero denominators.
Rat parse_rational(std::string_view text);
std::string to_string(const Rat& r);

// num/den in lowest terms. den must be nonzero.
Rat make_rat(const BigInt& num, const BigInt& den);

}  // namespace tropglue
