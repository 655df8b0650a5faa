#include "tropglue/lattice.hpp"

#include <cctype>
#include <numeric>
#include <ostream>

#include "tropglue/error.hpp"

namespace tropglue {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::OutOfDomain: return "out-of-domain";
    case ErrorCode::InvalidContact: return "invalid-contact";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::Genericity: return "non-generic";
    case ErrorCode::UnsupportedVertex: return "unsupported-vertex";
    case ErrorCode::MissingInvariant: return "missing-invariant";
    case ErrorCode::NotRigid: return "not-rigid";
    case ErrorCode::Unbalanced: return "unbalanced";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

std::ostream& operator<<(std::ostream& os, IntVec2 v) { return os << '(' << v.x << ',' << v.y << ')'; }

std::string to_string(IntVec2 v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

RatPoint operator+(const RatPoint& p, const RatPoint& q) { return {p.x + q.x, p.y + q.y}; }
RatPoint operator-(const RatPoint& p, const RatPoint& q) { return {p.x - q.x, p.y - q.y}; }
RatPoint operator*(const Rat& t, IntVec2 v) {
  return {t * Rat(static_cast<long>(v.x)), t * Rat(static_cast<long>(v.y))};
}

std::string to_string(const RatPoint& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

std::int64_t wedge(IntVec2 u, IntVec2 v) {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t w = 0;
  if (__builtin_mul_overflow(u.x, v.y, &a) || __builtin_mul_overflow(u.y, v.x, &b) ||
      __builtin_sub_overflow(a, b, &w)) {
    throw Error(ErrorCode::Internal, "wedge overflow for " + to_string(u) + " and " + to_string(v));
  }
  return w;
}

Rat wedge(const RatPoint& p, IntVec2 v) {
  return p.x * Rat(static_cast<long>(v.y)) - p.y * Rat(static_cast<long>(v.x));
}

Rat wedge(IntVec2 u, const RatPoint& p) { return -wedge(p, u); }

PrimitiveDecomposition primitive_decompose(IntVec2 u) {
  if (u.is_zero()) return {0, {0, 0}};
  const std::int64_t g = std::gcd(u.x, u.y);
  return {g, {u.x / g, u.y / g}};
}

Rat parse_rational(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::InvalidInput, "not an exact rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  const auto slash = text.find('/');
  auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!valid_int(num, true) || !valid_int(den, false)) throw fail();
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  BigInt d(den, 10);
  if (d == 0) throw fail();
  Rat r(BigInt(num, 10), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

Rat make_rat(const BigInt& num, const BigInt& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace tropglue
