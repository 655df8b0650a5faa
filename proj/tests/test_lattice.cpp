#include <numeric>
#include <random>

#include "doctest.h"
#include "tropglue/error.hpp"
#include "tropglue/lattice.hpp"

using namespace tropglue;

TEST_CASE("wedge examples") {
  CHECK(wedge(IntVec2{1, 1}, IntVec2{-2, 1}) == 3);
  CHECK(wedge(IntVec2{1, 0}, IntVec2{1, 0}) == 0);
  CHECK(wedge(IntVec2{-1, -2}, IntVec2{2, 1}) == 3);
  CHECK(wedge(IntVec2{0, 1}, IntVec2{1, 0}) == -1);
}

TEST_CASE("wedge overflow is reported, not wrapped") {
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK_THROWS_AS(wedge(IntVec2{big, 0}, IntVec2{0, big}), Error);
}

TEST_CASE("wedge is antisymmetric and bilinear on random vectors") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> c(-1'000'000, 1'000'000);
  for (int i = 0; i < 1000; ++i) {
    const IntVec2 u{c(rng), c(rng)}, u2{c(rng), c(rng)}, v{c(rng), c(rng)};
    REQUIRE(wedge(u, v) == -wedge(v, u));
    REQUIRE(wedge(u, u) == 0);
    REQUIRE(wedge(u + u2, v) == wedge(u, v) + wedge(u2, v));
    // Oracle in 128-bit arithmetic.
    const __int128 expect = static_cast<__int128>(u.x) * v.y - static_cast<__int128>(u.y) * v.x;
    REQUIRE(static_cast<__int128>(wedge(u, v)) == expect);
  }
}

TEST_CASE("rational wedge") {
  CHECK(wedge(RatPoint{make_rat(1, 2), make_rat(1, 3)}, IntVec2{1, 1}) == make_rat(1, 6));
  CHECK(wedge(IntVec2{1, 1}, RatPoint{make_rat(1, 2), make_rat(1, 3)}) == make_rat(-1, 6));
}

TEST_CASE("primitive_decompose examples") {
  auto d = primitive_decompose({2, 4});
  CHECK(d.multiple == 2);
  CHECK(d.primitive == IntVec2{1, 2});
  d = primitive_decompose({0, 0});
  CHECK(d.multiple == 0);
  CHECK(d.primitive == IntVec2{0, 0});
  d = primitive_decompose({-3, 0});
  CHECK(d.multiple == 3);
  CHECK(d.primitive == IntVec2{-1, 0});
}

TEST_CASE("primitive_decompose round trip") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> c(-5000, 5000);
  for (int i = 0; i < 1000; ++i) {
    const IntVec2 u{c(rng), c(rng)};
    const auto d = primitive_decompose(u);
    REQUIRE(d.multiple >= 0);
    REQUIRE(IntVec2{d.multiple * d.primitive.x, d.multiple * d.primitive.y} == u);
    if (!u.is_zero()) {
      REQUIRE(std::gcd(d.primitive.x, d.primitive.y) == 1);
      REQUIRE(d.multiple == std::gcd(u.x, u.y));
    }
  }
}

TEST_CASE("rationals are canonical") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4")) == "-4");
  CHECK(to_string(make_rat(10, -4)) == "-5/2");
  CHECK(make_rat(2, 4).get_den() == 2);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}
