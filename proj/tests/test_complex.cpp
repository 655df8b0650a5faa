#include "doctest.h"
#include "tropglue/complex.hpp"
#include "tropglue/error.hpp"

using namespace tropglue;

namespace {

RatPoint pt(long xn, long xd, long yn, long yd) { return {make_rat(xn, xd), make_rat(yn, yd)}; }

ContactData contacts(std::initializer_list<std::pair<const Divisor, std::int64_t>> init) { return {init}; }

// Face by direct case analysis, written independently of the library.
FaceId expected_face(const RatPoint& p) {
  const bool x0 = p.x == 0, y0 = p.y == 0, hyp = p.x + p.y == 1;
  if (x0 && y0) return FaceId::C1;
  if (y0 && hyp) return FaceId::C2;
  if (x0 && hyp) return FaceId::C3;
  if (y0) return FaceId::S12;
  if (x0) return FaceId::S13;
  if (hyp) return FaceId::S23;
  return FaceId::Int;
}

}  // namespace

TEST_CASE("classify_point examples") {
  CHECK(classify_point(pt(0, 1, 0, 1)) == FaceId::C1);
  CHECK(classify_point(pt(1, 1, 0, 1)) == FaceId::C2);
  CHECK(classify_point(pt(0, 1, 1, 1)) == FaceId::C3);
  CHECK(classify_point(pt(1, 3, 1, 4)) == FaceId::Int);
  CHECK(classify_point(pt(1, 2, 1, 2)) == FaceId::S23);
  CHECK(classify_point(pt(1, 2, 0, 1)) == FaceId::S12);
  CHECK(classify_point(pt(0, 1, 2, 3)) == FaceId::S13);
}

TEST_CASE("points outside the triangle are rejected") {
  CHECK_THROWS_AS(classify_point(pt(1, 1, 1, 1)), Error);
  CHECK_THROWS_AS(classify_point(pt(-1, 2, 0, 1)), Error);
  CHECK_THROWS_AS(classify_point(pt(1, 2, -1, 100)), Error);
  try {
    classify_point(pt(2, 3, 2, 3));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfDomain);
  }
}

TEST_CASE("plane mode has no faces") {
  CHECK(classify_point(Domain::plane(), pt(0, 1, 0, 1)) == FaceId::Int);
  CHECK(classify_point(Domain::plane(), pt(-7, 1, 5, 1)) == FaceId::Int);
  CHECK(classify_point(Domain::triangle(), pt(0, 1, 0, 1)) == FaceId::C1);
}

TEST_CASE("classification partitions a rational grid of the triangle") {
  for (long den = 1; den <= 12; ++den) {
    for (long a = 0; a <= den; ++a) {
      for (long b = 0; a + b <= den; ++b) {
        const RatPoint p = pt(a, den, b, den);
        REQUIRE(classify_point(p) == expected_face(p));
      }
    }
  }
}

TEST_CASE("side frames are unimodular") {
  CHECK(side_frame(FaceId::S12).alpha == IntVec2{1, 0});
  CHECK(side_frame(FaceId::S12).beta == IntVec2{0, 1});
  CHECK(side_frame(FaceId::S13).alpha == IntVec2{0, 1});
  CHECK(side_frame(FaceId::S13).beta == IntVec2{1, 0});
  CHECK(side_frame(FaceId::S23).alpha == IntVec2{-1, 1});
  CHECK(side_frame(FaceId::S23).beta == IntVec2{-1, 0});
  for (FaceId s : {FaceId::S12, FaceId::S13, FaceId::S23}) {
    const auto f = side_frame(s);
    CHECK(std::abs(wedge(f.alpha, f.beta)) == 1);
  }
  CHECK_THROWS_AS(side_frame(FaceId::C1), Error);
}

TEST_CASE("corner contact rules") {
  CHECK(contact_data(FaceId::C1, {1, 1}) == contacts({{Divisor::D12, 1}, {Divisor::D13, 1}}));
  CHECK(contact_data(FaceId::C2, {-2, 1}) == contacts({{Divisor::D12, 1}, {Divisor::D23, 1}}));
  CHECK(contact_data(FaceId::C3, {0, -1}) == contacts({{Divisor::D13, 1}, {Divisor::D23, 0}}));
  CHECK(contact_data(FaceId::C3, {1, -2}) == contacts({{Divisor::D13, 1}, {Divisor::D23, 1}}));
  CHECK(contact_data(FaceId::C1, {2, 0}) == contacts({{Divisor::D12, 2}, {Divisor::D13, 0}}));
}

TEST_CASE("corner contacts must be nonnegative") {
  for (auto [face, u] : std::initializer_list<std::pair<FaceId, IntVec2>>{
           {FaceId::C1, {-1, 0}}, {FaceId::C1, {1, -1}}, {FaceId::C2, {1, 0}}, {FaceId::C3, {0, 1}}}) {
    try {
      contact_data(face, u);
      FAIL("expected invalid contact");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidContact);
    }
  }
}

TEST_CASE("side contact rule round trip") {
  CHECK(contact_data(FaceId::S13, {1, 0}) == contacts({{Divisor::Lfiber, 0}, {Divisor::D123, 1}}));
  for (FaceId s : {FaceId::S12, FaceId::S13, FaceId::S23}) {
    const auto f = side_frame(s);
    for (std::int64_t a = -5; a <= 5; ++a) {
      for (std::int64_t b = 0; b <= 5; ++b) {
        const IntVec2 u{a * f.alpha.x + b * f.beta.x, a * f.alpha.y + b * f.beta.y};
        REQUIRE(contact_data(s, u) == contacts({{Divisor::Lfiber, a}, {Divisor::D123, b}}));
      }
      const IntVec2 out{a * f.alpha.x - f.beta.x, a * f.alpha.y - f.beta.y};
      REQUIRE_THROWS_AS(contact_data(s, out), Error);
    }
  }
}

TEST_CASE("interior contact is the identity on derivatives") {
  CHECK(contact_data(FaceId::Int, {2, -1}) == contacts({{Divisor::L12, 2}, {Divisor::L13, -1}}));
  CHECK(contact_data(FaceId::Int, {-1, -1}) == contacts({{Divisor::L12, -1}, {Divisor::L13, -1}}));
}

TEST_CASE("names round trip") {
  for (FaceId f : {FaceId::C1, FaceId::C2, FaceId::C3, FaceId::S12, FaceId::S13, FaceId::S23, FaceId::Int}) {
    CHECK(parse_face(face_name(f)) == f);
  }
  for (Divisor d : {Divisor::D12, Divisor::D13, Divisor::D23, Divisor::D123, Divisor::Lfiber, Divisor::L12, Divisor::L13}) {
    CHECK(parse_divisor(divisor_name(d)) == d);
  }
  CHECK_THROWS_AS(parse_face("C4"), Error);
  CHECK(divisor_adjacent(FaceId::C1, Divisor::D12));
  CHECK_FALSE(divisor_adjacent(FaceId::C1, Divisor::D23));
}
