#include "tropglue/complex.hpp"

#include <array>

#include "tropglue/error.hpp"

namespace tropglue {

namespace {

constexpr std::array<std::pair<FaceId, std::string_view>, 7> kFaceNames{{
    {FaceId::C1, "C1"},
    {FaceId::C2, "C2"},
    {FaceId::C3, "C3"},
    {FaceId::S12, "S12"},
    {FaceId::S13, "S13"},
    {FaceId::S23, "S23"},
    {FaceId::Int, "INT"},
}};

constexpr std::array<std::pair<Divisor, std::string_view>, 7> kDivisorNames{{
    {Divisor::D12, "D12"},
    {Divisor::D13, "D13"},
    {Divisor::D23, "D23"},
    {Divisor::D123, "D123"},
    {Divisor::Lfiber, "Lfiber"},
    {Divisor::L12, "L12"},
    {Divisor::L13, "L13"},
}};

ContactData make(std::initializer_list<std::pair<const Divisor, std::int64_t>> init) {
  return ContactData{std::map<Divisor, std::int64_t>(init)};
}

}  // namespace

std::string_view face_name(FaceId face) {
  for (const auto& [f, name] : kFaceNames) {
    if (f == face) return name;
  }
  return "?";
}

FaceId parse_face(std::string_view name) {
  for (const auto& [f, n] : kFaceNames) {
    if (n == name) return f;
  }
  throw Error(ErrorCode::InvalidInput, "unknown face '" + std::string(name) + "'");
}

bool is_corner(FaceId face) { return face == FaceId::C1 || face == FaceId::C2 || face == FaceId::C3; }
bool is_side(FaceId face) { return face == FaceId::S12 || face == FaceId::S13 || face == FaceId::S23; }

RatPoint corner_point(FaceId corner) {
  switch (corner) {
    case FaceId::C1: return {0, 0};
    case FaceId::C2: return {1, 0};
    case FaceId::C3: return {0, 1};
    default: throw Error(ErrorCode::InvalidInput, "not a corner: " + std::string(face_name(corner)));
  }
}

std::string_view divisor_name(Divisor d) {
  for (const auto& [div, name] : kDivisorNames) {
    if (div == d) return name;
  }
  return "?";
}

Divisor parse_divisor(std::string_view name) {
  for (const auto& [d, n] : kDivisorNames) {
    if (n == name) return d;
  }
  throw Error(ErrorCode::InvalidInput, "unknown divisor '" + std::string(name) + "'");
}

std::string to_string(const ContactData& c) {
  std::string out = "{";
  bool first = true;
  for (const auto& [d, order] : c.orders) {
    if (!first) out += ", ";
    first = false;
    out += std::string(divisor_name(d)) + ":" + std::to_string(order);
  }
  return out + "}";
}

FaceId classify_point(const RatPoint& p) {
  const Rat s = p.x + p.y;
  if (p.x < 0 || p.y < 0 || s > 1) {
    throw Error(ErrorCode::OutOfDomain, "point " + to_string(p) + " lies outside the triangle");
  }
  const bool on12 = p.y == 0;
  const bool on13 = p.x == 0;
  const bool on23 = s == 1;
  if (on12 && on13) return FaceId::C1;
  if (on12 && on23) return FaceId::C2;
  if (on13 && on23) return FaceId::C3;
  if (on12) return FaceId::S12;
  if (on13) return FaceId::S13;
  if (on23) return FaceId::S23;
  return FaceId::Int;
}

FaceId classify_point(const Domain& domain, const RatPoint& p) {
  return domain.mode == Mode::Plane ? FaceId::Int : classify_point(p);
}

SideFrame side_frame(FaceId side) {
  switch (side) {
    case FaceId::S12: return {{1, 0}, {0, 1}};
    case FaceId::S13: return {{0, 1}, {1, 0}};
    case FaceId::S23: return {{-1, 1}, {-1, 0}};
    default: throw Error(ErrorCode::InvalidInput, "not a side: " + std::string(face_name(side)));
  }
}

bool divisor_adjacent(FaceId face, Divisor d) {
  switch (face) {
    case FaceId::C1: return d == Divisor::D12 || d == Divisor::D13;
    case FaceId::C2: return d == Divisor::D12 || d == Divisor::D23;
    case FaceId::C3: return d == Divisor::D13 || d == Divisor::D23;
    case FaceId::S12:
    case FaceId::S13:
    case FaceId::S23: return d == Divisor::Lfiber || d == Divisor::D123;
    case FaceId::Int: return d == Divisor::L12 || d == Divisor::L13;
  }
  return false;
}

ContactData contact_data(FaceId face, IntVec2 u) {
  auto invalid = [&](const char* why) {
    return Error(ErrorCode::InvalidContact, "derivative " + to_string(u) + " leaving a vertex on " +
                                                std::string(face_name(face)) + ": " + why);
  };
  switch (face) {
    case FaceId::C1: {
      // (a, b): degree a along M2, degree b along M3.
      if (u.x < 0 || u.y < 0) throw invalid("corner contact orders must be nonnegative");
      return make({{Divisor::D12, u.x}, {Divisor::D13, u.y}});
    }
    case FaceId::C2: {
      // (-a-b, b)
      const std::int64_t b = u.y;
      const std::int64_t a = -u.x - u.y;
      if (a < 0 || b < 0) throw invalid("corner contact orders must be nonnegative");
      return make({{Divisor::D12, a}, {Divisor::D23, b}});
    }
    case FaceId::C3: {
      // (b, -a-b)
      const std::int64_t b = u.x;
      const std::int64_t a = -u.x - u.y;
      if (a < 0 || b < 0) throw invalid("corner contact orders must be nonnegative");
      return make({{Divisor::D13, a}, {Divisor::D23, b}});
    }
    case FaceId::S12:
    case FaceId::S13:
    case FaceId::S23: {
      const auto [alpha, beta] = side_frame(face);
      // The frame is unimodular, so Cramer's rule stays integral.
      const std::int64_t det = wedge(alpha, beta);
      const std::int64_t a = wedge(u, beta) / det;
      const std::int64_t b = wedge(alpha, u) / det;
      if (b < 0) throw invalid("order along the triple intersection must be nonnegative");
      return make({{Divisor::Lfiber, a}, {Divisor::D123, b}});
    }
    case FaceId::Int: return make({{Divisor::L12, u.x}, {Divisor::L13, u.y}});
  }
  throw invalid("unknown face");
}

}  // namespace tropglue
