#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tropglue/lattice.hpp"

namespace tropglue {

// Faces of the closed triangle with corners C1=(0,0), C2=(1,0), C3=(0,1).
// Sij is the open side between Ci and Cj, Int the open interior.
enum class FaceId { C1, C2, C3, S12, S13, S23, Int };

std::string_view face_name(FaceId face);
FaceId parse_face(std::string_view name);
bool is_corner(FaceId face);
bool is_side(FaceId face);
RatPoint corner_point(FaceId corner);

enum class Mode { Triangle, Plane };

// Plane mode is all of R^2 with no face structure. The twist is the
// per-base-degree balancing deficit applied at interior vertices.
struct Domain {
  Mode mode = Mode::Triangle;
  IntVec2 twist;

  static Domain triangle(IntVec2 twist = {}) { return {Mode::Triangle, twist}; }
  static Domain plane() { return {Mode::Plane, {}}; }
};

// Contact targets. L12/L13 hold the interior (L12, L13)-direction zero/pole
// orders; Lfiber is the fiber order on a side.
enum class Divisor { D12, D13, D23, D123, Lfiber, L12, L13 };

std::string_view divisor_name(Divisor d);
Divisor parse_divisor(std::string_view name);

struct ContactData {
  std::map<Divisor, std::int64_t> orders;

  friend bool operator==(const ContactData&, const ContactData&) = default;
  friend auto operator<=>(const ContactData& a, const ContactData& b) { return a.orders <=> b.orders; }
};

std::string to_string(const ContactData& c);

// Classifies a point of the closed triangle. Throws Error(OutOfDomain) otherwise.
FaceId classify_point(const RatPoint& p);
FaceId classify_point(const Domain& domain, const RatPoint& p);

struct SideFrame {
  IntVec2 alpha;  // along the side, from Ci toward Cj
  IntVec2 beta;   // from Ci toward the remaining corner
};

// Throws Error(InvalidInput) if face is not a side.
SideFrame side_frame(FaceId side);

// Contact orders for an edge leaving a vertex on `face` with derivative u.
// Corners and sides report every adjacent divisor, zeros included.
// Throws Error(InvalidContact) when u is not of the form the face requires.
ContactData contact_data(FaceId face, IntVec2 u);

// Divisors that may appear in contact data at a face.
bool divisor_adjacent(FaceId face, Divisor d);

}  // namespace tropglue
