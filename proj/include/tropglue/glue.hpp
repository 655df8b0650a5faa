#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropglue/complex.hpp"
#include "tropglue/enumerate.hpp"
#include "tropglue/lattice.hpp"
#include "tropglue/tropical.hpp"

namespace tropglue {

// Coefficients of E12, E13, E23.
struct EnergyVec {
  Rat e12;
  Rat e13;
  Rat e23;

  bool is_zero() const { return e12 == 0 && e13 == 0 && e23 == 0; }
  bool nonnegative() const { return e12 >= 0 && e13 >= 0 && e23 >= 0; }

  friend EnergyVec operator+(const EnergyVec& a, const EnergyVec& b) {
    return {a.e12 + b.e12, a.e13 + b.e13, a.e23 + b.e23};
  }
  friend bool operator==(const EnergyVec& a, const EnergyVec& b) {
    return a.e12 == b.e12 && a.e13 == b.e13 && a.e23 == b.e23;
  }
  friend bool operator<(const EnergyVec& a, const EnergyVec& b) {
    if (a.e12 != b.e12) return a.e12 < b.e12;
    if (a.e13 != b.e13) return a.e13 < b.e13;
    return a.e23 < b.e23;
  }
};

// "3E12+3E13+3E23"; "0" for the zero vector.
std::string to_string(const EnergyVec& e);

// Finite sum of coeff * q^energy. Zero coefficients are never stored.
class NovikovPoly {
 public:
  NovikovPoly() = default;
  static NovikovPoly constant(const Rat& c) { return monomial(c, {}); }
  static NovikovPoly monomial(const Rat& c, const EnergyVec& e);

  const std::map<EnergyVec, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Rat& c, const EnergyVec& e);
  NovikovPoly& operator+=(const NovikovPoly& o);
  friend NovikovPoly operator+(NovikovPoly a, const NovikovPoly& b) { return a += b; }
  friend NovikovPoly operator*(const NovikovPoly& a, const NovikovPoly& b);
  friend NovikovPoly operator*(const Rat& s, const NovikovPoly& p);
  friend bool operator==(const NovikovPoly& a, const NovikovPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<EnergyVec, Rat> terms_;
};

// "12·q^(3E12+3E13+3E23)", "3", "0".
std::string to_string(const NovikovPoly& p);

// Rank-1 model: the coefficient of the point class of the edge target.
struct ThetaClass {
  NovikovPoly coeff;
};

struct InvariantTerm {
  Rat coeff;
  EnergyVec energy;
};

struct TableKey {
  FaceId face = FaceId::C1;
  std::vector<ContactData> profile;  // sorted
  int n_points = 0;

  friend bool operator==(const TableKey&, const TableKey&) = default;
  friend bool operator<(const TableKey& a, const TableKey& b) {
    if (a.face != b.face) return a.face < b.face;
    if (a.profile != b.profile) return a.profile < b.profile;
    return a.n_points < b.n_points;
  }
};

TableKey make_key(FaceId face, std::vector<ContactData> profile, int n_points);
std::string to_string(const TableKey& key);

// Relative invariants at corner and side vertices, keyed by contact profile.
class VertexInvariantTable {
 public:
  // Throws Error(InvalidInput) on a duplicate key or a divisor not adjacent to the face.
  void add(TableKey key, std::vector<InvariantTerm> terms);
  const std::vector<InvariantTerm>* find(const TableKey& key) const;
  const std::map<TableKey, std::vector<InvariantTerm>>& entries() const { return entries_; }
  std::map<TableKey, std::vector<InvariantTerm>>& mutable_entries() { return entries_; }

 private:
  std::map<TableKey, std::vector<InvariantTerm>> entries_;
};

struct GluingConfig {
  std::string name;
  CombinatorialType type;
  PointConfig points;
  std::shared_ptr<const VertexInvariantTable> table;
  Domain domain;
  std::map<int, EnergyVec> vertex_energy;  // interior vertices, twisted mode
};

// Edge data at an interior vertex. Incoming derivatives are oriented into the
// vertex; unbounded ends count as incoming with unit class.
struct InteriorVertex {
  int id = 0;
  std::vector<IntVec2> incoming;
  std::optional<IntVec2> outgoing;  // oriented away; empty at the root
  std::size_t contracted = 0;
  EnergyVec energy;
};

// Throws Error(UnsupportedVertex) for valences the rank-1 model does not cover.
ThetaClass interior_invariant(const InteriorVertex& v, std::span<const ThetaClass> incoming);

// Throws Error(MissingInvariant) naming the key when the table has no entry.
ThetaClass boundary_invariant(const TableKey& key, const VertexInvariantTable& table,
                              std::span<const ThetaClass> incoming);

// Table key looked up at each non-interior vertex, by vertex id.
std::map<int, TableKey> boundary_keys(const CombinatorialType& type);

struct Evaluation {
  NovikovPoly value;
  std::string diagnostic;  // non-empty when the contribution vanishes for a structural reason
};

// The raw contribution of one curve (not divided by |Aut|). With no root given,
// the vertex with the smallest id is used.
Evaluation evaluate_curve(const GluingConfig& config, std::optional<int> root = std::nullopt);

NovikovPoly total(std::span<const GluingConfig> configs);

// multiplicity / |Aut|.
Rat plane_contribution(const MarkedCurve& curve);

// Gluing config of an enumerated plane curve with an empty table.
GluingConfig plane_gluing_config(const MarkedCurve& curve, const PointConfig& points);

}  // namespace tropglue
