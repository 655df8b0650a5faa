#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tropglue/complex.hpp"
#include "tropglue/lattice.hpp"

namespace tropglue {

struct Vertex {
  int id = 0;
  FaceId face = FaceId::Int;
  std::int64_t base_degree = 0;  // only consulted when the domain twist is nonzero
};

// Derivative is stored in the tail -> head orientation.
struct InternalEdge {
  int id = 0;
  int tail = 0;
  int head = 0;
  IntVec2 derivative;
};

// Contracted end carrying marked point `label`.
struct LabeledEnd {
  int label = 0;
  int vertex = 0;
};

// Plane mode only: semi-infinite ray leaving `vertex`.
struct UnboundedEnd {
  int vertex = 0;
  IntVec2 direction;
};

// One edge-end at a vertex, with the derivative oriented away from it.
struct Incidence {
  enum class Kind { Internal, Unbounded };
  Kind kind = Kind::Internal;
  std::size_t index = 0;  // into internal_edges or unbounded_ends
  IntVec2 away;
};

class CombinatorialType {
 public:
  std::vector<Vertex> vertices;
  std::vector<InternalEdge> internal_edges;
  std::vector<LabeledEnd> labeled_ends;
  std::vector<UnboundedEnd> unbounded_ends;

  // Throws Error(InvalidInput) on dangling references, duplicate ids or labels.
  void validate() const;

  std::size_t vertex_index(int id) const;
  const Vertex& vertex(int id) const { return vertices[vertex_index(id)]; }

  // Loops contribute two incidences.
  std::vector<Incidence> incidences(int vertex_id) const;
  std::size_t contracted_count(int vertex_id) const;
};

// Sum of away-derivatives at an interior vertex minus base_degree * twist.
IntVec2 balancing_defect(const CombinatorialType& type, const Domain& domain, int vertex_id);

// First Betti number. Throws Error(Disconnected) if the graph is not connected.
std::int64_t genus(const CombinatorialType& type);

struct Realization {
  std::map<int, RatPoint> positions;
  std::map<int, Rat> lengths;
  std::size_t deformation_dim = 0;
};

struct RealizeResult {
  std::optional<Realization> realization;
  bool consistent = false;      // the equality system has a solution
  std::size_t deformation_dim = 0;  // kernel dimension of the equality system
};

using PointMap = std::map<int, RatPoint>;

// Solves the continuity system exactly. Returns no realization when the system is
// inconsistent, some length is <= 0, or a vertex leaves its face. For
// positive-dimensional solution sets the realization is one representative.
// Throws Error(InvalidInput) when a labeled end's point is not on its vertex's face.
RealizeResult realize(const CombinatorialType& type, const Domain& domain, const PointMap& points);

bool is_rigid(const CombinatorialType& type, const Domain& domain, const PointMap& points);

// Graph automorphisms fixing every labeled end and preserving faces, degrees and
// derivatives, including permutations of identical parallel edges.
BigInt aut_order(const CombinatorialType& type);

}  // namespace tropglue
