#include "tropglue/tropical.hpp"

#include <numeric>
#include <set>
#include <string>

#include "tropglue/error.hpp"
#include "tropglue/linalg.hpp"

namespace tropglue {

void CombinatorialType::validate() const {
  std::set<int> ids;
  for (const auto& v : vertices) {
    if (!ids.insert(v.id).second) {
      throw Error(ErrorCode::InvalidInput, "duplicate vertex id " + std::to_string(v.id));
    }
    if (v.base_degree < 0) {
      throw Error(ErrorCode::InvalidInput, "negative base degree at vertex " + std::to_string(v.id));
    }
  }
  auto require = [&](int id, const std::string& what) {
    if (!ids.count(id)) throw Error(ErrorCode::InvalidInput, what + " references unknown vertex " + std::to_string(id));
  };
  std::set<int> edge_ids;
  for (const auto& e : internal_edges) {
    if (!edge_ids.insert(e.id).second) {
      throw Error(ErrorCode::InvalidInput, "duplicate edge id " + std::to_string(e.id));
    }
    require(e.tail, "edge " + std::to_string(e.id));
    require(e.head, "edge " + std::to_string(e.id));
  }
  std::set<int> labels;
  for (const auto& end : labeled_ends) {
    if (!labels.insert(end.label).second) {
      throw Error(ErrorCode::InvalidInput, "end label " + std::to_string(end.label) + " used twice");
    }
    require(end.vertex, "end " + std::to_string(end.label));
  }
  int expected = 1;
  for (int label : labels) {
    if (label != expected++) {
      throw Error(ErrorCode::InvalidInput, "end labels must be exactly 1..n");
    }
  }
  for (const auto& u : unbounded_ends) {
    require(u.vertex, "unbounded end");
    if (u.direction.is_zero()) throw Error(ErrorCode::InvalidInput, "unbounded end with zero direction");
  }
}

std::size_t CombinatorialType::vertex_index(int id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return i;
  }
  throw Error(ErrorCode::InvalidInput, "unknown vertex " + std::to_string(id));
}

std::vector<Incidence> CombinatorialType::incidences(int vertex_id) const {
  std::vector<Incidence> out;
  for (std::size_t i = 0; i < internal_edges.size(); ++i) {
    const auto& e = internal_edges[i];
    if (e.tail == vertex_id) out.push_back({Incidence::Kind::Internal, i, e.derivative});
    if (e.head == vertex_id) out.push_back({Incidence::Kind::Internal, i, -e.derivative});
  }
  for (std::size_t i = 0; i < unbounded_ends.size(); ++i) {
    if (unbounded_ends[i].vertex == vertex_id) {
      out.push_back({Incidence::Kind::Unbounded, i, unbounded_ends[i].direction});
    }
  }
  return out;
}

std::size_t CombinatorialType::contracted_count(int vertex_id) const {
  std::size_t n = 0;
  for (const auto& end : labeled_ends) n += end.vertex == vertex_id;
  return n;
}

IntVec2 balancing_defect(const CombinatorialType& type, const Domain& domain, int vertex_id) {
  IntVec2 sum;
  for (const auto& inc : type.incidences(vertex_id)) sum += inc.away;
  const auto& v = type.vertex(vertex_id);
  return sum - v.base_degree * domain.twist;
}

std::int64_t genus(const CombinatorialType& type) {
  const std::size_t n = type.vertices.size();
  if (n == 0) throw Error(ErrorCode::Disconnected, "curve has no vertices");
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : type.internal_edges) {
    const auto a = find(type.vertex_index(e.tail));
    const auto b = find(type.vertex_index(e.head));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) {
    throw Error(ErrorCode::Disconnected, "curve graph has " + std::to_string(components) + " components");
  }
  return static_cast<std::int64_t>(type.internal_edges.size()) - static_cast<std::int64_t>(n) + 1;
}

RealizeResult realize(const CombinatorialType& type, const Domain& domain, const PointMap& points) {
  type.validate();
  const bool triangle = domain.mode == Mode::Triangle;
  if (triangle && !type.unbounded_ends.empty()) {
    throw Error(ErrorCode::InvalidInput, "unbounded ends are only allowed in plane mode");
  }
  for (const auto& end : type.labeled_ends) {
    const auto it = points.find(end.label);
    if (it == points.end()) {
      throw Error(ErrorCode::InvalidInput, "no point given for end " + std::to_string(end.label));
    }
    if (triangle) {
      const FaceId at = classify_point(it->second);
      const FaceId want = type.vertex(end.vertex).face;
      if (at != want) {
        throw Error(ErrorCode::InvalidInput, "point " + std::to_string(end.label) + " lies on " +
                                                 std::string(face_name(at)) + " but its vertex is on " +
                                                 std::string(face_name(want)));
      }
    }
  }

  const std::size_t nv = type.vertices.size();
  const std::size_t ne = type.internal_edges.size();
  LinearSystem sys(2 * nv + ne);
  auto xv = [](std::size_t i) { return 2 * i; };
  auto yv = [](std::size_t i) { return 2 * i + 1; };
  auto len = [nv](std::size_t j) { return 2 * nv + j; };

  for (std::size_t j = 0; j < ne; ++j) {
    const auto& e = type.internal_edges[j];
    const auto t = type.vertex_index(e.tail);
    const auto h = type.vertex_index(e.head);
    const Rat dx(static_cast<long>(e.derivative.x));
    const Rat dy(static_cast<long>(e.derivative.y));
    sys.add_row({{xv(h), 1}, {xv(t), -1}, {len(j), -dx}}, 0);
    sys.add_row({{yv(h), 1}, {yv(t), -1}, {len(j), -dy}}, 0);
  }
  if (triangle) {
    for (std::size_t i = 0; i < nv; ++i) {
      const FaceId f = type.vertices[i].face;
      if (is_corner(f)) {
        const RatPoint c = corner_point(f);
        sys.add_row({{xv(i), 1}}, c.x);
        sys.add_row({{yv(i), 1}}, c.y);
      } else if (f == FaceId::S12) {
        sys.add_row({{yv(i), 1}}, 0);
      } else if (f == FaceId::S13) {
        sys.add_row({{xv(i), 1}}, 0);
      } else if (f == FaceId::S23) {
        sys.add_row({{xv(i), 1}, {yv(i), 1}}, 1);
      }
    }
  }
  for (const auto& end : type.labeled_ends) {
    const auto i = type.vertex_index(end.vertex);
    const auto& p = points.at(end.label);
    sys.add_row({{xv(i), 1}}, p.x);
    sys.add_row({{yv(i), 1}}, p.y);
  }

  const auto sol = sys.solve();
  RealizeResult result;
  result.consistent = sol.consistent;
  result.deformation_dim = sol.nullity;
  if (!sol.consistent) return result;

  Realization r;
  r.deformation_dim = sol.nullity;
  for (std::size_t i = 0; i < nv; ++i) {
    r.positions[type.vertices[i].id] = {sol.values[xv(i)], sol.values[yv(i)]};
  }
  for (std::size_t j = 0; j < ne; ++j) {
    const Rat& l = sol.values[len(j)];
    if (l <= 0) return result;
    r.lengths[type.internal_edges[j].id] = l;
  }
  if (triangle) {
    for (const auto& v : type.vertices) {
      const auto& p = r.positions.at(v.id);
      const Rat s = p.x + p.y;
      if (p.x < 0 || p.y < 0 || s > 1) return result;
      if (classify_point(p) != v.face) return result;
    }
  }
  result.realization = std::move(r);
  return result;
}

bool is_rigid(const CombinatorialType& type, const Domain& domain, const PointMap& points) {
  const auto r = realize(type, domain, points);
  return r.realization.has_value() && r.deformation_dim == 0;
}

}  // namespace tropglue
