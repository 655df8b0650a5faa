#include "tropglue/glue.hpp"

#include <algorithm>
#include <deque>

#include "tropglue/error.hpp"

namespace tropglue {

namespace {

std::string coeff_prefix(const Rat& c) {
  if (c == 1) return "";
  if (c.get_den() == 1) return to_string(c);
  return "(" + to_string(c) + ")";
}

TableKey vertex_key(const CombinatorialType& type, const Vertex& v) {
  std::vector<ContactData> profile;
  for (const auto& inc : type.incidences(v.id)) profile.push_back(contact_data(v.face, inc.away));
  return make_key(v.face, std::move(profile), static_cast<int>(type.contracted_count(v.id)));
}

}  // namespace

std::map<int, TableKey> boundary_keys(const CombinatorialType& type) {
  std::map<int, TableKey> keys;
  for (const auto& v : type.vertices) {
    if (v.face != FaceId::Int) keys.emplace(v.id, vertex_key(type, v));
  }
  return keys;
}

std::string to_string(const EnergyVec& e) {
  std::string out;
  auto part = [&](const Rat& c, const char* name) {
    if (c == 0) return;
    if (!out.empty()) out += c > 0 ? "+" : "";
    out += coeff_prefix(c) + name;
  };
  part(e.e12, "E12");
  part(e.e13, "E13");
  part(e.e23, "E23");
  return out.empty() ? "0" : out;
}

NovikovPoly NovikovPoly::monomial(const Rat& c, const EnergyVec& e) {
  NovikovPoly p;
  p.add_term(c, e);
  return p;
}

void NovikovPoly::add_term(const Rat& c, const EnergyVec& e) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NovikovPoly& NovikovPoly::operator+=(const NovikovPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e);
  return *this;
}

NovikovPoly operator*(const NovikovPoly& a, const NovikovPoly& b) {
  NovikovPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea + eb);
  }
  return out;
}

NovikovPoly operator*(const Rat& s, const NovikovPoly& p) {
  NovikovPoly out;
  for (const auto& [e, c] : p.terms_) out.add_term(s * c, e);
  return out;
}

std::string to_string(const NovikovPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (!e.is_zero()) out += "·q^(" + to_string(e) + ")";
  }
  return out;
}

TableKey make_key(FaceId face, std::vector<ContactData> profile, int n_points) {
  if (face == FaceId::Int) {
    throw Error(ErrorCode::InvalidInput, "interior vertex invariants are computed, not tabulated");
  }
  if (n_points < 0) throw Error(ErrorCode::InvalidInput, "negative point count in table key");
  const std::vector<Divisor> adjacent = is_corner(face) ? (face == FaceId::C1   ? std::vector{Divisor::D12, Divisor::D13}
                                                           : face == FaceId::C2 ? std::vector{Divisor::D12, Divisor::D23}
                                                                                : std::vector{Divisor::D13, Divisor::D23})
                                                        : std::vector{Divisor::Lfiber, Divisor::D123};
  for (auto& contact : profile) {
    for (const auto& [d, order] : contact.orders) {
      if (!divisor_adjacent(face, d)) {
        throw Error(ErrorCode::InvalidInput, "divisor " + std::string(divisor_name(d)) + " is not adjacent to " +
                                                 std::string(face_name(face)));
      }
      if (d != Divisor::Lfiber && order < 0) {
        throw Error(ErrorCode::InvalidInput, "negative contact order with " + std::string(divisor_name(d)));
      }
    }
    for (auto d : adjacent) contact.orders.emplace(d, 0);
  }
  std::sort(profile.begin(), profile.end());
  return {face, std::move(profile), n_points};
}

std::string to_string(const TableKey& key) {
  std::string out = std::string(face_name(key.face)) + " [";
  for (std::size_t i = 0; i < key.profile.size(); ++i) {
    if (i) out += ", ";
    out += to_string(key.profile[i]);
  }
  return out + "] with " + std::to_string(key.n_points) + " point(s)";
}

void VertexInvariantTable::add(TableKey key, std::vector<InvariantTerm> terms) {
  key = make_key(key.face, std::move(key.profile), key.n_points);
  for (const auto& t : terms) {
    if (!t.energy.nonnegative()) throw Error(ErrorCode::InvalidInput, "negative energy in table entry " + to_string(key));
  }
  const std::string name = to_string(key);
  if (!entries_.emplace(std::move(key), std::move(terms)).second) {
    throw Error(ErrorCode::InvalidInput, "duplicate table entry " + name);
  }
}

const std::vector<InvariantTerm>* VertexInvariantTable::find(const TableKey& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

ThetaClass interior_invariant(const InteriorVertex& v, std::span<const ThetaClass> incoming) {
  if (incoming.size() != v.incoming.size()) {
    throw Error(ErrorCode::Internal, "interior vertex " + std::to_string(v.id) + ": class/derivative count mismatch");
  }
  const std::size_t valence = v.incoming.size() + (v.outgoing ? 1 : 0);
  auto unsupported = [&] {
    return Error(ErrorCode::UnsupportedVertex, "interior vertex " + std::to_string(v.id) + " with " +
                                                   std::to_string(valence) + " edges and " +
                                                   std::to_string(v.contracted) + " marked point(s)");
  };
  std::int64_t factor = 0;
  if (v.contracted > 0) {
    // A marked point on an edge passes its class through.
    if (v.contracted != 1 || valence != 2) throw unsupported();
    factor = 1;
  } else if (valence == 3) {
    factor = wedge(v.incoming[0], v.incoming[1]);
  } else if (valence == 2) {
    // Two-edge vertices only balance against a nonzero twist.
    factor = v.outgoing ? wedge(v.incoming[0], -*v.outgoing) : wedge(v.incoming[0], v.incoming[1]);
  } else {
    throw unsupported();
  }
  NovikovPoly coeff = NovikovPoly::monomial(Rat(static_cast<long>(factor < 0 ? -factor : factor)), v.energy);
  for (const auto& theta : incoming) coeff = coeff * theta.coeff;
  return {std::move(coeff)};
}

ThetaClass boundary_invariant(const TableKey& key, const VertexInvariantTable& table,
                              std::span<const ThetaClass> incoming) {
  const auto* terms = table.find(key);
  if (!terms) throw Error(ErrorCode::MissingInvariant, "no vertex invariant for " + to_string(key));
  NovikovPoly coeff;
  for (const auto& t : *terms) coeff.add_term(t.coeff, t.energy);
  for (const auto& theta : incoming) coeff = coeff * theta.coeff;
  return {std::move(coeff)};
}

Evaluation evaluate_curve(const GluingConfig& config, std::optional<int> root) {
  const auto& type = config.type;
  type.validate();
  for (const auto& e : type.internal_edges) {
    if (e.derivative.is_zero()) {
      return {NovikovPoly{}, "internal edge " + std::to_string(e.id) + " has derivative (0,0); its contribution vanishes"};
    }
  }
  if (genus(type) != 0) {
    throw Error(ErrorCode::InvalidInput, "curve '" + config.name + "' has positive genus; the gluing formula here is genus 0");
  }
  const auto r = realize(type, config.domain, config.points.as_map());
  if (!r.realization || r.deformation_dim != 0) {
    throw Error(ErrorCode::NotRigid, "curve '" + config.name + "' is not rigid (deformation dimension " +
                                         std::to_string(r.deformation_dim) +
                                         (r.realization ? "" : ", no realization with positive lengths") + ")");
  }
  for (const auto& v : type.vertices) {
    if (v.face != FaceId::Int) continue;
    const IntVec2 defect = balancing_defect(type, config.domain, v.id);
    if (!defect.is_zero()) {
      throw Error(ErrorCode::Unbalanced, "curve '" + config.name + "' is unbalanced at vertex " + std::to_string(v.id) +
                                             " (defect " + to_string(defect) + ")");
    }
  }

  const int root_id = root ? *root
                           : std::min_element(type.vertices.begin(), type.vertices.end(), [](const Vertex& a, const Vertex& b) {
                               return a.id < b.id;
                             })->id;
  type.vertex_index(root_id);

  // Orient every internal edge toward the root.
  const std::size_t nv = type.vertices.size();
  std::vector<std::optional<std::size_t>> parent_edge(nv);
  std::vector<std::vector<std::size_t>> child_edges(nv);
  std::vector<bool> seen(nv, false);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue{type.vertex_index(root_id)};
  seen[queue.front()] = true;
  while (!queue.empty()) {
    const std::size_t vi = queue.front();
    queue.pop_front();
    order.push_back(vi);
    const int vid = type.vertices[vi].id;
    for (std::size_t j = 0; j < type.internal_edges.size(); ++j) {
      const auto& e = type.internal_edges[j];
      if (e.tail != vid && e.head != vid) continue;
      const std::size_t other = type.vertex_index(e.tail == vid ? e.head : e.tail);
      if (seen[other]) continue;
      seen[other] = true;
      parent_edge[other] = j;
      child_edges[vi].push_back(j);
      queue.push_back(other);
    }
  }

  std::vector<ThetaClass> theta(nv);
  const ThetaClass unit{NovikovPoly::constant(1)};
  NovikovPoly result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t vi = *it;
    const Vertex& v = type.vertices[vi];
    auto away = [&](std::size_t edge) {
      const auto& e = type.internal_edges[edge];
      return e.tail == v.id ? e.derivative : -e.derivative;
    };
    std::vector<ThetaClass> in;
    for (std::size_t j : child_edges[vi]) in.push_back(theta[type.vertex_index(
                                                   type.internal_edges[j].tail == v.id ? type.internal_edges[j].head
                                                                                        : type.internal_edges[j].tail)]);
    ThetaClass out;
    if (v.face == FaceId::Int) {
      InteriorVertex data;
      data.id = v.id;
      for (std::size_t j : child_edges[vi]) data.incoming.push_back(-away(j));
      for (const auto& u : type.unbounded_ends) {
        if (u.vertex != v.id) continue;
        data.incoming.push_back(-u.direction);
        in.push_back(unit);
      }
      if (parent_edge[vi]) data.outgoing = away(*parent_edge[vi]);
      data.contracted = type.contracted_count(v.id);
      if (auto e = config.vertex_energy.find(v.id); e != config.vertex_energy.end()) data.energy = e->second;
      out = interior_invariant(data, in);
    } else {
      if (!config.table) throw Error(ErrorCode::MissingInvariant, "no invariant table for boundary vertex " + std::to_string(v.id));
      out = boundary_invariant(vertex_key(type, v), *config.table, in);
    }
    if (parent_edge[vi]) {
      theta[vi] = std::move(out);
    } else {
      result = std::move(out.coeff);
    }
  }
  return {std::move(result), {}};
}

NovikovPoly total(std::span<const GluingConfig> configs) {
  NovikovPoly sum;
  for (const auto& c : configs) {
    const auto value = evaluate_curve(c).value;
    sum += make_rat(1, aut_order(c.type)) * value;
  }
  return sum;
}

Rat plane_contribution(const MarkedCurve& curve) { return make_rat(curve.multiplicity, curve.aut); }

GluingConfig plane_gluing_config(const MarkedCurve& curve, const PointConfig& points) {
  GluingConfig config;
  config.name = curve.canonical;
  config.type = curve.type;
  config.points = points;
  config.table = std::make_shared<VertexInvariantTable>();
  config.domain = Domain::plane();
  return config;
}

}  // namespace tropglue
