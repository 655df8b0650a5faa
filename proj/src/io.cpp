#include "tropglue/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "tropglue/error.hpp"

namespace tropglue::io {

namespace {

Error bad(const std::string& what) { return Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& obj, const char* key, const std::string& ctx) {
  if (!obj.is_object() || !obj.contains(key)) throw bad(ctx + ": missing field '" + key + "'");
  return obj.at(key);
}

std::int64_t as_int(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw bad(ctx + ": expected an integer");
  return j.get<std::int64_t>();
}

Rat as_rat(const Json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw bad(ctx + ": expected a rational string \"p/q\" or an integer");
}

int as_id(const Json& j, const std::string& ctx) {
  const auto v = as_int(j, ctx);
  if (v < INT32_MIN || v > INT32_MAX) throw bad(ctx + ": id out of range");
  return static_cast<int>(v);
}

const Json& array_field(const Json& obj, const char* key, const std::string& ctx) {
  static const Json empty = Json::array();
  if (!obj.contains(key)) return empty;
  const Json& a = obj.at(key);
  if (!a.is_array()) throw bad(ctx + ": '" + key + "' must be an array");
  return a;
}

}  // namespace

Json parse_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw bad(what + ": malformed JSON (" + e.what() + ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bad("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

Json energy_to_json(const EnergyVec& e) {
  return {{"e12", to_string(e.e12)}, {"e13", to_string(e.e13)}, {"e23", to_string(e.e23)}};
}

EnergyVec parse_energy(const Json& j) {
  if (!j.is_object()) throw bad("energy must be an object {e12, e13, e23}");
  EnergyVec e;
  if (j.contains("e12")) e.e12 = as_rat(j.at("e12"), "energy.e12");
  if (j.contains("e13")) e.e13 = as_rat(j.at("e13"), "energy.e13");
  if (j.contains("e23")) e.e23 = as_rat(j.at("e23"), "energy.e23");
  if (!e.nonnegative()) throw bad("energy components must be nonnegative");
  return e;
}

Json poly_to_json(const NovikovPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"coeff", to_string(c)}, {"energy", energy_to_json(e)}});
  return terms;
}

GluingConfig parse_curve(const Json& doc) {
  if (!doc.is_object()) throw bad("curve document must be an object");
  GluingConfig config;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw bad("curve name must be a string");
    config.name = doc.at("name").get<std::string>();
  }
  const std::string ctx = config.name.empty() ? std::string("curve") : "curve '" + config.name + "'";

  const Json& domain = field(doc, "domain", ctx);
  const auto mode = field(domain, "mode", ctx + " domain");
  if (!mode.is_string()) throw bad(ctx + ": domain.mode must be a string");
  if (mode == "triangle") {
    config.domain = Domain::triangle();
  } else if (mode == "plane") {
    config.domain = Domain::plane();
  } else {
    throw bad(ctx + ": domain.mode must be \"triangle\" or \"plane\"");
  }
  if (domain.contains("twist")) {
    const Json& t = domain.at("twist");
    config.domain.twist = {as_int(field(t, "dx", ctx + " twist"), ctx + " twist.dx"),
                           as_int(field(t, "dy", ctx + " twist"), ctx + " twist.dy")};
    if (config.domain.mode == Mode::Plane && !config.domain.twist.is_zero()) {
      throw bad(ctx + ": a twist needs the triangle domain");
    }
  }
  config.points.domain = config.domain;

  std::map<int, bool> labels;
  for (const auto& p : array_field(doc, "points", ctx)) {
    const int label = as_id(field(p, "label", ctx + " point"), ctx + " point label");
    if (labels[label]) throw bad(ctx + ": duplicate point label " + std::to_string(label));
    labels[label] = true;
    config.points.points.push_back(
        {label, {as_rat(field(p, "x", ctx + " point"), ctx + " point x"), as_rat(field(p, "y", ctx + " point"), ctx + " point y")}});
  }
  for (const auto& v : array_field(doc, "vertices", ctx)) {
    Vertex vertex;
    vertex.id = as_id(field(v, "id", ctx + " vertex"), ctx + " vertex id");
    const Json& face = field(v, "face", ctx + " vertex");
    if (!face.is_string()) throw bad(ctx + ": vertex face must be a string");
    vertex.face = parse_face(face.get<std::string>());
    if (config.domain.mode == Mode::Plane && vertex.face != FaceId::Int) {
      throw bad(ctx + ": plane-mode vertices must be INT");
    }
    if (v.contains("base_degree")) vertex.base_degree = as_int(v.at("base_degree"), ctx + " base_degree");
    if (v.contains("energy")) config.vertex_energy[vertex.id] = parse_energy(v.at("energy"));
    config.type.vertices.push_back(vertex);
  }
  for (const auto& e : array_field(doc, "edges", ctx)) {
    config.type.internal_edges.push_back({as_id(field(e, "id", ctx + " edge"), ctx + " edge id"),
                                          as_id(field(e, "tail", ctx + " edge"), ctx + " edge tail"),
                                          as_id(field(e, "head", ctx + " edge"), ctx + " edge head"),
                                          {as_int(field(e, "dx", ctx + " edge"), ctx + " edge dx"),
                                           as_int(field(e, "dy", ctx + " edge"), ctx + " edge dy")}});
  }
  for (const auto& e : array_field(doc, "ends", ctx)) {
    config.type.labeled_ends.push_back({as_id(field(e, "label", ctx + " end"), ctx + " end label"),
                                        as_id(field(e, "vertex", ctx + " end"), ctx + " end vertex")});
  }
  for (const auto& u : array_field(doc, "unbounded", ctx)) {
    config.type.unbounded_ends.push_back({as_id(field(u, "vertex", ctx + " unbounded"), ctx + " unbounded vertex"),
                                          {as_int(field(u, "dx", ctx + " unbounded"), ctx + " unbounded dx"),
                                           as_int(field(u, "dy", ctx + " unbounded"), ctx + " unbounded dy")}});
  }
  if (config.domain.mode == Mode::Triangle && !config.type.unbounded_ends.empty()) {
    throw bad(ctx + ": unbounded ends are only allowed in plane mode");
  }
  config.type.validate();
  for (const auto& [id, energy] : config.vertex_energy) {
    if (config.type.vertex(id).face != FaceId::Int) {
      throw bad(ctx + ": per-vertex energy is only allowed on interior vertices");
    }
  }
  return config;
}

Json curve_to_json(const GluingConfig& config) {
  Json doc;
  if (!config.name.empty()) doc["name"] = config.name;
  doc["domain"] = {{"mode", config.domain.mode == Mode::Plane ? "plane" : "triangle"}};
  if (!config.domain.twist.is_zero()) doc["domain"]["twist"] = {{"dx", config.domain.twist.x}, {"dy", config.domain.twist.y}};
  doc["points"] = Json::array();
  for (const auto& [label, p] : config.points.points) {
    doc["points"].push_back({{"label", label}, {"x", to_string(p.x)}, {"y", to_string(p.y)}});
  }
  doc["vertices"] = Json::array();
  for (const auto& v : config.type.vertices) {
    Json j = {{"id", v.id}, {"face", std::string(face_name(v.face))}};
    if (v.base_degree != 0) j["base_degree"] = v.base_degree;
    if (auto it = config.vertex_energy.find(v.id); it != config.vertex_energy.end()) j["energy"] = energy_to_json(it->second);
    doc["vertices"].push_back(std::move(j));
  }
  doc["edges"] = Json::array();
  for (const auto& e : config.type.internal_edges) {
    doc["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"dx", e.derivative.x}, {"dy", e.derivative.y}});
  }
  doc["ends"] = Json::array();
  for (const auto& e : config.type.labeled_ends) doc["ends"].push_back({{"label", e.label}, {"vertex", e.vertex}});
  if (!config.type.unbounded_ends.empty()) {
    doc["unbounded"] = Json::array();
    for (const auto& u : config.type.unbounded_ends) {
      doc["unbounded"].push_back({{"vertex", u.vertex}, {"dx", u.direction.x}, {"dy", u.direction.y}});
    }
  }
  return doc;
}

std::vector<GluingConfig> parse_curves(const Json& doc) {
  const Json* list = nullptr;
  if (doc.is_array()) {
    list = &doc;
  } else if (doc.is_object() && doc.contains("curves")) {
    list = &doc.at("curves");
    if (!list->is_array()) throw bad("'curves' must be an array");
  } else {
    return {parse_curve(doc)};
  }
  std::vector<GluingConfig> out;
  for (const auto& c : *list) out.push_back(parse_curve(c));
  return out;
}

VertexInvariantTable parse_table(const Json& doc) {
  const Json& list = doc.is_object() && doc.contains("entries") ? doc.at("entries") : doc;
  if (!list.is_array()) throw bad("table must be a list of entries");
  VertexInvariantTable table;
  std::size_t index = 0;
  for (const auto& entry : list) {
    const std::string ctx = "table entry " + std::to_string(index++);
    const Json& face = field(entry, "face", ctx);
    if (!face.is_string()) throw bad(ctx + ": face must be a string");
    std::map<std::int64_t, ContactData> by_edge;
    for (const auto& c : array_field(entry, "contacts", ctx)) {
      const std::int64_t edge = c.contains("edge") ? as_int(c.at("edge"), ctx + " contact edge") : 0;
      const Json& div = field(c, "divisor", ctx + " contact");
      if (!div.is_string()) throw bad(ctx + ": divisor must be a string");
      const Divisor d = parse_divisor(div.get<std::string>());
      if (!by_edge[edge].orders.emplace(d, as_int(field(c, "order", ctx + " contact"), ctx + " order")).second) {
        throw bad(ctx + ": divisor " + std::string(divisor_name(d)) + " repeated for one edge");
      }
    }
    std::vector<ContactData> profile;
    for (auto& [edge, contact] : by_edge) profile.push_back(std::move(contact));
    const int n_points = static_cast<int>(as_int(field(entry, "n_points", ctx), ctx + " n_points"));
    auto parse_term = [&](const Json& t) {
      return InvariantTerm{as_rat(field(t, "coeff", ctx), ctx + " coeff"),
                           t.contains("energy") ? parse_energy(t.at("energy")) : EnergyVec{}};
    };
    std::vector<InvariantTerm> terms;
    if (entry.contains("terms")) {
      for (const auto& t : array_field(entry, "terms", ctx)) terms.push_back(parse_term(t));
    } else {
      terms.push_back(parse_term(entry));
    }
    table.add({parse_face(face.get<std::string>()), std::move(profile), n_points}, std::move(terms));
  }
  return table;
}

Json table_to_json(const VertexInvariantTable& table) {
  Json out = Json::array();
  for (const auto& [key, terms] : table.entries()) {
    Json contacts = Json::array();
    for (std::size_t i = 0; i < key.profile.size(); ++i) {
      for (const auto& [d, order] : key.profile[i].orders) {
        contacts.push_back({{"edge", i}, {"divisor", std::string(divisor_name(d))}, {"order", order}});
      }
    }
    Json entry = {{"face", std::string(face_name(key.face))}, {"contacts", contacts}, {"n_points", key.n_points}};
    if (terms.size() == 1) {
      entry["coeff"] = to_string(terms[0].coeff);
      entry["energy"] = energy_to_json(terms[0].energy);
    } else {
      entry["terms"] = Json::array();
      for (const auto& t : terms) entry["terms"].push_back({{"coeff", to_string(t.coeff)}, {"energy", energy_to_json(t.energy)}});
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace tropglue::io
