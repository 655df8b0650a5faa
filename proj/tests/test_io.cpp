#include "doctest.h"
#include "support.hpp"
#include "tropglue/canonical.hpp"
#include "tropglue/error.hpp"

using namespace tropglue;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("curve files round trip") {
  for (const char* rel : {"cp2-corner/curves.json", "cp2-corner/pictured.json", "twisted/curve.json"}) {
    for (const auto& c : io::parse_curves(io::read_json_file(testing::data_path(rel)))) {
      const auto j = io::curve_to_json(c);
      const auto back = io::parse_curve(j);
      CHECK(canonical_form(back.type) == canonical_form(c.type));
      CHECK(io::curve_to_json(back) == j);
      CHECK(back.domain.twist == c.domain.twist);
      REQUIRE(back.points.points.size() == c.points.points.size());
      for (std::size_t i = 0; i < c.points.points.size(); ++i) {
        CHECK(back.points.points[i].second.x == c.points.points[i].second.x);
        CHECK(back.points.points[i].second.y == c.points.points[i].second.y);
      }
    }
  }
}

TEST_CASE("enumerated curves round trip with exact coordinates") {
  const auto r = count_nd_retry(2, 4, 8);
  for (const auto& c : r.curves) {
    const auto config = plane_gluing_config(c, r.config);
    const auto back = io::parse_curve(io::parse_text(io::curve_to_json(config).dump(), "round trip"));
    CHECK(canonical_form(back.type) == c.canonical);
    CHECK(is_rigid(back.type, back.domain, back.points.as_map()));
    for (std::size_t i = 0; i < r.config.points.size(); ++i) {
      CHECK(back.points.points[i].second.x == r.config.points[i].second.x);
    }
  }
}

TEST_CASE("tables round trip") {
  const auto t = io::parse_table(io::read_json_file(testing::data_path("cp2-corner/table.json")));
  CHECK(t.entries().size() == 14);
  const auto j = io::table_to_json(t);
  CHECK(io::table_to_json(io::parse_table(j)) == j);
}

TEST_CASE("table forms") {
  const auto list = io::parse_text(R"([{"face": "C1", "contacts": [{"divisor": "D12", "order": 1}],
    "n_points": 1, "coeff": "2/4", "energy": {"e12": "1"}}])", "t");
  const auto t = io::parse_table(list);
  const auto key = make_key(FaceId::C1, {contact_data(FaceId::C1, {1, 0})}, 1);
  REQUIRE(t.find(key));
  CHECK(t.find(key)->front().coeff == make_rat(1, 2));
  CHECK(t.find(key)->front().energy == EnergyVec{1, 0, 0});

  const auto terms = io::parse_text(R"({"entries": [{"face": "C3", "contacts": [], "n_points": 0,
    "terms": [{"coeff": "1", "energy": {"e13": "1"}}, {"coeff": "-1", "energy": {}}]}]})", "t");
  const auto tt = io::parse_table(terms);
  CHECK(tt.find(make_key(FaceId::C3, {}, 0))->size() == 2);
}

TEST_CASE("malformed input is rejected") {
  CHECK(code_of([] { io::parse_text("{", "x"); }) == ErrorCode::InvalidInput);
  auto doc = io::read_json_file(testing::data_path("cp2-corner/pictured.json"));
  auto bad = doc;
  bad["points"][0]["x"] = "0.5";
  CHECK(code_of([&] { io::parse_curve(bad); }) == ErrorCode::InvalidInput);
  bad = doc;
  bad["vertices"][0]["face"] = "C9";
  CHECK(code_of([&] { io::parse_curve(bad); }) == ErrorCode::InvalidInput);
  bad = doc;
  bad.erase("domain");
  CHECK(code_of([&] { io::parse_curve(bad); }) == ErrorCode::InvalidInput);
  bad = doc;
  bad["edges"][0].erase("dx");
  CHECK(code_of([&] { io::parse_curve(bad); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { io::read_json_file("/nonexistent/file.json"); }) == ErrorCode::InvalidInput);

  const auto dup = io::parse_text(R"([
    {"face": "C1", "contacts": [{"divisor": "D12", "order": 1}], "n_points": 1, "coeff": "1", "energy": {}},
    {"face": "C1", "contacts": [{"divisor": "D12", "order": 1}, {"divisor": "D13", "order": 0}], "n_points": 1, "coeff": "1", "energy": {}}])",
                                  "t");
  CHECK(code_of([&] { io::parse_table(dup); }) == ErrorCode::InvalidInput);
  const auto far = io::parse_text(
      R"([{"face": "C1", "contacts": [{"divisor": "D23", "order": 1}], "n_points": 1, "coeff": "1", "energy": {}}])", "t");
  CHECK(code_of([&] { io::parse_table(far); }) == ErrorCode::InvalidInput);
}

TEST_CASE("curve document forms") {
  const auto one = io::read_json_file(testing::data_path("cp2-corner/pictured.json"));
  CHECK(io::parse_curves(one).size() == 1);
  CHECK(io::parse_curves(io::Json::array({one, one})).size() == 2);
  CHECK(io::parse_curves(io::Json{{"curves", io::Json::array({one})}}).size() == 1);
}
