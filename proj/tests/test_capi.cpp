#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tropglue/tropglue.h"

using Json = nlohmann::json;

namespace {

struct Ctx {
  tg_context* p = tg_context_create();
  ~Ctx() { tg_context_destroy(p); }
};

std::string data(const std::string& rel) { return std::string(TROPGLUE_DATA_DIR) + "/" + rel; }
std::string fixture(const std::string& rel) { return std::string(TESTS_DATA_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("context lifecycle and argument checks") {
  Ctx c;
  REQUIRE(c.p);
  CHECK(std::string(tg_last_error(c.p)).empty());
  CHECK(tg_count(c.p, 0, 1, 8) == TG_ERR_ARGUMENT);
  CHECK(std::string(tg_last_error(c.p)).find("degree") != std::string::npos);
  CHECK(tg_kontsevich(nullptr, 3) == TG_ERR_ARGUMENT);
  CHECK(tg_evaluate_text(c.p, nullptr, nullptr) == TG_ERR_ARGUMENT);
  CHECK(tg_set_threads(c.p, 0) == TG_OK);
  CHECK(std::string(tg_status_name(TG_ERR_MISSING_INVARIANT)) == "missing invariant");
  tg_context_destroy(nullptr);
}

TEST_CASE("wedge") {
  std::int64_t w = 0;
  CHECK(tg_wedge(1, 1, -2, 1, &w) == TG_OK);
  CHECK(w == 3);
  CHECK(tg_wedge(-1, -2, 2, 1, &w) == TG_OK);
  CHECK(w == 3);
  CHECK(tg_wedge(INT64_MAX, 0, 0, INT64_MAX, &w) == TG_ERR_ARGUMENT);
  CHECK(tg_wedge(1, 0, 0, 1, nullptr) == TG_ERR_ARGUMENT);
}

TEST_CASE("kontsevich and count") {
  Ctx c;
  REQUIRE(tg_kontsevich(c.p, 4) == TG_OK);
  CHECK(Json::parse(tg_result(c.p)).at("value") == "620");
  REQUIRE(tg_count(c.p, 3, 1, 8) == TG_OK);
  const auto r = Json::parse(tg_result(c.p));
  CHECK(r.at("count") == "12");
  CHECK(r.at("points").size() == 8);
  std::size_t total = 0;
  for (const auto& curve : r.at("curves")) total += std::stoul(curve.at("multiplicity").get<std::string>());
  CHECK(total == 12);
  // Deterministic for a fixed seed.
  const std::string first = tg_result(c.p);
  REQUIRE(tg_count(c.p, 3, 1, 8) == TG_OK);
  CHECK(first == tg_result(c.p));
}

TEST_CASE("evaluate files") {
  Ctx c;
  REQUIRE(tg_evaluate_files(c.p, data("cp2-corner/curves.json").c_str(), data("cp2-corner/table.json").c_str()) == TG_OK);
  const auto r = Json::parse(tg_result(c.p));
  CHECK(r.at("total") == "12·q^(3E12+3E13+3E23)");
  CHECK(r.at("curves").size() == 10);
  CHECK(r.at("curves")[0].at("value") == "3·q^(3E12+3E13+3E23)");

  REQUIRE(tg_evaluate_files(c.p, data("twisted/curve.json").c_str(), data("twisted/table.json").c_str()) == TG_OK);
  CHECK(Json::parse(tg_result(c.p)).at("total") == "3");

  REQUIRE(tg_evaluate_files(c.p, fixture("zero-edge.json").c_str(), data("cp2-corner/table.json").c_str()) == TG_OK);
  const auto z = Json::parse(tg_result(c.p));
  CHECK(z.at("total") == "0");
  CHECK(z.at("curves")[0].at("diagnostic").get<std::string>().find("(0,0)") != std::string::npos);
}

TEST_CASE("evaluate errors map to statuses") {
  Ctx c;
  CHECK(tg_evaluate_files(c.p, data("cp2-corner/curves.json").c_str(), nullptr) == TG_ERR_MISSING_INVARIANT);
  CHECK(tg_evaluate_files(c.p, fixture("loose.json").c_str(), nullptr) == TG_ERR_NOT_RIGID);
  CHECK(tg_evaluate_files(c.p, "/nonexistent.json", nullptr) == TG_ERR_IO);
  CHECK(tg_evaluate_text(c.p, "{not json", nullptr) == TG_ERR_INVALID_INPUT);
  CHECK_FALSE(std::string(tg_last_error(c.p)).empty());
}

TEST_CASE("render") {
  Ctx c;
  const std::string out = "capi_render_test.svg";
  std::remove(out.c_str());
  REQUIRE(tg_render_file(c.p, data("cp2-corner/pictured.json").c_str(), out.c_str()) == TG_OK);
  const std::string svg = slurp(out);
  CHECK(svg == tg_result(c.p));
  REQUIRE(tg_render_text(c.p, slurp(data("cp2-corner/pictured.json")).c_str()) == TG_OK);
  CHECK(svg == tg_result(c.p));
  std::remove(out.c_str());

  const std::string never = "capi_render_never.svg";
  std::remove(never.c_str());
  CHECK(tg_render_file(c.p, fixture("loose.json").c_str(), never.c_str()) == TG_ERR_NOT_RIGID);
  CHECK_FALSE(std::ifstream(never).good());
}

TEST_CASE("check reports an injected energy fault") {
  Ctx c;
  int failed = -1;
  REQUIRE(tg_check(c.p, TROPGLUE_DATA_DIR, fixture("mutated-table.json").c_str(), 0, &failed) == TG_OK);
  CHECK(failed > 0);
  bool homogeneity_failed = false;
  const auto report = Json::parse(tg_result(c.p));
  for (const auto& chk : report.at("checks")) {
    if (chk.at("name").get<std::string>().find("homogeneity") != std::string::npos) {
      homogeneity_failed = chk.at("status").get<std::string>() == "fail";
    }
  }
  CHECK(homogeneity_failed);
}
