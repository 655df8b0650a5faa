// Command-line front end over the C interface.
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropglue/tropglue.h"

#ifndef TROPGLUE_DATA_DIR
#define TROPGLUE_DATA_DIR "data"
#endif

namespace {

using Json = nlohmann::json;

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kSeedAttempts = 8;

using Context = std::unique_ptr<tg_context, decltype(&tg_context_destroy)>;

int fail(const tg_context* ctx, tg_status status) {
  std::cerr << "error (" << tg_status_name(status) << "): " << tg_last_error(ctx) << '\n';
  // Genericity exhaustion and internal faults are not the caller's input.
  return status == TG_ERR_GENERICITY || status == TG_ERR_INTERNAL ? kExitMismatch : kExitInput;
}

int cmd_count(tg_context* ctx, int degree, std::uint64_t seed, bool oracle, bool json) {
  const tg_status st = tg_count(ctx, degree, seed, kSeedAttempts);
  if (st != TG_OK) return fail(ctx, st);
  const Json report = Json::parse(tg_result(ctx));
  std::string expected;
  if (oracle) {
    const tg_status ks = tg_kontsevich(ctx, degree);
    if (ks != TG_OK) return fail(ctx, ks);
    expected = Json::parse(tg_result(ctx)).at("value").get<std::string>();
  }
  const std::string count = report.at("count").get<std::string>();
  if (json) {
    Json out = report;
    if (oracle) out["oracle"] = expected;
    std::cout << out.dump(1) << '\n';
  } else {
    if (!report.at("rejected_seeds").get<std::string>().empty()) {
      std::cout << "rejected: " << report.at("rejected_seeds").get<std::string>() << '\n';
    }
    std::cout << "degree " << degree << ", seed " << report.at("seed").get<std::uint64_t>() << ", "
              << report.at("points").size() << " points\n";
    for (const auto& p : report.at("points")) {
      std::cout << "  p" << p.at("label").get<int>() << " = (" << p.at("x").get<std::string>() << ", "
                << p.at("y").get<std::string>() << ")\n";
    }
    std::cout << report.at("curves").size() << " curves (multiplicity, aut, canonical form):\n";
    for (const auto& c : report.at("curves")) {
      std::cout << "  " << c.at("multiplicity").get<std::string>() << "  " << c.at("aut").get<std::string>() << "  "
                << c.at("canonical").get<std::string>() << '\n';
    }
    std::cout << "count " << count << '\n';
    if (oracle) std::cout << "oracle " << expected << (expected == count ? " (match)" : " (MISMATCH)") << '\n';
  }
  return oracle && expected != count ? kExitMismatch : 0;
}

int cmd_evaluate(tg_context* ctx, const std::string& curves, const std::string& table, bool json) {
  const tg_status st = tg_evaluate_files(ctx, curves.c_str(), table.empty() ? nullptr : table.c_str());
  if (st != TG_OK) return fail(ctx, st);
  const Json report = Json::parse(tg_result(ctx));
  if (json) {
    std::cout << report.dump(1) << '\n';
    return 0;
  }
  for (const auto& c : report.at("curves")) {
    std::cout << c.at("name").get<std::string>() << ": " << c.at("value").get<std::string>();
    if (c.at("aut").get<std::string>() != "1") {
      std::cout << " / |Aut| " << c.at("aut").get<std::string>() << " = " << c.at("contribution").get<std::string>();
    }
    if (!c.at("diagnostic").get<std::string>().empty()) std::cout << "  [" << c.at("diagnostic").get<std::string>() << ']';
    std::cout << '\n';
  }
  std::cout << "total " << report.at("total").get<std::string>() << '\n';
  return 0;
}

int cmd_check(tg_context* ctx, const std::string& data, const std::string& table, bool stretch, bool json) {
  int failed = 0;
  const tg_status st = tg_check(ctx, data.c_str(), table.empty() ? nullptr : table.c_str(), stretch ? 1 : 0, &failed);
  if (st != TG_OK) return fail(ctx, st);
  const Json report = Json::parse(tg_result(ctx));
  if (json) {
    std::cout << report.dump(1) << '\n';
  } else {
    for (const auto& c : report.at("checks")) {
      std::string tag = c.at("status").get<std::string>();
      for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      std::cout << tag << "  " << c.at("name").get<std::string>();
      if (!c.at("detail").get<std::string>().empty()) std::cout << "  (" << c.at("detail").get<std::string>() << ')';
      std::cout << '\n';
    }
    std::cout << failed << " failed\n";
  }
  return failed == 0 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and gluing of rational tropical curves"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  bool json = false;
  app.add_flag("--json", json, "Print the machine-readable report");

  int degree = 0;
  std::uint64_t seed = 1;
  bool oracle = false;
  auto* count = app.add_subcommand("count", "Count rational plane curves through generic points");
  count->add_option("--degree,-d", degree, "Curve degree")->required()->check(CLI::Range(1, 64));
  count->add_option("--seed,-s", seed, "Seed of the point configuration");
  count->add_flag("--oracle", oracle, "Compare with the recursion oracle");

  std::string curves, table;
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate the gluing formula on curve files");
  evaluate->add_option("--curves", curves, "Curve document(s)")->required()->check(CLI::ExistingFile);
  evaluate->add_option("--table", table, "Vertex invariant table")->check(CLI::ExistingFile);

  std::string curve, out;
  auto* render = app.add_subcommand("render", "Draw a realized curve as SVG");
  render->add_option("--curve", curve, "Curve document")->required()->check(CLI::ExistingFile);
  render->add_option("--out,-o", out, "Output SVG path")->required();

  std::string data = TROPGLUE_DATA_DIR;
  std::string check_table;
  bool stretch = false;
  auto* check = app.add_subcommand("check", "Run the property suite and exact-count checks");
  check->add_option("--data", data, "Directory with cp2-corner/ and twisted/")->check(CLI::ExistingDirectory);
  check->add_option("--table", check_table, "Replacement corner table")->check(CLI::ExistingFile);
  check->add_flag("--stretch", stretch, "Include the degree 4 count");

  int kdegree = 0;
  auto* kont = app.add_subcommand("kontsevich", "Print N(d) from the recursion");
  kont->add_option("--degree,-d", kdegree, "Curve degree")->required()->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  Context ctx(tg_context_create(), &tg_context_destroy);
  if (!ctx) {
    std::cerr << "error: cannot allocate context\n";
    return kExitMismatch;
  }
  tg_set_threads(ctx.get(), threads);

  if (*count) return cmd_count(ctx.get(), degree, seed, oracle, json);
  if (*evaluate) return cmd_evaluate(ctx.get(), curves, table, json);
  if (*check) return cmd_check(ctx.get(), data, check_table, stretch, json);
  if (*render) {
    const tg_status st = tg_render_file(ctx.get(), curve.c_str(), out.c_str());
    if (st != TG_OK) return fail(ctx.get(), st);
    std::cout << "wrote " << out << '\n';
    return 0;
  }
  const tg_status st = tg_kontsevich(ctx.get(), kdegree);
  if (st != TG_OK) return fail(ctx.get(), st);
  const Json report = Json::parse(tg_result(ctx.get()));
  std::cout << (json ? report.dump(1) : report.at("value").get<std::string>()) << '\n';
  return 0;
}
