#include "tropglue/tropglue.h"

#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "tropglue/error.hpp"
#include "tropglue/glue.hpp"
#include "tropglue/io.hpp"
#include "tropglue/selfcheck.hpp"
#include "tropglue/svg.hpp"

struct tg_context {
  std::string error;
  std::string result;
  unsigned threads = 1;
};

namespace {

using tropglue::ErrorCode;
using tropglue::io::Json;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

tg_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return TG_ERR_INVALID_INPUT;
    case ErrorCode::OutOfDomain: return TG_ERR_OUT_OF_DOMAIN;
    case ErrorCode::InvalidContact: return TG_ERR_INVALID_CONTACT;
    case ErrorCode::Disconnected: return TG_ERR_DISCONNECTED;
    case ErrorCode::Genericity: return TG_ERR_GENERICITY;
    case ErrorCode::UnsupportedVertex: return TG_ERR_UNSUPPORTED_VERTEX;
    case ErrorCode::MissingInvariant: return TG_ERR_MISSING_INVARIANT;
    case ErrorCode::NotRigid: return TG_ERR_NOT_RIGID;
    case ErrorCode::Unbalanced: return TG_ERR_UNBALANCED;
    case ErrorCode::Internal: return TG_ERR_INTERNAL;
  }
  return TG_ERR_INTERNAL;
}

// Runs body, storing its output as the context result or the failure as the error.
template <class F>
tg_status guarded(tg_context* ctx, F&& body) {
  if (!ctx) return TG_ERR_ARGUMENT;
  ctx->error.clear();
  try {
    ctx->result = body();
    return TG_OK;
  } catch (const tropglue::Error& e) {
    ctx->error = e.what();
    return status_of(e.code());
  } catch (const IoFailure& e) {
    ctx->error = e.what();
    return TG_ERR_IO;
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return TG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return TG_ERR_INTERNAL;
  }
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure(std::string("cannot open ") + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

tg_status argument_error(tg_context* ctx, const char* what) {
  if (ctx) ctx->error = what;
  return TG_ERR_ARGUMENT;
}

std::string evaluate(const char* curves_text, const char* table_text) {
  auto curves = tropglue::io::parse_curves(tropglue::io::parse_text(curves_text, "curves"));
  std::shared_ptr<const tropglue::VertexInvariantTable> table;
  if (table_text) {
    table = std::make_shared<const tropglue::VertexInvariantTable>(
        tropglue::io::parse_table(tropglue::io::parse_text(table_text, "table")));
  }
  Json out;
  out["curves"] = Json::array();
  tropglue::NovikovPoly sum;
  for (auto& c : curves) {
    if (table) c.table = table;
    const auto eval = tropglue::evaluate_curve(c);
    const auto aut = tropglue::aut_order(c.type);
    const auto contribution = tropglue::make_rat(1, aut) * eval.value;
    sum += contribution;
    out["curves"].push_back({{"name", c.name},
                             {"value", tropglue::to_string(eval.value)},
                             {"aut", aut.get_str()},
                             {"contribution", tropglue::to_string(contribution)},
                             {"diagnostic", eval.diagnostic}});
  }
  out["total"] = tropglue::to_string(sum);
  return out.dump(1);
}

}  // namespace

extern "C" {

tg_context* tg_context_create(void) { return new (std::nothrow) tg_context; }

void tg_context_destroy(tg_context* ctx) { delete ctx; }

const char* tg_status_name(tg_status status) {
  switch (status) {
    case TG_OK: return "ok";
    case TG_ERR_ARGUMENT: return "invalid argument";
    case TG_ERR_INVALID_INPUT: return "invalid input";
    case TG_ERR_OUT_OF_DOMAIN: return "out of domain";
    case TG_ERR_INVALID_CONTACT: return "invalid contact";
    case TG_ERR_DISCONNECTED: return "disconnected";
    case TG_ERR_GENERICITY: return "genericity";
    case TG_ERR_UNSUPPORTED_VERTEX: return "unsupported vertex";
    case TG_ERR_MISSING_INVARIANT: return "missing invariant";
    case TG_ERR_NOT_RIGID: return "not rigid";
    case TG_ERR_UNBALANCED: return "unbalanced";
    case TG_ERR_IO: return "i/o error";
    case TG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* tg_last_error(const tg_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

const char* tg_result(const tg_context* ctx) { return ctx ? ctx->result.c_str() : ""; }

tg_status tg_set_threads(tg_context* ctx, unsigned threads) {
  if (!ctx) return TG_ERR_ARGUMENT;
  ctx->threads = threads == 0 ? 1 : threads;
  return TG_OK;
}

tg_status tg_wedge(int64_t ux, int64_t uy, int64_t vx, int64_t vy, int64_t* out) {
  if (!out) return TG_ERR_ARGUMENT;
  try {
    *out = tropglue::wedge(tropglue::IntVec2{ux, uy}, tropglue::IntVec2{vx, vy});
    return TG_OK;
  } catch (const tropglue::Error&) {
    return TG_ERR_ARGUMENT;
  }
}

tg_status tg_kontsevich(tg_context* ctx, int degree) {
  if (degree < 1) return argument_error(ctx, "degree must be at least 1");
  return guarded(ctx, [&] {
    return Json{{"degree", degree}, {"value", tropglue::kontsevich(degree).get_str()}}.dump(1);
  });
}

tg_status tg_count(tg_context* ctx, int degree, uint64_t seed, int max_attempts) {
  if (degree < 1) return argument_error(ctx, "degree must be at least 1");
  if (max_attempts < 1) return argument_error(ctx, "max_attempts must be at least 1");
  return guarded(ctx, [&] {
    const auto r = tropglue::count_nd_retry(degree, seed, max_attempts, {ctx->threads});
    Json out{{"degree", degree}, {"seed", r.config.seed}, {"rejected_seeds", r.rejected_seeds}};
    out["points"] = Json::array();
    for (const auto& [label, p] : r.config.points) {
      out["points"].push_back({{"label", label}, {"x", tropglue::to_string(p.x)}, {"y", tropglue::to_string(p.y)}});
    }
    out["count"] = r.count.get_str();
    out["curves"] = Json::array();
    for (const auto& c : r.curves) {
      out["curves"].push_back({{"canonical", c.canonical},
                               {"multiplicity", c.multiplicity.get_str()},
                               {"aut", c.aut.get_str()},
                               {"contribution", tropglue::to_string(tropglue::plane_contribution(c))}});
    }
    return out.dump(1);
  });
}

tg_status tg_evaluate_text(tg_context* ctx, const char* curves_json, const char* table_json) {
  if (!curves_json) return argument_error(ctx, "curves document is null");
  return guarded(ctx, [&] { return evaluate(curves_json, table_json); });
}

tg_status tg_evaluate_files(tg_context* ctx, const char* curves_path, const char* table_path) {
  if (!curves_path) return argument_error(ctx, "curves path is null");
  return guarded(ctx, [&] {
    const std::string curves = read_file(curves_path);
    if (!table_path) return evaluate(curves.c_str(), nullptr);
    const std::string table = read_file(table_path);
    return evaluate(curves.c_str(), table.c_str());
  });
}

tg_status tg_render_text(tg_context* ctx, const char* curve_json) {
  if (!curve_json) return argument_error(ctx, "curve document is null");
  return guarded(ctx, [&] {
    return tropglue::render_svg(tropglue::io::parse_curve(tropglue::io::parse_text(curve_json, "curve")));
  });
}

tg_status tg_render_file(tg_context* ctx, const char* curve_path, const char* out_path) {
  if (!curve_path || !out_path) return argument_error(ctx, "path is null");
  return guarded(ctx, [&] {
    const std::string svg =
        tropglue::render_svg(tropglue::io::parse_curve(tropglue::io::parse_text(read_file(curve_path), curve_path)));
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure(std::string("cannot write ") + out_path);
    out << svg;
    out.close();
    if (!out) throw IoFailure(std::string("failed writing ") + out_path);
    return svg;
  });
}

tg_status tg_check(tg_context* ctx, const char* data_dir, const char* table_path, int stretch, int* failed) {
  if (!data_dir) return argument_error(ctx, "data directory is null");
  int bad = 0;
  const tg_status status = guarded(ctx, [&] {
    tropglue::CheckOptions opts;
    opts.data_dir = data_dir;
    if (table_path) opts.table_path = table_path;
    opts.threads = ctx->threads;
    opts.stretch = stretch != 0;
    Json out;
    out["checks"] = Json::array();
    for (const auto& r : tropglue::run_checks(opts)) {
      const char* s = r.status == tropglue::CheckStatus::Pass ? "pass"
                      : r.status == tropglue::CheckStatus::Fail ? "fail"
                                                                : "skip";
      if (r.status == tropglue::CheckStatus::Fail) ++bad;
      out["checks"].push_back({{"name", r.name}, {"status", s}, {"detail", r.detail}});
    }
    out["failed"] = bad;
    return out.dump(1);
  });
  if (failed) *failed = bad;
  return status;
}

}  // extern "C"
