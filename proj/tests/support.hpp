#pragma once

#include <functional>
#include <string>

#include "tropglue/glue.hpp"
#include "tropglue/io.hpp"

#ifndef TROPGLUE_DATA_DIR
#error "TROPGLUE_DATA_DIR must be defined"
#endif

namespace testing {

inline std::string data_path(const std::string& rel) { return std::string(TROPGLUE_DATA_DIR) + "/" + rel; }

inline std::vector<tropglue::GluingConfig> load(const std::string& curves, const std::string& table) {
  using namespace tropglue;
  auto list = io::parse_curves(io::read_json_file(data_path(curves)));
  auto t = std::make_shared<const VertexInvariantTable>(io::parse_table(io::read_json_file(data_path(table))));
  for (auto& c : list) c.table = t;
  return list;
}

inline tropglue::GluingConfig named(const std::vector<tropglue::GluingConfig>& list, const std::string& name) {
  for (const auto& c : list) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no curve " + name);
}

inline tropglue::EnergyVec energy(long a, long b, long c) { return {a, b, c}; }

}  // namespace testing
