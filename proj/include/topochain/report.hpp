#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace topo {

using Json = nlohmann::ordered_json;

struct CheckRecord {
  std::string check_id;
  Json params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  Json to_json() const;
};

/// pass iff |lhs - rhs| <= tol.
CheckRecord check_abs(std::string id, Json params, double lhs, double rhs, double tol);

/// pass iff |lhs - rhs| <= tol * max(1, |lhs|, |rhs|).
CheckRecord check_rel(std::string id, Json params, double lhs, double rhs, double tol);

/// pass iff value <= bound (records value as lhs, bound as rhs).
CheckRecord check_bound(std::string id, Json params, double value, double bound);

struct SuiteReport {
  std::string suite;
  Json config_echo;
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  Json to_json() const;
  void append(CheckRecord c) { checks.push_back(std::move(c)); }
};

void write_json_file(const Json& j, const std::string& path);

}  // namespace topo
