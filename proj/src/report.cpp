#include "topochain/report.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace topo {

Json CheckRecord::to_json() const {
  Json j;
  j["check_id"] = check_id;
  j["params"] = params.is_null() ? Json::object() : params;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["abs_err"] = abs_err;
  j["rel_err"] = rel_err;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  return j;
}

namespace {

CheckRecord base_check(std::string id, Json params, double lhs, double rhs, double tol) {
  CheckRecord c;
  c.check_id = std::move(id);
  c.params = std::move(params);
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_err = std::abs(lhs - rhs);
  c.rel_err = c.abs_err / std::max({1.0, std::abs(lhs), std::abs(rhs)});
  c.tolerance = tol;
  return c;
}

}  // namespace

CheckRecord check_abs(std::string id, Json params, double lhs, double rhs, double tol) {
  CheckRecord c = base_check(std::move(id), std::move(params), lhs, rhs, tol);
  c.pass = std::isfinite(c.abs_err) && c.abs_err <= tol;
  return c;
}

CheckRecord check_rel(std::string id, Json params, double lhs, double rhs, double tol) {
  CheckRecord c = base_check(std::move(id), std::move(params), lhs, rhs, tol);
  c.pass = std::isfinite(c.abs_err) && c.rel_err <= tol;
  return c;
}

CheckRecord check_bound(std::string id, Json params, double value, double bound) {
  CheckRecord c;
  c.check_id = std::move(id);
  c.params = std::move(params);
  c.lhs = value;
  c.rhs = bound;
  c.abs_err = std::max(0.0, value - bound);
  c.rel_err = bound != 0.0 ? c.abs_err / std::abs(bound) : c.abs_err;
  c.tolerance = 0.0;
  c.pass = std::isfinite(value) && value <= bound;
  return c;
}

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json SuiteReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["config"] = config_echo.is_null() ? Json::object() : config_echo;
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(c.to_json());
  j["checks"] = arr;
  j["all_pass"] = all_pass();
  return j;
}

void write_json_file(const Json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace topo
