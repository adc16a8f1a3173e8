#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace goldbase {

struct CheckRecord {
  std::string name;
  bool pass = true;
  bool exploratory = false;  // reported, but does not affect the verdict
  nlohmann::json data = nlohmann::json::object();
};

struct ReportEnvelope {
  std::string suite;
  std::int64_t nmax = 0;
  std::vector<CheckRecord> details;
  double elapsed_seconds = 0.0;

  bool verdict() const {
    return std::all_of(details.begin(), details.end(), [](const CheckRecord& c) { return c.exploratory || c.pass; });
  }

  void add(CheckRecord record) { details.push_back(std::move(record)); }
};

inline nlohmann::json to_json(const CheckRecord& c) {
  return {{"name", c.name}, {"pass", c.pass}, {"exploratory", c.exploratory}, {"data", c.data}};
}

inline nlohmann::json to_json(const ReportEnvelope& r) {
  nlohmann::json details = nlohmann::json::array();
  for (const auto& c : r.details) details.push_back(to_json(c));
  return {{"suite", r.suite},
          {"range", {1, r.nmax}},
          {"verdict", r.verdict() ? "pass" : "fail"},
          {"elapsed_seconds", r.elapsed_seconds},
          {"details", details}};
}

}  // namespace goldbase
