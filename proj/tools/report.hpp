#pragma once

#include <chrono>
#include <ctime>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "bandforge/check.hpp"

namespace bandforge::cli {

using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // bad arguments or a mathematical precondition
  kParse = 2,
  kSolve = 3,
  kCertify = 4,
  kAssertion = 5,
};

/// Machine-readable result of one command. `generated_at` is the only
/// nondeterministic field.
struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<Check> assertions;

  void check(std::string name, bool pass, std::string detail = {}) {
    assertions.push_back({std::move(name), pass, std::move(detail)});
  }

  bool ok() const { return all_pass(assertions); }

  json to_json() const {
    json a = json::array();
    for (const auto& c : assertions) a.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    char stamp[32];
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return {{"command", command}, {"inputs", inputs},   {"results", results},
            {"assertions", a},    {"all_pass", ok()}, {"generated_at", stamp}};
  }

  void print(std::ostream& os, bool as_json) const {
    if (as_json) {
      os << to_json().dump(2) << "\n";
      return;
    }
    os << command << "\n";
    for (const auto& [key, value] : results.items()) os << "  " << key << ": " << value.dump() << "\n";
    for (const auto& c : assertions)
      os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
         << "\n";
  }
};

}  // namespace bandforge::cli
