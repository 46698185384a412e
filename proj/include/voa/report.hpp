#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "voa/admissibility.hpp"

namespace voa {

/// Outcome of one CLI command. Serialization is deterministic: object keys are
/// sorted and rationals are rendered as "p/q" strings.
struct Report {
  std::string command;
  int l = 0;
  std::optional<int> max_m;
  std::optional<std::string> subset;
  Verdict outcome = Verdict::fail;
  nlohmann::json payload = nlohmann::json::object();
  long long timing_ms = 0;

  nlohmann::json to_json() const;
  std::string render_json() const;
  std::string render_markdown() const;
};

/// Combines sub-verdicts: any fail gives fail, else any inconclusive gives inconclusive.
Verdict combine(Verdict a, Verdict b);

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Weight& w);

}  // namespace voa
