#include "voa/report.hpp"

#include <algorithm>
#include <sstream>

namespace voa {

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::pass;
}

nlohmann::json to_json(const Rational& q) { return to_string(q); }

nlohmann::json to_json(const Weight& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : w.coords()) out.push_back(to_string(c));
  return out;
}

nlohmann::json Report::to_json() const {
  nlohmann::json params;
  params["l"] = l;
  params["max_m"] = max_m ? nlohmann::json(*max_m) : nlohmann::json(nullptr);
  params["subset"] = subset ? nlohmann::json(*subset) : nlohmann::json(nullptr);
  return {{"command", command},
          {"params", params},
          {"outcome", to_string(outcome)},
          {"payload", payload},
          {"timing_ms", timing_ms}};
}

std::string Report::render_json() const { return to_json().dump(2) + "\n"; }

namespace {

std::string scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    bool flat = true;
    for (const auto& x : v) flat = flat && !x.is_object() && !x.is_array();
    if (flat) {
      std::string out = "(";
      for (std::size_t t = 0; t < v.size(); ++t) out += (t ? ", " : "") + scalar(v[t]);
      return out + ")";
    }
  }
  return v.dump();
}

bool is_table(const nlohmann::json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v)
    if (!row.is_object()) return false;
  return true;
}

void render_table(std::ostringstream& out, const nlohmann::json& rows) {
  std::vector<std::string> columns;
  for (const auto& [k, x] : rows.front().items()) columns.push_back(k);
  out << "|";
  for (const auto& c : columns) out << " " << c << " |";
  out << "\n|";
  for (std::size_t t = 0; t < columns.size(); ++t) out << "---|";
  out << "\n";
  for (const auto& row : rows) {
    out << "|";
    for (const auto& c : columns) out << " " << (row.contains(c) ? scalar(row[c]) : "") << " |";
    out << "\n";
  }
}

void render_object(std::ostringstream& out, const nlohmann::json& obj, int level) {
  std::vector<std::string> nested;
  for (const auto& [k, v] : obj.items()) {
    if (v.is_object() || is_table(v)) {
      nested.push_back(k);
      continue;
    }
    out << "- **" << k << "**: " << scalar(v) << "\n";
  }
  for (const auto& k : nested) {
    out << "\n" << std::string(static_cast<std::size_t>(std::min(level, 6)), '#') << " " << k << "\n\n";
    if (obj[k].is_object())
      render_object(out, obj[k], level + 1);
    else
      render_table(out, obj[k]);
  }
}

}  // namespace

std::string Report::render_markdown() const {
  std::ostringstream out;
  out << "# voa " << command << "\n\n";
  out << "- **l**: " << l << "\n";
  if (max_m) out << "- **max_m**: " << *max_m << "\n";
  if (subset) out << "- **subset**: " << *subset << "\n";
  out << "- **outcome**: " << to_string(outcome) << "\n";
  out << "- **timing_ms**: " << timing_ms << "\n\n";
  render_object(out, payload, 2);
  return out.str();
}

}  // namespace voa
