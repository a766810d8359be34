#include "gaugecount/report.hpp"

#include <sstream>

namespace gaugecount {

std::string to_string(Method m) {
  switch (m) {
    case Method::Evaluation:
      return "evaluation";
    case Method::BruteForce:
      return "brute-force";
    case Method::Both:
      return "both";
  }
  return "unknown";
}

void CountReport::settle() {
  if (method != Method::Both) return;
  agreement = true;
  for (const auto& [name, v] : values)
    if (!(v == values.front().second)) agreement = false;
}

bool CountReport::ok() const {
  if (!agreement) return false;
  for (const auto& [name, pass] : checks)
    if (!pass) return false;
  return true;
}

nlohmann::ordered_json CountReport::to_json() const {
  nlohmann::ordered_json j;
  j["graph"] = graph;
  j["quantity"] = quantity;
  j["method"] = to_string(method);
  auto& vals = j["values"] = nlohmann::ordered_json::object();
  for (const auto& [name, v] : values) vals[name] = exact_json(v);
  if (!bounds.empty()) {
    auto& b = j["bounds"] = nlohmann::ordered_json::object();
    for (const auto& [name, v] : bounds) b[name] = exact_json(v);
  }
  if (!checks.empty()) {
    auto& c = j["checks"] = nlohmann::ordered_json::object();
    for (const auto& [name, pass] : checks) c[name] = pass;
  }
  if (!flags.empty()) {
    auto& f = j["flags"] = nlohmann::ordered_json::object();
    for (const auto& [name, on] : flags) f[name] = on;
  }
  j["agreement"] = agreement;
  return j;
}

std::string CountReport::to_text() const {
  std::ostringstream os;
  os << quantity << " [" << graph << "] method=" << to_string(method) << '\n';
  for (const auto& [name, v] : values) os << "  " << name << " = " << to_string(v) << '\n';
  for (const auto& [name, v] : bounds) os << "  bound " << name << " = " << to_string(v) << '\n';
  for (const auto& [name, pass] : checks) os << "  check " << name << ": " << (pass ? "pass" : "FAIL") << '\n';
  for (const auto& [name, on] : flags) os << "  " << name << ": " << (on ? "yes" : "no") << '\n';
  os << "  agreement: " << (agreement ? "yes" : "NO") << '\n';
  return os.str();
}

}  // namespace gaugecount
