#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gaugecount/rational.hpp"

namespace gaugecount {

enum class Method { Evaluation, BruteForce, Both };

std::string to_string(Method m);

/// Outcome of a counting or verification run. Exact values are rendered as
/// "p/q" (or integer) strings in JSON.
struct CountReport {
  std::string graph;
  std::string quantity;
  Method method = Method::Evaluation;
  std::vector<std::pair<std::string, GaussianRational>> values;
  std::vector<std::pair<std::string, GaussianRational>> bounds;
  std::vector<std::pair<std::string, bool>> checks;  // must all hold
  std::vector<std::pair<std::string, bool>> flags;   // informational
  bool agreement = true;

  void add_value(std::string name, GaussianRational v) { values.emplace_back(std::move(name), std::move(v)); }
  void add_bound(std::string name, GaussianRational v) { bounds.emplace_back(std::move(name), std::move(v)); }
  void add_check(std::string name, bool ok) { checks.emplace_back(std::move(name), ok); }
  void add_flag(std::string name, bool on) { flags.emplace_back(std::move(name), on); }

  /// Sets `agreement` to exact equality of all values when method is Both.
  void settle();
  /// Agreement and every check hold.
  bool ok() const;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Exact value for JSON: integers as decimal strings, otherwise "p/q" or "a+bi".
inline nlohmann::ordered_json exact_json(const GaussianRational& z) { return to_string(z); }

}  // namespace gaugecount
