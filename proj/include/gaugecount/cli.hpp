#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gaugecount/rational.hpp"

namespace gaugecount::cli {

/// Exit codes: 0 success, 1 user error, 2 an identity failed to verify.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitMismatch = 2;

/// Angle given either as a rational multiple of pi or as a decimal (radians).
struct Angle {
  std::optional<Rational> pi_multiple;
  double radians = 0.0;

  /// j such that the angle is j*pi/4, if any.
  std::optional<int> quarter_pi_steps() const;
};

/// Accepts "pi", "-pi/4", "3pi/4", "3*pi/4", "1/2pi", "0.3", "-1.25".
Angle parse_angle(std::string_view text);

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaugecount::cli
