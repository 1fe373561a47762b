#pragma once

#include <string>

namespace rotorlab {

// Comment line carried at the top of every CSV/report file. Keep it one
// line so `tail -n +2` strips it for diffing.
std::string csv_comment_header(const std::string& rule_name, const std::string& order_name,
                               const std::string& config_echo);

// Locale-independent fixed-point formatting so output bytes never depend
// on the host environment.
std::string format_fixed(double value, int decimals);

}  // namespace rotorlab
