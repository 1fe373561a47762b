#include "rotorlab/csv.hpp"

#include <cstdio>

#include "rotorlab/version.hpp"

namespace rotorlab {

std::string csv_comment_header(const std::string& rule_name, const std::string& order_name,
                               const std::string& config_echo) {
    std::string line = "# ";
    line += kEngineName;
    line += ' ';
    line += kEngineVersion;
    line += "; rule=" + rule_name;
    line += "; order=" + order_name;
    line += "; counting=origin visit at t=0 included";
    if (!config_echo.empty()) line += "; config=" + config_echo;
    line += '\n';
    return line;
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

}  // namespace rotorlab
