#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>

namespace fockent::cli {

std::string fraction_or_decimal(double value) {
  for (long long denominator = 1; denominator <= 16; ++denominator) {
    double scaled = value * double(denominator);
    long long numerator = std::llround(scaled);
    if (std::abs(value - double(numerator) / double(denominator)) <= 1e-9) {
      if (numerator == 0) return "0";
      if (denominator == 1) return std::to_string(numerator);
      long long divisor = std::gcd(std::llabs(numerator), denominator);
      long long num = numerator / divisor;
      long long den = denominator / divisor;
      if (den == 1) return std::to_string(num);
      return std::to_string(num) + "/" + std::to_string(den);
    }
  }
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

double round_for_report(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return std::strtod(buffer, nullptr);
}

nlohmann::json json_number(double value) { return round_for_report(value); }

nlohmann::json json_number(std::optional<double> value) {
  if (!value) return nullptr;
  return round_for_report(*value);
}

nlohmann::json make_report(const std::string& command, nlohmann::json input,
                           nlohmann::json results,
                           std::optional<long long> seed) {
  nlohmann::json report;
  report["schema_version"] = "1";
  report["command"] = command;
  report["input"] = std::move(input);
  report["results"] = std::move(results);
  if (seed) report["seed"] = *seed;
  return report;
}

}  // namespace fockent::cli
