#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace fockent::cli {

/// Human-readable number: a small fraction (denominator up to 16) when the
/// value is within 1e-9 of one, otherwise six decimals.
std::string fraction_or_decimal(double value);

/// Rounds to 12 significant digits so reports serialize identically across
/// runs.
double round_for_report(double value);

nlohmann::json json_number(double value);
nlohmann::json json_number(std::optional<double> value);

/// Wraps command results in the stable report envelope.
nlohmann::json make_report(const std::string& command, nlohmann::json input,
                           nlohmann::json results,
                           std::optional<long long> seed);

}  // namespace fockent::cli
