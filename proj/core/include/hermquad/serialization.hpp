#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "hermquad/gauss_hermite.hpp"
#include "hermquad/hermite_space.hpp"
#include "hermquad/lower_bounds.hpp"
#include "hermquad/rule_builder.hpp"
#include "hermquad/wce.hpp"

namespace hermquad {

/// Decimal rendering of a double with 17 significant digits, enough to
/// re-parse bit-exactly.  Non-finite values render as "null".
std::string format_double(double value);

/// Space configuration, e.g.
///   {"s": 2, "omega": 0.5,
///    "a": {"kind": "power", "alpha": 1.0, "gamma": 2.0},
///    "b": {"kind": "explicit", "values": [1.0, 1.0]}}
WeightedSpace parse_space_config(const std::string& json_text);
WeightedSpace load_space_config(const std::filesystem::path& path);
std::string to_json(const WeightedSpace& space);

/// Series files are arrays of {"k": [...], "coef": ...} entries.
HermiteSeries parse_series(const std::string& json_text);
std::string to_json(const HermiteSeries& series);

std::string to_json(const QuadratureRule& rule);
QuadratureRule parse_rule(const std::string& json_text);

std::string to_json(const ErrorReport& report);
std::string to_json(const SchedulePlan& plan);
std::string to_json(const LowerBoundResult& result);
std::string to_json(const RegimeSummary& summary);
std::string to_json(const EcwtNecessityReport& report);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace hermquad
