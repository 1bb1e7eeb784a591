#include "hermquad/serialization.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <type_traits>
#include <vector>

#include <json.hpp>

namespace hermquad {

namespace {

using nlohmann::json;

// Minimal emitter so every double is written with %.17g, which the
// shortest-round-trip dump of a JSON library does not guarantee.
class JsonWriter {
 public:
  JsonWriter& begin_object() {
    separator();
    out_ << '{';
    pending_separator_ = false;
    return *this;
  }
  JsonWriter& end_object() {
    out_ << '}';
    pending_separator_ = true;
    return *this;
  }

  JsonWriter& key(std::string_view name) {
    separator();
    out_ << '"' << name << "\":";
    pending_separator_ = false;
    return *this;
  }

  JsonWriter& value(double v) { return raw(format_double(v)); }
  JsonWriter& value(std::uint64_t v) { return raw(std::to_string(v)); }
  JsonWriter& value(int v) { return raw(std::to_string(v)); }
  JsonWriter& value(bool v) { return raw(v ? "true" : "false"); }
  JsonWriter& value(std::string_view v) {
    separator();
    out_ << '"' << v << '"';
    pending_separator_ = true;
    return *this;
  }
  JsonWriter& null() { return raw("null"); }

  template <typename T>
  JsonWriter& array(const std::vector<T>& values) {
    separator();
    out_ << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) out_ << ',';
      if constexpr (std::is_same_v<T, double>) {
        out_ << format_double(values[i]);
      } else {
        out_ << std::to_string(values[i]);
      }
    }
    out_ << ']';
    pending_separator_ = true;
    return *this;
  }

  std::string str() const { return out_.str(); }

 private:
  JsonWriter& raw(std::string_view text) {
    separator();
    out_ << text;
    pending_separator_ = true;
    return *this;
  }
  void separator() {
    if (pending_separator_) out_ << ',';
    pending_separator_ = false;
  }

  std::ostringstream out_;
  bool pending_separator_ = false;
};

SequenceSpec parse_sequence(const json& node, const char* which) {
  if (!node.is_object() || !node.contains("kind")) {
    throw std::invalid_argument(std::string("space config: ") + which +
                                " must be an object with a \"kind\"");
  }
  const std::string kind = node.at("kind").get<std::string>();
  if (kind == "explicit") {
    return SequenceSpec::explicit_list(
        node.at("values").get<std::vector<double>>());
  }
  if (kind == "power") {
    return SequenceSpec::power(node.at("alpha").get<double>(),
                               node.at("gamma").get<double>());
  }
  throw std::invalid_argument(std::string("space config: unknown kind for ") +
                              which);
}

json sequence_to_json(const SequenceSpec& spec) {
  json node;
  if (spec.kind == SequenceSpec::Kind::explicit_list) {
    node["kind"] = "explicit";
    node["values"] = spec.values;
  } else {
    node["kind"] = "power";
    node["alpha"] = spec.alpha;
    node["gamma"] = spec.gamma;
  }
  return node;
}

json parse_or_throw(const std::string& text, const char* what) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    throw std::invalid_argument(std::string(what) + ": malformed JSON");
  }
  return parsed;
}

}  // namespace

std::string format_double(double value) {
  if (!std::isfinite(value)) return "null";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

WeightedSpace parse_space_config(const std::string& json_text) {
  const json config = parse_or_throw(json_text, "space config");
  if (!config.is_object()) {
    throw std::invalid_argument("space config: expected a JSON object");
  }
  for (const char* field : {"s", "omega", "a", "b"}) {
    if (!config.contains(field)) {
      throw std::invalid_argument(std::string("space config: missing \"") +
                                  field + "\"");
    }
  }
  return WeightedSpace(config.at("s").get<int>(),
                       config.at("omega").get<double>(),
                       parse_sequence(config.at("a"), "a"),
                       parse_sequence(config.at("b"), "b"));
}

WeightedSpace load_space_config(const std::filesystem::path& path) {
  return parse_space_config(read_text_file(path));
}

std::string to_json(const WeightedSpace& space) {
  json node;
  node["s"] = space.dimension();
  node["omega"] = space.omega();
  node["a"] = sequence_to_json(space.a_spec());
  node["b"] = sequence_to_json(space.b_spec());
  return node.dump();
}

HermiteSeries parse_series(const std::string& json_text) {
  const json parsed = parse_or_throw(json_text, "series file");
  if (!parsed.is_array() || parsed.empty()) {
    throw std::invalid_argument("series file: expected a non-empty array");
  }
  std::optional<HermiteSeries> series;
  for (const auto& entry : parsed) {
    const auto k = entry.at("k").get<std::vector<int>>();
    const double coefficient = entry.at("coef").get<double>();
    if (!series.has_value()) {
      series.emplace(static_cast<int>(k.size()));
    }
    series->set(MultiIndex(k), coefficient);
  }
  return *series;
}

std::string to_json(const HermiteSeries& series) {
  std::string out = "[";
  bool first = true;
  for (const auto& [k, coefficient] : series.terms()) {
    if (!first) out += ',';
    first = false;
    out += "{\"k\":[";
    for (int j = 0; j < k.dimension(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(k[j]);
    }
    out += "],\"coef\":";
    out += format_double(coefficient);
    out += '}';
  }
  out += ']';
  return out;
}

std::string to_json(const QuadratureRule& rule) {
  JsonWriter writer;
  writer.begin_object();
  writer.key("order").value(rule.order);
  writer.key("nodes").array(rule.nodes);
  writer.key("weights").array(rule.weights);
  writer.end_object();
  return writer.str();
}

QuadratureRule parse_rule(const std::string& json_text) {
  const json parsed = parse_or_throw(json_text, "rule");
  QuadratureRule rule;
  rule.order = parsed.at("order").get<int>();
  rule.nodes = parsed.at("nodes").get<std::vector<double>>();
  rule.weights = parsed.at("weights").get<std::vector<double>>();
  if (rule.nodes.size() != rule.weights.size() ||
      rule.order != static_cast<int>(rule.nodes.size())) {
    throw std::invalid_argument("rule: inconsistent sizes");
  }
  return rule;
}

std::string to_json(const ErrorReport& report) {
  JsonWriter writer;
  writer.begin_object();
  writer.key("e_squared").value(report.e_squared);
  writer.key("e").value(report.e());
  writer.key("tail_bound").value(report.tail_bound);
  writer.key("clamped").value(report.clamped);
  writer.key("per_dimension_e_squared");
  if (report.per_dimension_e_squared.has_value()) {
    writer.array(*report.per_dimension_e_squared);
  } else {
    writer.null();
  }
  writer.key("analytic_upper_e_squared");
  if (report.analytic_upper_e_squared.has_value()) {
    writer.value(*report.analytic_upper_e_squared);
  } else {
    writer.null();
  }
  writer.end_object();
  return writer.str();
}

std::string to_json(const SchedulePlan& plan) {
  JsonWriter writer;
  writer.begin_object();
  writer.key("scheme").value(scheme_name(plan.scheme));
  writer.key("epsilon").value(plan.epsilon);
  writer.key("m").array(plan.m);
  writer.key("n_total").value(plan.n_total);
  writer.key("guaranteed_e").value(plan.guaranteed_e);
  writer.key("measured_e").value(plan.measured_e);
  writer.end_object();
  return writer.str();
}

std::string to_json(const LowerBoundResult& result) {
  JsonWriter writer;
  writer.begin_object();
  writer.key("t").array(result.t);
  writer.key("bound").value(result.bound);
  writer.key("log_bound").value(result.log_bound);
  writer.key("valid_for_n_below").value(result.valid_for_n_below);
  writer.end_object();
  return writer.str();
}

std::string to_json(const RegimeSummary& summary) {
  JsonWriter writer;
  writer.begin_object();
  writer.key("B_s").value(summary.B_s);
  writer.key("A_s").value(summary.A_s);
  writer.key("p_star_s").value(summary.p_star_s);
  writer.key("min_growth").value(summary.min_growth);
  writer.key("growth_condition");
  if (summary.growth_condition.has_value()) {
    writer.value(*summary.growth_condition);
  } else {
    writer.null();
  }
  writer.end_object();
  return writer.str();
}

std::string to_json(const EcwtNecessityReport& report) {
  JsonWriter writer;
  writer.begin_object();
  writer.key("bounded");
  switch (report.bounded) {
    case EcwtNecessityReport::Bounded::yes:
      writer.value(std::string_view("yes"));
      break;
    case EcwtNecessityReport::Bounded::no:
      writer.value(std::string_view("no"));
      break;
    case EcwtNecessityReport::Bounded::unknown:
      writer.value(std::string_view("unknown"));
      break;
  }
  const auto optional_double = [&](const char* name,
                                   const std::optional<double>& v) {
    writer.key(name);
    if (v.has_value()) {
      writer.value(*v);
    } else {
      writer.null();
    }
  };
  optional_double("growth_sup", report.growth_sup);
  optional_double("eta", report.eta);
  optional_double("log_eta", report.log_eta);
  optional_double("obstruction_log_epsilon", report.obstruction_log_epsilon);
  writer.key("obstruction_log2_n").value(report.obstruction_log2_n);
  writer.key("allones_log_bound").value(report.allones_log_bound);
  writer.end_object();
  return writer.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace hermquad
