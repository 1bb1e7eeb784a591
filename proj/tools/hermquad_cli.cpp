// hermquad command line front end: builds Gauss-Hermite rules, computes
// worst-case errors, emits certified order schedules and runs convergence
// sweeps as machine-readable JSON/CSV.
//
// Exit codes: 0 success, 2 validation error, 3 budget/convergence failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hermquad/errors.hpp"
#include "hermquad/gauss_hermite.hpp"
#include "hermquad/lower_bounds.hpp"
#include "hermquad/parallel.hpp"
#include "hermquad/rule_builder.hpp"
#include "hermquad/serialization.hpp"
#include "hermquad/testfns.hpp"
#include "hermquad/wce.hpp"

namespace {

using namespace hermquad;

constexpr int kExitValidation = 2;
constexpr int kExitBudgetOrConvergence = 3;

void write_output(const std::optional<std::string>& out_path,
                  const std::string& text) {
  if (out_path.has_value()) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) {
      throw std::invalid_argument("cannot open output file: " + *out_path);
    }
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
  } else {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  }
}

// Grid syntax: either a comma list ("0.1,0.01") or an inclusive integer
// range "a:b".
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const int first = std::stoi(text.substr(0, colon));
    const int last = std::stoi(text.substr(colon + 1));
    for (int v = first; v <= last; ++v) grid.push_back(v);
  } else {
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
      if (!token.empty()) grid.push_back(std::stod(token));
    }
  }
  if (grid.empty()) throw std::invalid_argument("grid is empty");
  return grid;
}

void require_strictly_monotone(const std::vector<double>& grid) {
  const bool increasing = grid.size() < 2 || grid[1] > grid[0];
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const bool step_up = grid[i] > grid[i - 1];
    if (step_up != increasing || grid[i] == grid[i - 1]) {
      throw std::invalid_argument("grid must be strictly monotone");
    }
  }
}

SchedulePlan build_plan(const WeightedSpace& space, Scheme scheme,
                        double epsilon, const std::optional<double>& A,
                        const std::optional<double>& beta,
                        const std::optional<double>& eta) {
  switch (scheme) {
    case Scheme::uexp:
      return build_uexp(space, epsilon);
    case Scheme::ecspt:
      return build_ecspt(space, epsilon);
    case Scheme::ecwt: {
      std::optional<GrowthCondition> growth;
      if (beta.has_value() && eta.has_value()) {
        growth = GrowthCondition{*beta, *eta};
      }
      return build_ecwt(space, epsilon, A, growth);
    }
  }
  throw std::invalid_argument("unknown scheme");
}

int cmd_nodes(int order, const std::optional<std::string>& out) {
  write_output(out, to_json(gh_rule(order)));
  return 0;
}

int cmd_wce(const std::string& space_file, const std::vector<int>& m,
            double tol, const std::optional<std::string>& out) {
  const WeightedSpace space = load_space_config(space_file);
  write_output(out, to_json(product_gh_wce(space, m, tol)));
  return 0;
}

int cmd_plan(const std::string& space_file, const std::string& scheme_text,
             double epsilon, const std::optional<double>& A,
             const std::optional<double>& beta,
             const std::optional<double>& eta,
             const std::optional<std::string>& out) {
  const WeightedSpace space = load_space_config(space_file);
  const SchedulePlan plan =
      build_plan(space, parse_scheme(scheme_text), epsilon, A, beta, eta);
  write_output(out, to_json(plan));
  return 0;
}

int cmd_lower_bound(const std::string& space_file, std::uint64_t n, int t_cap,
                    const std::vector<int>& explicit_t,
                    const std::optional<std::string>& out) {
  const WeightedSpace space = load_space_config(space_file);
  const LowerBoundResult result =
      explicit_t.empty() ? best_lower_bound(space, n, t_cap)
                         : lower_bound(space, explicit_t);
  write_output(out, to_json(result));
  return 0;
}

int cmd_regime(const std::string& space_file, const std::optional<double>& beta,
               const std::optional<double>& eta,
               const std::optional<std::string>& out) {
  const WeightedSpace space = load_space_config(space_file);
  const RegimeSummary summary =
      (beta.has_value() && eta.has_value())
          ? regime_summary(space, *beta, *eta)
          : regime_summary(space);
  std::string text = "{\"summary\":" + to_json(summary) + ",\"necessity\":" +
                     to_json(ecwt_necessity_diagnostic(space)) + "}";
  write_output(out, text);
  return 0;
}

int cmd_integrate(const std::string& space_file, const std::string& fn_name,
                  std::vector<int> m, const std::string& scheme_text,
                  double epsilon, double tol,
                  const std::optional<std::string>& out) {
  const WeightedSpace space = load_space_config(space_file);
  if (m.empty()) {
    if (scheme_text.empty()) {
      throw std::invalid_argument(
          "integrate needs either --m or --scheme with --eps");
    }
    const SchedulePlan plan = build_plan(space, parse_scheme(scheme_text),
                                         epsilon, std::nullopt, std::nullopt,
                                         std::nullopt);
    m = plan.m;
  }
  if (static_cast<int>(m.size()) != space.dimension()) {
    throw std::invalid_argument("order vector must match the space dimension");
  }

  const TestFunction fn = parse_test_function(fn_name, space.dimension());
  const ProductRule rule = product_rule(m);
  const double value = apply_product_rule(
      rule, [&](std::span<const double> x) { return fn.eval(x); });
  const double exact = fn.exact_integral();
  const ErrorReport error = product_gh_wce(space, m, tol);

  // Norm of the test function in this space, when the closed form applies.
  std::optional<double> norm;
  switch (fn.kind()) {
    case TestFunction::Kind::appendix_b: {
      bool b_flat = true;
      for (int j = 1; j <= space.dimension(); ++j) {
        if (space.b(j) != 1.0) b_flat = false;
      }
      if (b_flat) norm = std::sqrt(appendix_b_norm_squared(space));
      break;
    }
    case TestFunction::Kind::single_hermite:
    case TestFunction::Kind::polynomial: {
      const HermiteSeries series = fn.truncated_series(200);
      if (series.size() > 0) norm = series_norm(space, series);
      break;
    }
  }

  std::string text = "{\"function\":\"" + fn.name() + "\",\"m\":[";
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j > 0) text += ',';
    text += std::to_string(m[j]);
  }
  text += "],\"n_total\":" + std::to_string(rule.total_points);
  text += ",\"value\":" + format_double(value);
  text += ",\"exact\":" + format_double(exact);
  text += ",\"abs_error\":" + format_double(std::abs(value - exact));
  text += ",\"wce\":" + format_double(error.e());
  text += ",\"norm\":" + (norm ? format_double(*norm) : "null");
  text += ",\"certified_bound\":" +
          (norm ? format_double(function_error_bound(error.e(), *norm))
                : "null");
  text += "}";
  write_output(out, text);
  return 0;
}

int cmd_sweep(const std::string& space_file, const std::string& scheme_text,
              const std::string& eps_grid_text, const std::string& n_grid_text,
              double tol, int t_cap, const std::optional<std::string>& out) {
  const WeightedSpace space = load_space_config(space_file);
  const int s = space.dimension();
  if (eps_grid_text.empty() == n_grid_text.empty()) {
    throw std::invalid_argument("sweep needs exactly one of --eps or --n");
  }

  struct Row {
    double epsilon_or_n = 0.0;
    std::vector<int> m;
    std::uint64_t n_total = 0;
    double e_measured = 0.0;
    double e_bound = 0.0;
    double lower = 0.0;
  };
  std::vector<Row> rows;

  if (!eps_grid_text.empty()) {
    const std::vector<double> grid = parse_grid(eps_grid_text);
    require_strictly_monotone(grid);
    const Scheme scheme = parse_scheme(scheme_text);
    for (double epsilon : grid) {
      const SchedulePlan plan = build_plan(space, scheme, epsilon,
                                           std::nullopt, std::nullopt,
                                           std::nullopt);
      Row row;
      row.epsilon_or_n = epsilon;
      row.m = plan.m;
      row.n_total = plan.n_total;
      row.e_measured = plan.measured_e;
      row.e_bound = plan.guaranteed_e;
      rows.push_back(std::move(row));
    }
  } else {
    const std::vector<double> grid = parse_grid(n_grid_text);
    require_strictly_monotone(grid);
    for (double value : grid) {
      const int order = static_cast<int>(value);
      if (order < 1 || static_cast<double>(order) != value) {
        throw std::invalid_argument("--n grid must hold positive integers");
      }
      Row row;
      row.epsilon_or_n = value;
      row.m.assign(static_cast<std::size_t>(s), order);
      const ErrorReport report = product_gh_wce(space, row.m, tol);
      std::uint64_t total = 1;
      for (int mj : row.m) total *= static_cast<std::uint64_t>(mj);
      row.n_total = total;
      row.e_measured = report.e();
      row.e_bound = std::sqrt(
          std::max(0.0, report.analytic_upper_e_squared.value_or(0.0)));
      rows.push_back(std::move(row));
    }
  }

  for (Row& row : rows) {
    // Cap large enough to admit t vectors past this row's point count.
    const int needed = static_cast<int>(std::ceil(std::pow(
                           static_cast<double>(row.n_total), 1.0 / s))) +
                       1;
    row.lower = best_lower_bound(space, row.n_total,
                                 std::max(t_cap, needed)).bound;
  }

  // One decay fit over the sweep, repeated on every row, when the points
  // form strictly decreasing errors.
  std::optional<double> p_hat;
  {
    std::vector<std::pair<double, double>> points;
    for (const Row& row : rows) {
      points.emplace_back(static_cast<double>(row.n_total), row.e_measured);
    }
    try {
      p_hat = rate_estimate(points).p_hat;
    } catch (const std::invalid_argument&) {
      p_hat.reset();
    }
  }

  std::string csv = "s,epsilon_or_n";
  for (int j = 1; j <= s; ++j) csv += ",m" + std::to_string(j);
  csv += ",n_total,e_measured,e_bound,lower_bound,p_hat\n";
  for (const Row& row : rows) {
    csv += std::to_string(s) + "," + format_double(row.epsilon_or_n);
    for (int mj : row.m) csv += "," + std::to_string(mj);
    csv += "," + std::to_string(row.n_total);
    csv += "," + format_double(row.e_measured);
    csv += "," + format_double(row.e_bound);
    csv += "," + format_double(row.lower);
    csv += ",";
    if (p_hat.has_value()) csv += format_double(*p_hat);
    csv += "\n";
  }
  write_output(out, csv);
  return 0;
}

int apply_thread_cap() {
  const char* env = std::getenv("HERMITE_QUAD_THREADS");
  if (env == nullptr) return 0;
  try {
    const int cap = std::stoi(env);
    if (cap < 1) throw std::invalid_argument("non-positive");
    set_max_threads(cap);
  } catch (const std::exception&) {
    std::cerr << "error: HERMITE_QUAD_THREADS must be a positive integer\n";
    return kExitValidation;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const int code = apply_thread_cap(); code != 0) return code;

  CLI::App app{"Gauss-Hermite product cubature with certified worst-case "
               "errors in weighted Hermite spaces"};
  app.require_subcommand(1);

  std::string space_file;
  std::optional<std::string> out_path;
  std::optional<std::string> format;
  double tol = 1e-10;
  double epsilon = 0.1;
  std::string scheme_text;
  std::vector<int> m_vector;
  std::optional<double> constant_A;
  std::optional<double> beta;
  std::optional<double> eta;

  auto* nodes = app.add_subcommand("nodes", "print a Gauss-Hermite rule");
  int order = 0;
  nodes->add_option("n", order, "rule order")->required();
  nodes->add_option("--out", out_path, "output path (default stdout)");
  nodes->add_option("--format", format, "json (the default here)");

  auto* wce = app.add_subcommand("wce", "worst-case error of a product rule");
  wce->add_option("--space", space_file, "space config file")->required();
  wce->add_option("--m", m_vector, "per-dimension orders")
      ->required()
      ->delimiter(',');
  wce->add_option("--tol", tol, "certified truncation tolerance");
  wce->add_option("--out", out_path, "output path (default stdout)");
  wce->add_option("--format", format, "json (the default here)");

  auto* plan = app.add_subcommand("plan", "certified order schedule");
  plan->add_option("--space", space_file, "space config file")->required();
  plan->add_option("--scheme", scheme_text, "uexp|ecspt|ecwt")->required();
  plan->add_option("--eps", epsilon, "target worst-case error")->required();
  plan->add_option("--A", constant_A, "growth-sum constant for ecwt");
  plan->add_option("--beta", beta, "growth condition coefficient (ecwt)");
  plan->add_option("--eta", eta, "growth condition exponent (ecwt)");
  plan->add_option("--out", out_path, "output path (default stdout)");
  plan->add_option("--format", format, "json (the default here)");

  auto* sweep = app.add_subcommand("sweep", "convergence/tractability sweep");
  std::string eps_grid;
  std::string n_grid;
  int t_cap = 10;
  sweep->add_option("--space", space_file, "space config file")->required();
  sweep->add_option("--scheme", scheme_text, "scheme for --eps sweeps");
  sweep->add_option("--eps", eps_grid, "epsilon grid, e.g. 0.1,0.01");
  sweep->add_option("--n", n_grid, "order grid, e.g. 1:30 (diagonal m)");
  sweep->add_option("--tol", tol, "tolerance for measured errors");
  sweep->add_option("--t-cap", t_cap, "cap for the lower-bound search");
  sweep->add_option("--out", out_path, "output path (default stdout)");
  sweep->add_option("--format", format, "csv (the default here)");

  auto* integrate = app.add_subcommand("integrate", "integrate a test function");
  std::string fn_name;
  integrate->add_option("--space", space_file, "space config file")->required();
  integrate->add_option("--fn", fn_name,
                        "appendixB | hermite:k1,k2,... | monomial:d")
      ->required();
  integrate->add_option("--m", m_vector, "per-dimension orders")
      ->delimiter(',');
  integrate->add_option("--scheme", scheme_text, "plan scheme when --m absent");
  integrate->add_option("--eps", epsilon, "plan target when --m absent");
  integrate->add_option("--tol", tol, "tolerance for the certified error");
  integrate->add_option("--out", out_path, "output path (default stdout)");
  integrate->add_option("--format", format, "json (the default here)");

  auto* lower = app.add_subcommand("lower-bound", "lower bound on e(n, s)");
  std::uint64_t n_points = 1;
  std::vector<int> explicit_t;
  lower->add_option("--space", space_file, "space config file")->required();
  lower->add_option("--n", n_points, "point count the bound must cover");
  lower->add_option("--t-cap", t_cap, "per-dimension search cap");
  lower->add_option("--t", explicit_t, "explicit t vector")->delimiter(',');
  lower->add_option("--out", out_path, "output path (default stdout)");
  lower->add_option("--format", format, "json (the default here)");

  auto* regime = app.add_subcommand("regime", "regime summary and diagnostics");
  regime->add_option("--space", space_file, "space config file")->required();
  regime->add_option("--beta", beta, "growth condition coefficient");
  regime->add_option("--eta", eta, "growth condition exponent");
  regime->add_option("--out", out_path, "output path (default stdout)");
  regime->add_option("--format", format, "json (the default here)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    // Sweeps are tabular and emit CSV; everything else emits JSON.
    const std::string expected_format = sweep->parsed() ? "csv" : "json";
    if (format.has_value() && *format != expected_format) {
      throw std::invalid_argument("unsupported --format for this command: " +
                                  *format);
    }
    if (nodes->parsed()) return cmd_nodes(order, out_path);
    if (wce->parsed()) return cmd_wce(space_file, m_vector, tol, out_path);
    if (plan->parsed()) {
      return cmd_plan(space_file, scheme_text, epsilon, constant_A, beta, eta,
                      out_path);
    }
    if (sweep->parsed()) {
      return cmd_sweep(space_file, scheme_text, eps_grid, n_grid, tol, t_cap,
                       out_path);
    }
    if (integrate->parsed()) {
      return cmd_integrate(space_file, fn_name, m_vector, scheme_text, epsilon,
                           tol, out_path);
    }
    if (lower->parsed()) {
      return cmd_lower_bound(space_file, n_points, t_cap, explicit_t,
                             out_path);
    }
    if (regime->parsed()) return cmd_regime(space_file, beta, eta, out_path);
  } catch (const budget_exhausted_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitBudgetOrConvergence;
  } catch (const convergence_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitBudgetOrConvergence;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitValidation;
  } catch (const std::out_of_range& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitValidation;
  } catch (const std::overflow_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
