#include "rcg/sweep.hpp"

#include <algorithm>
#include <cmath>

namespace rcg {

namespace {

bool parameter_allowed(SweepTarget target, SweepParameter parameter) {
  switch (target) {
    case SweepTarget::benchmark:
      return parameter == SweepParameter::partisan_share ||
             parameter == SweepParameter::attack_cost ||
             parameter == SweepParameter::signal_precision;
    case SweepTarget::equilibrium:
      return parameter == SweepParameter::attack_cost ||
             parameter == SweepParameter::signal_precision ||
             parameter == SweepParameter::benefit ||
             parameter == SweepParameter::counter_cost ||
             parameter == SweepParameter::benefit_ratio;
    case SweepTarget::collapse_curve:
      return parameter == SweepParameter::strength;
  }
  return false;
}

// Applies one grid value to a parameter bundle.
ModelParams apply_parameter(const ModelParams& base, SweepParameter parameter,
                            double value) {
  ModelParams params = base;
  switch (parameter) {
    case SweepParameter::attack_cost:
      params.attack_cost = value;
      break;
    case SweepParameter::signal_precision:
      params.signal_precision = value;
      break;
    case SweepParameter::benefit:
      params.benefit = value;
      break;
    case SweepParameter::counter_cost:
      params.counter_cost = value;
      break;
    case SweepParameter::benefit_ratio:
      params.benefit = value;
      params.counter_cost = 1.0;
      break;
    default:
      break;  // partisan_share and strength live outside ModelParams
  }
  return params;
}

// Direction labels over the rows that produced values; the tolerance scales
// with the column so constant-by-construction columns read "constant".
std::string classify(const std::vector<double>& values) {
  if (values.size() < 2) return "n/a";
  double scale = 0.0;
  for (const double v : values) scale = std::max(scale, std::abs(v));
  const double tol = 1e-10 * std::max(1.0, scale);
  bool up = false;
  bool down = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double d = values[i] - values[i - 1];
    if (d > tol) up = true;
    if (d < -tol) down = true;
  }
  if (up && down) return "mixed";
  if (up) return "increasing";
  if (down) return "decreasing";
  return "constant";
}

void finish_labels(SweepResult& result) {
  const std::size_t cols = result.columns.size();
  result.monotonicity.assign(cols, "");
  for (std::size_t col = 0; col + 1 < cols; ++col) {  // skip the note column
    std::vector<double> values;
    for (const auto& row : result.rows) {
      if (const double* v = std::get_if<double>(&row[col])) values.push_back(*v);
    }
    result.monotonicity[col] = classify(values);
  }
}

}  // namespace

// ----- names -----

SweepParameter parse_sweep_parameter(const std::string& name) {
  if (name == "alpha") return SweepParameter::partisan_share;
  if (name == "c") return SweepParameter::attack_cost;
  if (name == "beta") return SweepParameter::signal_precision;
  if (name == "B") return SweepParameter::benefit;
  if (name == "psi") return SweepParameter::counter_cost;
  if (name == "B_over_psi" || name == "B-over-psi") return SweepParameter::benefit_ratio;
  if (name == "theta") return SweepParameter::strength;
  throw DomainError("unknown sweep parameter: " + name);
}

SweepTarget parse_sweep_target(const std::string& name) {
  if (name == "benchmark") return SweepTarget::benchmark;
  if (name == "equilibrium") return SweepTarget::equilibrium;
  if (name == "collapse-curve" || name == "collapse_curve") {
    return SweepTarget::collapse_curve;
  }
  throw DomainError("unknown sweep target: " + name);
}

const char* sweep_parameter_name(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::partisan_share: return "alpha";
    case SweepParameter::attack_cost: return "c";
    case SweepParameter::signal_precision: return "beta";
    case SweepParameter::benefit: return "B";
    case SweepParameter::counter_cost: return "psi";
    case SweepParameter::benefit_ratio: return "B_over_psi";
    case SweepParameter::strength: return "theta";
  }
  return "?";
}

// ----- SweepSpec -----

void SweepSpec::validate() const {
  if (!(lo < hi)) throw DomainError("sweep range must satisfy lo < hi");
  if (steps < 2) throw DomainError("sweep needs at least 2 steps");
  if (!parameter_allowed(target, parameter)) {
    throw DomainError(std::string("parameter ") + sweep_parameter_name(parameter) +
                      " does not apply to this sweep target");
  }
  switch (parameter) {
    case SweepParameter::partisan_share:
      if (lo < 0.0 || hi > 1.0) throw DomainError("alpha sweep must stay in [0,1]");
      break;
    case SweepParameter::attack_cost:
      if (!(lo > 0.0) || !(hi < 1.0)) {
        throw DomainError("attack cost sweep must stay strictly inside (0,1)");
      }
      break;
    case SweepParameter::signal_precision:
    case SweepParameter::benefit:
    case SweepParameter::counter_cost:
    case SweepParameter::benefit_ratio:
      if (!(lo > 0.0)) throw DomainError("sweep over a positive parameter needs lo > 0");
      break;
    case SweepParameter::strength:
      if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("strength sweep bounds must be finite");
      }
      break;
  }
  if (target == SweepTarget::benchmark) {
    if (!(partisan_share >= 0.0) || !(partisan_share <= 1.0)) {
      throw DomainError("fixed partisan share must lie in [0,1]");
    }
  }
  if (target == SweepTarget::collapse_curve) {
    sim.validate();
  } else {
    sim.params.validate();
  }
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> values(steps);
  const double width = (hi - lo) / (steps - 1);
  for (int i = 0; i < steps; ++i) values[i] = lo + i * width;
  values.back() = hi;  // land exactly on the endpoint
  return values;
}

// ----- driver -----

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> values = spec.grid();
  SweepResult result;
  const std::string param = sweep_parameter_name(spec.parameter);

  switch (spec.target) {
    case SweepTarget::benchmark:
      result.columns = {param, "x_star", "theta_star", "slope", "dtheta_dalpha", "note"};
      break;
    case SweepTarget::equilibrium:
      result.columns = {param, "alpha_star", "theta_star", "x_star",
                        "y_star", "z_star", "note"};
      break;
    case SweepTarget::collapse_curve:
      result.columns = {param, "empirical_collapse", "std_error",
                        "analytic_collapse", "note"};
      break;
  }

  for (const double value : values) {
    std::vector<Cell> row;
    row.emplace_back(value);
    try {
      switch (spec.target) {
        case SweepTarget::benchmark: {
          const double share = spec.parameter == SweepParameter::partisan_share
                                   ? value
                                   : spec.partisan_share;
          const ModelParams params =
              apply_parameter(spec.sim.params, spec.parameter, value);
          const BenchmarkEquilibrium eq = solve_benchmark_closed(share, params);
          row.emplace_back(eq.cutoff);
          row.emplace_back(eq.collapse_threshold);
          row.emplace_back(response_curve_slope(eq.cutoff, eq.collapse_threshold,
                                                share, params));
          row.emplace_back(partisan_sensitivity(eq, params));
          break;
        }
        case SweepTarget::equilibrium: {
          const ModelParams params =
              apply_parameter(spec.sim.params, spec.parameter, value);
          const CommunicationEquilibrium eq = solve_equilibrium(params);
          row.emplace_back(eq.critical_share);
          row.emplace_back(eq.collapse_threshold);
          row.emplace_back(eq.cutoff);
          row.emplace_back(eq.propaganda);
          row.emplace_back(eq.counter_propaganda);
          break;
        }
        case SweepTarget::collapse_curve: {
          const std::vector<CollapsePoint> curve =
              estimate_collapse_curve({value}, spec.sim);
          row.emplace_back(curve[0].empirical);
          row.emplace_back(curve[0].std_error);
          row.emplace_back(curve[0].analytic);
          break;
        }
      }
      row.emplace_back(std::string{});
    } catch (const Error& e) {
      // Per-row failure: keep the grid value, blank the fields, note the why.
      row.resize(1);
      for (std::size_t i = 1; i + 1 < result.columns.size(); ++i) {
        row.emplace_back(std::string{});
      }
      row.emplace_back(std::string(e.what()));
      ++result.failed_rows;
    }
    result.rows.push_back(std::move(row));
  }

  finish_labels(result);
  return result;
}

}  // namespace rcg
