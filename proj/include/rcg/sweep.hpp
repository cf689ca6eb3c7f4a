#pragma once

// Parameter-grid driver behind the sweep subcommand: evaluates one target
// per grid point, records per-row failures without aborting the run, and
// labels each numeric column's monotonicity direction.

#include <string>
#include <vector>

#include "rcg/output.hpp"
#include "rcg/simulate.hpp"

namespace rcg {

enum class SweepParameter {
  partisan_share,   // "alpha"
  attack_cost,      // "c"
  signal_precision, // "beta"
  benefit,          // "B"
  counter_cost,     // "psi"
  benefit_ratio,    // "B_over_psi" (counter cost pinned to 1)
  strength,         // "theta"
};

enum class SweepTarget { benchmark, equilibrium, collapse_curve };

SweepParameter parse_sweep_parameter(const std::string& name);  // DomainError on unknown
SweepTarget parse_sweep_target(const std::string& name);
const char* sweep_parameter_name(SweepParameter parameter);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::partisan_share;
  SweepTarget target = SweepTarget::benchmark;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;                // grid points, endpoints included
  double partisan_share = 0.0;  // fixed share for the benchmark target
  SimConfig sim{};              // strength grid template for collapse_curve;
                                // sim.params seeds the model everywhere

  // Range, step-count, parameter/target compatibility, and parameter-domain
  // checks; throws DomainError.
  void validate() const;
  std::vector<double> grid() const;
};

struct SweepResult {
  std::vector<std::string> columns;       // parameter, values..., "note"
  std::vector<std::vector<Cell>> rows;    // failed rows keep the note text
  std::vector<std::string> monotonicity;  // per column; "" for the note column
  int failed_rows = 0;
};

SweepResult run_sweep(const SweepSpec& spec);

}  // namespace rcg
