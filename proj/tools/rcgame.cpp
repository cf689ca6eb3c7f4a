// rcgame — solvers, best responses, Monte Carlo validation, and parameter
// sweeps for a regime-change coordination game with two-sided costly
// signal-shifting ("propaganda" against "counter-propaganda").
//
//   rcgame benchmark     --alpha 0.2 --c 0.5 --beta 1
//   rcgame equilibrium   --c 0.5 --B 0.5 --psi 1 --beta 1
//   rcgame best-response --side opposition --theta 0.5 --x-star 0
//   rcgame simulate      --theta 0.5 --x-hat 0 --n 100000 --reps 10000 --seed 7
//   rcgame sweep         --param beta --lo 0.5 --hi 8 --steps 16 --target equilibrium
//
// Every subcommand accepts --format table|csv|json and --out <path>, and can
// read defaults from a config file (--config, or the RCGAME_CONFIG
// environment variable) whose keys mirror the flag names. Exit codes:
// 0 success, 2 usage error, 3 solver or domain error, 4 sweep finished with
// failed rows.

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rcg/benchmark.hpp"
#include "rcg/communication.hpp"
#include "rcg/output.hpp"
#include "rcg/simulate.hpp"
#include "rcg/sweep.hpp"

namespace {

// ----- shared flag bundles -----

struct CommonFlags {
  std::string format = "table";
  std::string out_path;
};

void add_common_flags(CLI::App* cmd, CommonFlags& common) {
  cmd->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", common.out_path, "write the rendered output to this file");
}

struct ParamFlags {
  double beta = 1.0;
  double c = 0.5;
  double benefit = 1.0;
  double psi = 1.0;
  double ratio = 1.0;
  CLI::Option* ratio_opt = nullptr;

  rcg::ModelParams to_params() const {
    rcg::ModelParams params;
    params.signal_precision = beta;
    params.attack_cost = c;
    if (ratio_opt != nullptr && ratio_opt->count() > 0) {
      params.benefit = ratio;  // ratio flag implies a unit cost scale
      params.counter_cost = 1.0;
    } else {
      params.benefit = benefit;
      params.counter_cost = psi;
    }
    return params;
  }
};

void add_model_flags(CLI::App* cmd, ParamFlags& pf, bool with_benefit_flags) {
  cmd->add_option("--beta", pf.beta, "signal precision (> 0)")->capture_default_str();
  cmd->add_option("--c", pf.c, "attack cost, strictly inside (0,1)")
      ->capture_default_str();
  if (with_benefit_flags) {
    auto* benefit = cmd->add_option("--B", pf.benefit,
                                    "opposition benefit from collapse (> 0)")
                        ->capture_default_str();
    auto* psi = cmd->add_option("--psi", pf.psi,
                                "counter-propaganda cost scale (> 0)")
                    ->capture_default_str();
    pf.ratio_opt =
        cmd->add_option("--B-over-psi", pf.ratio,
                        "benefit-to-cost ratio; sets B to the ratio with psi = 1");
    pf.ratio_opt->excludes(benefit);
    pf.ratio_opt->excludes(psi);
  }
}

void echo_params(rcg::OutputEnvelope& env, const rcg::ModelParams& params) {
  env.inputs.emplace_back("c", params.attack_cost);
  env.inputs.emplace_back("beta", params.signal_precision);
  env.inputs.emplace_back("B", params.benefit);
  env.inputs.emplace_back("psi", params.counter_cost);
}

int emit(const rcg::OutputEnvelope& env, const CommonFlags& common) {
  const std::string text = rcg::render(env, rcg::parse_format(common.format));
  if (common.out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) {
    std::fprintf(stderr, "error: cannot open %s for writing\n",
                 common.out_path.c_str());
    return 3;
  }
  file << text;
  return file.good() ? 0 : 3;
}

// ----- subcommand handlers -----

int run_benchmark(const ParamFlags& pf, double alpha, const CommonFlags& common) {
  const rcg::ModelParams params = pf.to_params();
  const rcg::BenchmarkEquilibrium closed = rcg::solve_benchmark_closed(alpha, params);
  const rcg::BenchmarkEquilibrium numeric =
      rcg::solve_benchmark_numeric(alpha, params);
  const double gap =
      std::max(std::abs(closed.collapse_threshold - numeric.collapse_threshold),
               std::abs(closed.cutoff - numeric.cutoff));

  rcg::OutputEnvelope env;
  env.command = "benchmark";
  env.inputs.emplace_back("alpha", alpha);
  env.inputs.emplace_back("c", params.attack_cost);
  env.inputs.emplace_back("beta", params.signal_precision);
  env.columns = {"alpha", "x_star", "theta_star", "slope", "dtheta_dalpha"};
  env.rows.push_back(
      {alpha, closed.cutoff, closed.collapse_threshold,
       rcg::response_curve_slope(closed.cutoff, closed.collapse_threshold, alpha,
                                 params),
       rcg::partisan_sensitivity(closed, params)});
  env.diagnostics.emplace_back("closed_vs_root_gap", gap);
  return emit(env, common);
}

int run_equilibrium(const ParamFlags& pf, const CommonFlags& common) {
  const rcg::ModelParams params = pf.to_params();
  const rcg::CommunicationEquilibrium eq = rcg::solve_equilibrium(params);
  const rcg::EquilibriumResiduals res = rcg::equilibrium_residuals(eq, params);

  rcg::OutputEnvelope env;
  env.command = "equilibrium";
  echo_params(env, params);
  env.columns = {"alpha_star", "theta_star", "x_star", "y_star", "z_star"};
  env.rows.push_back({eq.critical_share, eq.collapse_threshold, eq.cutoff,
                      eq.propaganda, eq.counter_propaganda});
  const bool half = params.attack_cost == 0.5;
  env.diagnostics.emplace_back("solver",
                               std::string(half ? "half-cost closed form"
                                                : "general quadratic"));
  env.diagnostics.emplace_back("residual_threshold", res.threshold);
  env.diagnostics.emplace_back("residual_effort_gap", res.effort_gap);
  env.diagnostics.emplace_back("residual_propaganda", res.propaganda);
  env.diagnostics.emplace_back("residual_counter", res.counter);
  env.diagnostics.emplace_back("residual_cutoff", res.cutoff);
  env.diagnostics.emplace_back("residual_max", res.max_abs());
  if (half) {
    // Cross-check the closed form against the quadratic path.
    const rcg::CommunicationEquilibrium general =
        rcg::solve_equilibrium_general(params);
    const double cross = std::max(
        {std::abs(general.critical_share - eq.critical_share),
         std::abs(general.collapse_threshold - eq.collapse_threshold),
         std::abs(general.cutoff - eq.cutoff),
         std::abs(general.propaganda - eq.propaganda),
         std::abs(general.counter_propaganda - eq.counter_propaganda)});
    env.diagnostics.emplace_back("closed_vs_quadratic", cross);
  }
  return emit(env, common);
}

int run_best_response(const ParamFlags& pf, const std::string& side, double theta,
                      double x_star, const std::optional<double>& alpha_star,
                      const CommonFlags& common) {
  const rcg::ModelParams params = pf.to_params();
  rcg::BestResponse br;
  if (side == "opposition") {
    br = rcg::opposition_best_response(theta, x_star, params);
  } else {
    const double share = alpha_star.has_value()
                             ? *alpha_star
                             : rcg::critical_share(theta, x_star, params).clamped;
    br = rcg::regime_best_response(theta, x_star, share, params);
  }
  const bool dominance = theta < 0.0 || theta > 1.0;

  rcg::OutputEnvelope env;
  env.command = "best-response";
  env.inputs.emplace_back("side", side);
  env.inputs.emplace_back("theta", theta);
  env.inputs.emplace_back("x_star", x_star);
  echo_params(env, params);
  env.columns = {"theta", "level", "critical_alpha", "note"};
  env.rows.push_back({br.strength, br.level, br.critical_share,
                      std::string(dominance ? "dominance region" : "")});
  return emit(env, common);
}

struct SimFlags {
  double theta = 0.5;
  double x_hat = 0.0;
  double y = 0.0;
  double z = 0.0;
  std::int64_t n = 1000;
  std::int64_t reps = 100;
  std::uint64_t seed = 1;
  double pin_alpha = 0.0;
  CLI::Option* pin_opt = nullptr;

  rcg::SimConfig to_config(const ParamFlags& pf) const {
    rcg::SimConfig cfg;
    cfg.strength = theta;
    cfg.naive_cutoff = x_hat;
    cfg.comm = {y, z};
    cfg.n_citizens = n;
    cfg.n_replications = reps;
    cfg.seed = seed;
    if (pin_opt != nullptr && pin_opt->count() > 0) cfg.pinned_share = pin_alpha;
    cfg.params = pf.to_params();
    return cfg;
  }
};

void add_sim_flags(CLI::App* cmd, SimFlags& sf, bool require_seed) {
  cmd->add_option("--x-hat", sf.x_hat, "naive citizen signal cutoff")
      ->capture_default_str();
  cmd->add_option("--y", sf.y, "regime propaganda level")->capture_default_str();
  cmd->add_option("--z", sf.z, "opposition counter-propaganda level")
      ->capture_default_str();
  cmd->add_option("--n", sf.n, "citizens per replication")->capture_default_str();
  cmd->add_option("--reps", sf.reps, "number of replications")->capture_default_str();
  auto* seed = cmd->add_option("--seed", sf.seed, "random seed");
  if (require_seed) seed->required();
  sf.pin_opt = cmd->add_option(
      "--pin-alpha", sf.pin_alpha,
      "testing hook: fix the partisan share instead of drawing it");
}

int run_simulate(const ParamFlags& pf, const SimFlags& sf, const CommonFlags& common) {
  const rcg::SimConfig cfg = sf.to_config(pf);
  const rcg::SimReport report = rcg::run_simulation(cfg);

  rcg::OutputEnvelope env;
  env.command = "simulate";
  env.inputs.emplace_back("theta", cfg.strength);
  env.inputs.emplace_back("x_hat", cfg.naive_cutoff);
  env.inputs.emplace_back("y", cfg.comm.propaganda);
  env.inputs.emplace_back("z", cfg.comm.counter_propaganda);
  env.inputs.emplace_back("n", static_cast<double>(cfg.n_citizens));
  env.inputs.emplace_back("reps", static_cast<double>(cfg.n_replications));
  env.inputs.emplace_back("seed", static_cast<double>(cfg.seed));
  if (cfg.pinned_share.has_value()) {
    env.inputs.emplace_back("pin_alpha", *cfg.pinned_share);
  }
  echo_params(env, cfg.params);

  env.columns = {"mean_attack",        "se_attack",
                 "collapse_frequency", "se_collapse",
                 "mean_regime_payoff", "se_regime_payoff",
                 "mean_opposition_payoff", "se_opposition_payoff",
                 "analytic_collapse"};
  rcg::Cell analytic;
  try {
    const double cut = rcg::effective_cutoff(cfg.naive_cutoff, cfg.comm);
    const rcg::CriticalShare cs = rcg::critical_share(cfg.strength, cut, cfg.params);
    analytic = std::min(1.0, std::max(0.0, 1.0 - cs.raw));
  } catch (const rcg::DegenerateDenominatorError&) {
    analytic = std::string("degenerate");
  }
  env.rows.push_back({report.mean_attack, report.se_attack,
                      report.collapse_frequency, report.se_collapse,
                      report.mean_regime_payoff, report.se_regime_payoff,
                      report.mean_opposition_payoff, report.se_opposition_payoff,
                      analytic});
  env.diagnostics.emplace_back("seed_used", static_cast<double>(report.seed_used));
  return emit(env, common);
}

struct SweepFlags {
  std::string parameter;
  std::string target;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
  double alpha = 0.0;
};

int run_sweep_cmd(const ParamFlags& pf, const SimFlags& sf, const SweepFlags& wf,
                  const CommonFlags& common) {
  rcg::SweepSpec spec;
  spec.parameter = rcg::parse_sweep_parameter(wf.parameter);
  spec.target = rcg::parse_sweep_target(wf.target);
  spec.lo = wf.lo;
  spec.hi = wf.hi;
  spec.steps = wf.steps;
  spec.partisan_share = wf.alpha;
  spec.sim = sf.to_config(pf);
  const rcg::SweepResult result = rcg::run_sweep(spec);

  rcg::OutputEnvelope env;
  env.command = "sweep";
  env.inputs.emplace_back("param", wf.parameter);
  env.inputs.emplace_back("target", wf.target);
  env.inputs.emplace_back("lo", wf.lo);
  env.inputs.emplace_back("hi", wf.hi);
  env.inputs.emplace_back("steps", static_cast<double>(wf.steps));
  if (spec.target == rcg::SweepTarget::benchmark) {
    env.inputs.emplace_back("alpha", wf.alpha);
  }
  echo_params(env, spec.sim.params);
  if (spec.target == rcg::SweepTarget::collapse_curve) {
    env.inputs.emplace_back("x_hat", spec.sim.naive_cutoff);
    env.inputs.emplace_back("n", static_cast<double>(spec.sim.n_citizens));
    env.inputs.emplace_back("reps", static_cast<double>(spec.sim.n_replications));
    env.inputs.emplace_back("seed", static_cast<double>(spec.sim.seed));
  }

  env.columns = result.columns;
  env.rows = result.rows;
  // Trailing diagnostics row: detected direction for every value column, the
  // literal "monotonicity" marker in the note column.
  std::vector<rcg::Cell> trailer;
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    if (i + 1 == result.columns.size()) {
      trailer.emplace_back(std::string("monotonicity"));
    } else {
      trailer.emplace_back(result.monotonicity[i]);
    }
  }
  env.rows.push_back(std::move(trailer));
  for (std::size_t i = 0; i + 1 < result.columns.size(); ++i) {
    env.diagnostics.emplace_back("monotonicity_" + result.columns[i],
                                 result.monotonicity[i]);
  }
  env.diagnostics.emplace_back("failed_rows",
                               static_cast<double>(result.failed_rows));
  const int code = emit(env, common);
  if (code != 0) return code;
  return result.failed_rows > 0 ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regime-change communication game toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "config file with flag-name keys")
      ->envname("RCGAME_CONFIG");
  // Let --config (a top-level option) appear after the subcommand name.
  app.fallthrough();

  // benchmark
  CLI::App* bench = app.add_subcommand(
      "benchmark", "no-communication threshold equilibrium");
  CommonFlags bench_common;
  ParamFlags bench_params;
  double bench_alpha = 0.0;
  bench->add_option("--alpha", bench_alpha, "partisan share in [0,1]")
      ->capture_default_str();
  add_model_flags(bench, bench_params, false);
  add_common_flags(bench, bench_common);

  // equilibrium
  CLI::App* equil = app.add_subcommand(
      "equilibrium", "two-sided communication equilibrium");
  CommonFlags equil_common;
  ParamFlags equil_params;
  add_model_flags(equil, equil_params, true);
  add_common_flags(equil, equil_common);

  // best-response
  CLI::App* best = app.add_subcommand(
      "best-response", "one side's optimal effort at a candidate point");
  CommonFlags best_common;
  ParamFlags best_params;
  std::string best_side;
  double best_theta = 0.0;
  double best_x_star = 0.0;
  double best_alpha_star = 0.0;
  best->add_option("--side", best_side, "which communicator")
      ->check(CLI::IsMember({"regime", "opposition"}))
      ->required();
  best->add_option("--theta", best_theta, "regime strength")->required();
  best->add_option("--x-star", best_x_star, "effective citizen cutoff")
      ->capture_default_str();
  CLI::Option* best_share_opt = best->add_option(
      "--alpha-star", best_alpha_star,
      "critical share for the regime side (computed at the point if omitted)");
  add_model_flags(best, best_params, true);
  add_common_flags(best, best_common);

  // simulate
  CLI::App* sim = app.add_subcommand(
      "simulate", "finite-agent Monte Carlo validation run");
  CommonFlags sim_common;
  ParamFlags sim_params;
  SimFlags sim_flags;
  sim->add_option("--theta", sim_flags.theta, "regime strength")
      ->capture_default_str();
  add_sim_flags(sim, sim_flags, true);
  add_model_flags(sim, sim_params, true);
  add_common_flags(sim, sim_common);

  // sweep
  CLI::App* sweep = app.add_subcommand(
      "sweep", "parameter grid with per-column monotonicity labels");
  CommonFlags sweep_common;
  ParamFlags sweep_params;
  SimFlags sweep_sim;
  SweepFlags sweep_flags;
  sweep->add_option("--param", sweep_flags.parameter, "parameter to sweep")
      ->check(CLI::IsMember(
          {"alpha", "c", "beta", "B", "psi", "B_over_psi", "B-over-psi", "theta"}))
      ->required();
  sweep->add_option("--target", sweep_flags.target, "what to evaluate per point")
      ->check(CLI::IsMember({"benchmark", "equilibrium", "collapse-curve",
                             "collapse_curve"}))
      ->required();
  sweep->add_option("--lo", sweep_flags.lo, "low end of the grid")->required();
  sweep->add_option("--hi", sweep_flags.hi, "high end of the grid")->required();
  sweep->add_option("--steps", sweep_flags.steps, "grid points, endpoints included")
      ->required();
  sweep->add_option("--alpha", sweep_flags.alpha,
                    "fixed partisan share for the benchmark target")
      ->capture_default_str();
  add_sim_flags(sweep, sweep_sim, false);
  add_model_flags(sweep, sweep_params, true);
  add_common_flags(sweep, sweep_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, bad usage exits 2
  }

  try {
    if (bench->parsed()) {
      return run_benchmark(bench_params, bench_alpha, bench_common);
    }
    if (equil->parsed()) {
      return run_equilibrium(equil_params, equil_common);
    }
    if (best->parsed()) {
      std::optional<double> share;
      if (best_share_opt->count() > 0) share = best_alpha_star;
      return run_best_response(best_params, best_side, best_theta, best_x_star,
                               share, best_common);
    }
    if (sim->parsed()) {
      return run_simulate(sim_params, sim_flags, sim_common);
    }
    if (sweep->parsed()) {
      return run_sweep_cmd(sweep_params, sweep_sim, sweep_flags, sweep_common);
    }
  } catch (const rcg::NoInteriorEquilibriumError& e) {
    std::fprintf(stderr, "error: %s (roots %.12g and %.12g)\n", e.what(),
                 e.root_lo, e.root_hi);
    return 3;
  } catch (const rcg::AmbiguousEquilibriumError& e) {
    std::fprintf(stderr, "error: %s (roots %.12g and %.12g)\n", e.what(),
                 e.root_lo, e.root_hi);
    return 3;
  } catch (const rcg::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 2;  // no subcommand parsed (require_subcommand should prevent this)
}
