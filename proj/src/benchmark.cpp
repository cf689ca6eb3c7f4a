#include "rcg/benchmark.hpp"

#include <cmath>

namespace rcg {

namespace {

void require_share(double partisan_share) {
  if (!(partisan_share >= 0.0) || !(partisan_share <= 1.0)) {
    throw DomainError("partisan share must lie in [0,1]");
  }
}

}  // namespace

// ----- closed form -----

BenchmarkEquilibrium solve_benchmark_closed(double partisan_share,
                                            const ModelParams& params) {
  params.validate();
  require_share(partisan_share);
  BenchmarkEquilibrium eq;
  eq.partisan_share = partisan_share;
  eq.collapse_threshold =
      partisan_share + (1.0 - partisan_share) * (1.0 - params.attack_cost);
  eq.cutoff = eq.collapse_threshold -
              std_normal_quantile(params.attack_cost) / params.root_precision();
  return eq;
}

// ----- root-finder route -----

BenchmarkEquilibrium solve_benchmark_numeric(double partisan_share,
                                             const ModelParams& params) {
  return solve_benchmark_numeric(partisan_share, params,
                                 {partisan_share - 1.0, partisan_share + 2.0});
}

BenchmarkEquilibrium solve_benchmark_numeric(double partisan_share,
                                             const ModelParams& params,
                                             const Bracket& bracket) {
  params.validate();
  require_share(partisan_share);
  // Substituting the indifference line into the mass condition leaves the
  // marginal citizen's survival probability fixed at the attack cost, so the
  // remaining equation in the collapse threshold is solved generically.
  const double survival =
      std_normal_cdf(-std_normal_quantile(params.attack_cost));
  const auto gap = [&](double threshold) {
    return threshold - partisan_share - (1.0 - partisan_share) * survival;
  };
  BenchmarkEquilibrium eq;
  eq.partisan_share = partisan_share;
  eq.collapse_threshold = find_root(gap, bracket, params.numerics);
  eq.cutoff = eq.collapse_threshold -
              std_normal_quantile(params.attack_cost) / params.root_precision();
  return eq;
}

// ----- response-curve slope -----

double response_curve_slope(double cutoff, double collapse_threshold,
                            double partisan_share, const ModelParams& params) {
  params.validate();
  require_share(partisan_share);
  const double rp = params.root_precision();
  const double mass_slope =
      rp * (1.0 - partisan_share) * std_normal_pdf(rp * (cutoff - collapse_threshold));
  return mass_slope / (1.0 + mass_slope);
}

// ----- partisan-share comparative static -----

double partisan_sensitivity(const BenchmarkEquilibrium& eq, const ModelParams& params) {
  params.validate();
  return std_normal_sf(params.root_precision() * (eq.cutoff - eq.collapse_threshold));
}

}  // namespace rcg
