#pragma once

// No-communication equilibrium of the attack stage: the closed form, an
// independent root-finder route to the same pair, the slope of the
// equilibrium response curve (always below one, which is what makes the
// threshold pair unique), and the partisan-share comparative static.

#include "rcg/model.hpp"

namespace rcg {

struct BenchmarkEquilibrium {
  double partisan_share = 0.0;
  double cutoff = 0.0;             // marginal citizen's signal threshold
  double collapse_threshold = 0.0; // strength below which the regime falls
};

// Closed form: threshold = share + (1 - share)(1 - cost), cutoff shifted off
// it by quantile(cost) / sqrt(precision).
BenchmarkEquilibrium solve_benchmark_closed(double partisan_share,
                                            const ModelParams& params);

// Same pair through find_root on the indifference condition; kept as an
// independent cross-check of the closed form. The default bracket spans
// [share - 1, share + 2]; an explicit bracket overload exists so callers can
// verify the answer does not depend on the enclosure chosen.
BenchmarkEquilibrium solve_benchmark_numeric(double partisan_share,
                                             const ModelParams& params);
BenchmarkEquilibrium solve_benchmark_numeric(double partisan_share,
                                             const ModelParams& params,
                                             const Bracket& bracket);

// Slope of the equilibrium response curve at (cutoff, threshold); strictly
// inside [0, 1), which pins uniqueness of the crossing.
double response_curve_slope(double cutoff, double collapse_threshold,
                            double partisan_share, const ModelParams& params);

// How both equilibrium coordinates move when the partisan share rises;
// equals the survival probability of the marginal citizen, i.e. the attack
// cost at equilibrium.
double partisan_sensitivity(const BenchmarkEquilibrium& eq, const ModelParams& params);

}  // namespace rcg
