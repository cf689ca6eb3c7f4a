#include "rcg/communication.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace rcg {

namespace {

// Denominators below this are treated as underflowed outright.
constexpr double kSurvivalFloor = 1e-300;
// The squared-survival denominator in the cutoff derivative underflows
// earlier, so that path uses a wider guard.
constexpr double kSquaredSurvivalFloor = 1e-150;

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

// ----- critical share -----

CriticalShare critical_share(double strength, double cutoff, const ModelParams& params) {
  params.validate();
  const double arg = params.root_precision() * (cutoff - strength);
  const double survival = std_normal_sf(arg);
  if (survival < kSurvivalFloor) {
    throw DegenerateDenominatorError(
        fmt("critical share denominator underflowed at strength %.6g, cutoff %.6g",
            strength, cutoff));
  }
  CriticalShare out;
  out.raw = (strength - std_normal_cdf(arg)) / survival;
  out.clamped = clamp01(out.raw);
  return out;
}

double critical_share_cutoff_derivative(double strength, double cutoff,
                                        const ModelParams& params) {
  params.validate();
  const double rp = params.root_precision();
  const double arg = rp * (cutoff - strength);
  const double survival = std_normal_sf(arg);
  if (survival < kSquaredSurvivalFloor) {
    throw DegenerateDenominatorError(
        fmt("squared survival denominator underflowed at strength %.6g, cutoff %.6g",
            strength, cutoff));
  }
  return -rp * (1.0 - strength) * std_normal_pdf(arg) / (survival * survival);
}

// ----- collapse floor -----

double collapse_floor(double cutoff, const ModelParams& params) {
  params.validate();
  const double rp = params.root_precision();
  const auto gap = [&](double t) { return t - std_normal_cdf(rp * (cutoff - t)); };
  // The fixed point always lies in (0,1); the widened bracket also covers the
  // scale of the cutoff itself so extreme cutoffs still enclose it.
  const Bracket bracket{std::min(cutoff - 10.0 / rp, 0.0),
                        std::max(cutoff + 10.0 / rp, 1.0)};
  return find_root(gap, bracket, params.numerics);
}

// ----- expected payoffs -----

double opposition_expected_payoff(double strength, const Communication& comm,
                                  double naive_cutoff, const ModelParams& params) {
  params.validate();
  const double cost = counter_propaganda_cost(comm.counter_propaganda, params);
  if (strength > 1.0) return -cost;  // survival for every partisan share
  const double cut = effective_cutoff(naive_cutoff, comm);
  // A nonpositive raw share means the regime falls below its collapse floor
  // regardless of partisans, so the clamp folds that branch in as well.
  const CriticalShare cs = critical_share(strength, cut, params);
  return params.benefit * (1.0 - cs.clamped) - cost;
}

double regime_expected_payoff(double strength, const Communication& comm,
                              double naive_cutoff, const ModelParams& params) {
  params.validate();
  const double cost = propaganda_cost(comm.propaganda);
  const double rp = params.root_precision();
  if (strength > 1.0) {
    // The regime survives for every partisan share, so the attack it pays to
    // put down is the one naive citizens mount on their own: communication
    // cannot change the outcome here and only burns effort cost.
    const double pr = std_normal_cdf(rp * (naive_cutoff - strength));
    const auto surplus = [&](double share) {
      return strength - share - (1.0 - share) * pr;
    };
    return integrate(surplus, 0.0, 1.0, params.numerics) - cost;
  }
  const double cut = effective_cutoff(naive_cutoff, comm);
  const CriticalShare cs = critical_share(strength, cut, params);
  if (cs.clamped <= 0.0) return -cost;  // collapse certain: no surplus region
  const double pr = std_normal_cdf(rp * (cut - strength));
  const auto surplus = [&](double share) {
    return strength - share - (1.0 - share) * pr;
  };
  return integrate(surplus, 0.0, cs.clamped, params.numerics) - cost;
}

// ----- best responses -----

BestResponse opposition_best_response(double strength, double cutoff,
                                      const ModelParams& params) {
  params.validate();
  BestResponse br;
  br.strength = strength;
  const CriticalShare cs = critical_share(strength, cutoff, params);
  br.critical_share = cs.clamped;
  if (strength < 0.0 || strength > 1.0 || cs.raw <= 0.0) {
    br.level = 0.0;  // effort cannot move the outcome
    return br;
  }
  const double ratio = params.benefit / params.counter_cost;
  br.level = -ratio * critical_share_cutoff_derivative(strength, cutoff, params);
  return br;
}

double regime_best_response_quadrature(double strength, double cutoff,
                                       double critical_share_clamped,
                                       const ModelParams& params) {
  params.validate();
  if (!(critical_share_clamped >= 0.0) || !(critical_share_clamped <= 1.0)) {
    throw DomainError("critical share must lie in [0,1]");
  }
  const double rp = params.root_precision();
  const double density = std_normal_pdf(rp * (cutoff - strength));
  const auto marginal = [&](double share) { return rp * (1.0 - share) * density; };
  return integrate(marginal, 0.0, critical_share_clamped, params.numerics);
}

BestResponse regime_best_response(double strength, double cutoff,
                                  double critical_share_clamped,
                                  const ModelParams& params) {
  params.validate();
  if (!(critical_share_clamped >= 0.0) || !(critical_share_clamped <= 1.0)) {
    throw DomainError("critical share must lie in [0,1]");
  }
  BestResponse br;
  br.strength = strength;
  br.critical_share = critical_share_clamped;
  if (strength < 0.0 || strength > 1.0) {
    br.level = 0.0;
    return br;
  }
  const double rp = params.root_precision();
  const double closed = rp * std_normal_pdf(rp * (cutoff - strength)) *
                        critical_share_clamped * (1.0 - 0.5 * critical_share_clamped);
  const double quad =
      regime_best_response_quadrature(strength, cutoff, critical_share_clamped, params);
  if (std::abs(closed - quad) > 1e-9 * std::max(1.0, std::abs(closed))) {
    throw Error(fmt("closed-form effort %.17g disagrees with its integral %.17g",
                    closed, quad));
  }
  br.level = closed;
  return br;
}

// ----- equilibrium -----

CommunicationEquilibrium solve_equilibrium_general(const ModelParams& params) {
  params.validate();
  const double c = params.attack_cost;
  const double rp = params.root_precision();
  const double quantile_c = std_normal_quantile(c);
  const double density_c = std_normal_pdf(quantile_c);
  const double ratio = params.benefit / params.counter_cost;
  const double m = ratio / c;

  // The five equilibrium relations reduce to one quadratic in the critical
  // share: s^2 - 2(1+m)s + (2m - 2q/(prec*pdf(q))) = 0.
  const double half_sum = 1.0 + m;
  const double product = 2.0 * m - 2.0 * quantile_c / (params.signal_precision * density_c);
  const double disc = half_sum * half_sum - product;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  if (disc < 0.0) {
    throw NoInteriorEquilibriumError(
        "equilibrium quadratic has no real root", nan, nan);
  }
  const double root_hi = half_sum + std::sqrt(disc);
  const double root_lo = product / root_hi;  // root_hi >= 1 + m > 0 always

  const bool lo_ok = root_lo >= 0.0 && root_lo <= 1.0;
  const bool hi_ok = root_hi >= 0.0 && root_hi <= 1.0 && root_hi != root_lo;
  double share;
  if (lo_ok && hi_ok) {
    throw AmbiguousEquilibriumError(
        fmt("both quadratic roots %.12g and %.12g lie in [0,1]", root_lo, root_hi),
        root_lo, root_hi);
  } else if (lo_ok) {
    share = root_lo;
  } else if (hi_ok) {
    share = root_hi;
  } else {
    throw NoInteriorEquilibriumError(
        fmt("neither quadratic root (%.12g, %.12g) lies in [0,1]", root_lo, root_hi),
        root_lo, root_hi);
  }

  CommunicationEquilibrium eq;
  eq.critical_share = share;
  eq.collapse_threshold = share + (1.0 - share) * (1.0 - c);
  eq.propaganda = rp * density_c * share * (1.0 - 0.5 * share);
  eq.counter_propaganda = m * rp * (1.0 - share) * density_c;
  eq.cutoff = eq.collapse_threshold + eq.propaganda - eq.counter_propaganda;

  // The effort gap must reproduce the marginal citizen's indifference shift.
  const double gap = eq.counter_propaganda - eq.propaganda - quantile_c / rp;
  if (std::abs(gap) > 1e-9 * std::max(1.0, std::abs(quantile_c / rp))) {
    throw Error(fmt("equilibrium back-substitution inconsistent by %.3g at share %.12g",
                    gap, share));
  }
  return eq;
}

CommunicationEquilibrium solve_equilibrium_half_cost(const ModelParams& params) {
  params.validate();
  if (params.attack_cost != 0.5) {
    throw DomainError("half-cost closed form requires attack cost exactly 1/2");
  }
  const double r = 2.0 * params.benefit / params.counter_cost;
  const double s = std::hypot(1.0, r);
  // s - r equals 1/(s + r) exactly, which keeps every field stable as the
  // benefit ratio grows instead of cancelling.
  const double inv = 1.0 / (s + r);
  CommunicationEquilibrium eq;
  eq.critical_share = 1.0 - inv;
  eq.collapse_threshold = 1.0 - 0.5 * inv;
  eq.propaganda = 0.5 * r * std::sqrt(2.0 * params.signal_precision / M_PI) * inv;
  eq.counter_propaganda = eq.propaganda;
  eq.cutoff = eq.collapse_threshold;
  return eq;
}

CommunicationEquilibrium solve_equilibrium(const ModelParams& params) {
  params.validate();
  return params.attack_cost == 0.5 ? solve_equilibrium_half_cost(params)
                                   : solve_equilibrium_general(params);
}

EquilibriumResiduals equilibrium_residuals(const CommunicationEquilibrium& eq,
                                           const ModelParams& params) {
  params.validate();
  const double c = params.attack_cost;
  const double rp = params.root_precision();
  const double quantile_c = std_normal_quantile(c);
  const double density_c = std_normal_pdf(quantile_c);
  const double share = eq.critical_share;

  EquilibriumResiduals r;
  r.threshold = eq.collapse_threshold - (share + (1.0 - share) * (1.0 - c));
  r.effort_gap = (eq.counter_propaganda - eq.propaganda) - quantile_c / rp;
  r.propaganda = eq.propaganda - rp * density_c * share * (1.0 - 0.5 * share);
  r.counter = eq.counter_propaganda -
              (params.benefit / params.counter_cost) * rp * (1.0 - share) * density_c / c;
  r.cutoff = eq.cutoff - (eq.collapse_threshold + eq.propaganda - eq.counter_propaganda);
  return r;
}

double EquilibriumResiduals::max_abs() const {
  return std::max({std::abs(threshold), std::abs(effort_gap), std::abs(propaganda),
                   std::abs(counter), std::abs(cutoff)});
}

// ----- comparative statics -----

ComparativeStatics comparative_statics(const ModelParams& params,
                                       EquilibriumDriver which) {
  params.validate();
  if (params.attack_cost != 0.5) {
    throw DomainError("comparative statics use the half-cost closed form");
  }
  ModelParams up = params;
  ModelParams down = params;
  double h;
  if (which == EquilibriumDriver::signal_precision) {
    h = params.numerics.fd_step * std::max(1.0, params.signal_precision);
    h = std::min(h, 0.5 * params.signal_precision);  // keep the lower leg positive
    up.signal_precision += h;
    down.signal_precision -= h;
  } else {
    const double ratio = params.benefit / params.counter_cost;
    h = params.numerics.fd_step * std::max(1.0, ratio);
    h = std::min(h, 0.5 * ratio);
    up.benefit = ratio + h;
    up.counter_cost = 1.0;
    down.benefit = ratio - h;
    down.counter_cost = 1.0;
  }
  const CommunicationEquilibrium hi = solve_equilibrium_half_cost(up);
  const CommunicationEquilibrium lo = solve_equilibrium_half_cost(down);
  ComparativeStatics out;
  out.d_propaganda = (hi.propaganda - lo.propaganda) / (2.0 * h);
  out.d_counter = (hi.counter_propaganda - lo.counter_propaganda) / (2.0 * h);
  out.d_cutoff = (hi.cutoff - lo.cutoff) / (2.0 * h);
  out.d_threshold = (hi.collapse_threshold - lo.collapse_threshold) / (2.0 * h);
  return out;
}

}  // namespace rcg
