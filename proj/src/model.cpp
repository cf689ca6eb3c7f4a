#include "rcg/model.hpp"

#include <cmath>

namespace rcg {

// ----- ModelParams -----

double ModelParams::root_precision() const { return std::sqrt(signal_precision); }

void ModelParams::validate() const {
  if (!(signal_precision > 0.0) || !std::isfinite(signal_precision)) {
    throw DomainError("signal precision must be positive and finite");
  }
  if (!(attack_cost > 0.0) || !(attack_cost < 1.0)) {
    throw DomainError("attack cost must lie strictly inside (0,1)");
  }
  if (!(benefit > 0.0) || !std::isfinite(benefit)) {
    throw DomainError("collapse benefit must be positive and finite");
  }
  if (!(counter_cost > 0.0) || !std::isfinite(counter_cost)) {
    throw DomainError("counter-propaganda cost scale must be positive and finite");
  }
  numerics.validate();
}

// ----- costs and cutoffs -----

double propaganda_cost(double level) { return 0.5 * level * level; }

double counter_propaganda_cost(double level, const ModelParams& params) {
  return 0.5 * params.counter_cost * level * level;
}

double effective_cutoff(double naive_cutoff, const Communication& comm) {
  return naive_cutoff - comm.propaganda + comm.counter_propaganda;
}

// ----- aggregate attack -----

double aggregate_attack(double strength, double cutoff, double partisan_share,
                        const ModelParams& params) {
  if (!(partisan_share >= 0.0) || !(partisan_share <= 1.0)) {
    throw DomainError("partisan share must lie in [0,1]");
  }
  const double pr = std_normal_cdf(params.root_precision() * (cutoff - strength));
  return partisan_share + (1.0 - partisan_share) * pr;
}

// ----- realized payoffs -----

double regime_realized_payoff(double strength, double attack_mass, double propaganda,
                              int defend) {
  if (defend != 0 && defend != 1) {
    throw DomainError("defend indicator must be 0 or 1");
  }
  return defend * (strength - attack_mass) - propaganda_cost(propaganda);
}

double citizen_realized_payoff(int attacked, bool collapsed, const ModelParams& params) {
  if (attacked != 0 && attacked != 1) {
    throw DomainError("attacked indicator must be 0 or 1");
  }
  return attacked * ((collapsed ? 1.0 : 0.0) - params.attack_cost);
}

double opposition_realized_payoff(bool collapsed, double counter_propaganda,
                                  const ModelParams& params) {
  return (collapsed ? params.benefit : 0.0) -
         counter_propaganda_cost(counter_propaganda, params);
}

}  // namespace rcg
