#pragma once

// Game primitives: parameter bundle, tie conventions, the effective signal
// cutoff under naive interpretation, the aggregate attack mass, and realized
// payoffs for the regime, a single citizen, and the opposition.

#include "rcg/errors.hpp"
#include "rcg/numerics.hpp"

namespace rcg {

struct ModelParams {
  double signal_precision = 1.0;  // inverse noise variance, > 0
  double attack_cost = 0.5;       // strategic citizen's cost of attacking, in (0,1)
  double benefit = 1.0;           // opposition's gross gain from collapse, > 0
  double counter_cost = 1.0;      // scale on the opposition's quadratic effort cost, > 0
  NumericConfig numerics{};

  double root_precision() const;  // sqrt(signal_precision)
  void validate() const;          // throws DomainError outside the domain above
};

struct Communication {
  double propaganda = 0.0;          // regime's additive shift of every signal
  double counter_propaganda = 0.0;  // opposition's opposing shift
};

// Tie conventions at strength == attack mass: the regime still defends and
// the collapse indicator also fires. Both match the payoff formulas
// literally; the tie carries zero probability under continuous noise.
constexpr bool regime_defends_at(double strength, double attack_mass) {
  return strength >= attack_mass;
}
constexpr bool regime_collapses_at(double strength, double attack_mass) {
  return attack_mass >= strength;
}

// Quadratic campaign costs.
double propaganda_cost(double level);
double counter_propaganda_cost(double level, const ModelParams& params);

// Cutoff strategic citizens actually apply once both campaigns shift the
// signal: naive cutoff - propaganda + counter-propaganda.
double effective_cutoff(double naive_cutoff, const Communication& comm);

// share + (1 - share) * Phi(sqrt(precision) * (cutoff - strength)).
double aggregate_attack(double strength, double cutoff, double partisan_share,
                        const ModelParams& params);

// defend * (strength - attack_mass) - propaganda cost; defend must be 0 or 1.
double regime_realized_payoff(double strength, double attack_mass, double propaganda,
                              int defend);

// attacked * (collapsed - attack cost); attacked must be 0 or 1.
double citizen_realized_payoff(int attacked, bool collapsed, const ModelParams& params);

// benefit * collapsed - counter-propaganda cost.
double opposition_realized_payoff(bool collapsed, double counter_propaganda,
                                  const ModelParams& params);

}  // namespace rcg
