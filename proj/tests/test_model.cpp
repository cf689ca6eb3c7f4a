// Checks for the game primitives: parameter validation, costs, the shifted
// cutoff, the aggregate attack mass against hand-computed values, the tie
// conventions, and realized payoffs.

#include "rcg/model.hpp"

#include "test_util.hpp"

using namespace rcg;

namespace {

void check_params_validation() {
  ModelParams good;
  good.validate();
  ModelParams sharp = good;
  sharp.signal_precision = 4.0;
  REQUIRE_NEAR(sharp.root_precision(), 2.0, 1e-15,
               "root precision is the square root");

  ModelParams bad = good;
  bad.signal_precision = 0.0;
  REQUIRE_THROWS(bad.validate(), DomainError, "zero precision rejected");
  bad = good;
  bad.attack_cost = 0.0;
  REQUIRE_THROWS(bad.validate(), DomainError, "zero attack cost rejected");
  bad = good;
  bad.attack_cost = 1.0;
  REQUIRE_THROWS(bad.validate(), DomainError, "unit attack cost rejected");
  bad = good;
  bad.benefit = 0.0;
  REQUIRE_THROWS(bad.validate(), DomainError, "zero benefit rejected");
  bad = good;
  bad.counter_cost = -2.0;
  REQUIRE_THROWS(bad.validate(), DomainError, "negative cost scale rejected");
  bad = good;
  bad.signal_precision = std::nan("");
  REQUIRE_THROWS(bad.validate(), DomainError, "nan precision rejected");
  test_section("parameter validation");
}

void check_costs_and_cutoff() {
  REQUIRE_NEAR(propaganda_cost(0.3), 0.045, 1e-16, "quadratic propaganda cost");
  REQUIRE_NEAR(propaganda_cost(0.0), 0.0, 0.0, "zero effort is free");
  ModelParams params;
  params.counter_cost = 2.0;
  REQUIRE_NEAR(counter_propaganda_cost(0.3, params), 0.09, 1e-16,
               "scaled counter cost");

  const Communication comm{0.3, 0.2};
  REQUIRE_NEAR(effective_cutoff(0.1, comm), 0.0, 1e-16, "cutoff shifts one-for-one");
  // Exact one-for-one response in each campaign.
  const Communication more{0.3 + 0.25, 0.2};
  REQUIRE_NEAR(effective_cutoff(0.1, comm) - effective_cutoff(0.1, more), 0.25, 1e-15,
               "propaganda moves the cutoff down one-for-one");
  test_section("costs and cutoff");
}

void check_aggregate_attack() {
  ModelParams params;  // precision 1
  REQUIRE_NEAR(aggregate_attack(0.5, 0.5, 0.3, params), 0.65, 1e-15,
               "attack mass at a centered cutoff");
  REQUIRE_NEAR(aggregate_attack(0.5, 0.0, 0.3, params), 0.51597627710819083, 1e-14,
               "attack mass with the cutoff half a deviation below");
  ModelParams sharp;
  sharp.signal_precision = 4.0;
  REQUIRE_NEAR(aggregate_attack(0.5, 1.0, 0.3, sharp), 0.88894132224798007, 1e-14,
               "attack mass under higher precision");
  REQUIRE_NEAR(aggregate_attack(0.5, 0.0, 1.0, params), 1.0, 0.0,
               "all partisans means full attack");

  // Monotone in the cutoff, antitone in strength.
  double prev = aggregate_attack(0.5, -2.0, 0.3, params);
  for (double cut = -1.5; cut <= 2.0; cut += 0.5) {
    const double cur = aggregate_attack(0.5, cut, 0.3, params);
    REQUIRE(cur > prev, "attack mass increases with the cutoff");
    prev = cur;
  }
  prev = aggregate_attack(-1.0, 0.0, 0.3, params);
  for (double th = -0.5; th <= 2.0; th += 0.5) {
    const double cur = aggregate_attack(th, 0.0, 0.3, params);
    REQUIRE(cur < prev, "attack mass falls with strength");
    prev = cur;
  }
  REQUIRE_THROWS(aggregate_attack(0.5, 0.0, -0.1, params), DomainError,
                 "negative share rejected");
  REQUIRE_THROWS(aggregate_attack(0.5, 0.0, 1.1, params), DomainError,
                 "share above one rejected");
  test_section("aggregate attack");
}

void check_tie_conventions() {
  // At a tie the regime defends and the collapse indicator also fires; the
  // two conventions are deliberately not each other's negation.
  REQUIRE(regime_defends_at(0.5, 0.5), "defend on tie");
  REQUIRE(regime_collapses_at(0.5, 0.5), "collapse on tie");
  REQUIRE(!regime_defends_at(0.4, 0.5), "outnumbered regime stands down");
  REQUIRE(regime_collapses_at(0.4, 0.5), "outnumbered regime falls");
  REQUIRE(regime_defends_at(0.6, 0.5), "stronger regime defends");
  REQUIRE(!regime_collapses_at(0.6, 0.5), "stronger regime survives");
  test_section("tie conventions");
}

void check_realized_payoffs() {
  ModelParams params;
  params.attack_cost = 0.3;
  params.benefit = 2.0;

  REQUIRE_NEAR(regime_realized_payoff(0.8, 0.3, 0.0, 1), 0.5, 1e-15,
               "defending surplus");
  REQUIRE_NEAR(regime_realized_payoff(0.2, 0.3, 0.4, 0), -0.08, 1e-15,
               "abandoning pays only the sunk campaign");
  REQUIRE_THROWS(regime_realized_payoff(0.5, 0.3, 0.0, 2), DomainError,
                 "defend flag must be binary");

  REQUIRE_NEAR(citizen_realized_payoff(1, true, params), 0.7, 1e-15,
               "successful attacker");
  REQUIRE_NEAR(citizen_realized_payoff(1, false, params), -0.3, 1e-15,
               "failed attacker");
  REQUIRE(citizen_realized_payoff(0, true, params) == 0.0, "bystander");
  REQUIRE_THROWS(citizen_realized_payoff(2, true, params), DomainError,
                 "attack flag must be binary");

  REQUIRE_NEAR(opposition_realized_payoff(true, 0.4, params), 1.92, 1e-15,
               "collapse nets the benefit less effort");
  REQUIRE_NEAR(opposition_realized_payoff(false, 0.4, params), -0.08, 1e-15,
               "failed opposition pays its effort");
  test_section("realized payoffs");
}

}  // namespace

int main() {
  check_params_validation();
  check_costs_and_cutoff();
  check_aggregate_attack();
  check_tie_conventions();
  check_realized_payoffs();
  std::printf("model: all sections passed\n");
  return 0;
}
