// Checks for the Monte Carlo engine: stream determinism, agreement between
// the probability-space kernel and the literal signal-space reference,
// statistical agreement with the analytic attack mass and collapse
// probability, the collapse/critical-share equivalence, payoff consistency,
// and the collapse-curve estimator.

#include "rcg/simulate.hpp"

#include <cmath>
#include <cstring>

#include "test_util.hpp"

using namespace rcg;

namespace {

SimConfig base_config() {
  SimConfig cfg;
  cfg.strength = 0.5;
  cfg.naive_cutoff = 0.0;
  cfg.n_citizens = 1000;
  cfg.n_replications = 100;
  cfg.seed = 1;
  return cfg;
}

void check_stream() {
  SplitStream a(42, 7);
  SplitStream b(42, 7);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(a.next_u64() == b.next_u64(), "same (seed, stream) replays exactly");
  }
  SplitStream c(42, 8);
  SplitStream d(43, 7);
  bool differs_stream = false;
  bool differs_seed = false;
  SplitStream a2(42, 7);
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t base = a2.next_u64();
    differs_stream |= (base != c.next_u64());
    differs_seed |= (base != d.next_u64());
  }
  REQUIRE(differs_stream, "different streams decorrelate");
  REQUIRE(differs_seed, "different seeds decorrelate");

  SplitStream u(5, 0);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double v = u.next_uniform();
    REQUIRE(v > 0.0 && v < 1.0, "uniforms stay strictly inside (0,1)");
    sum += v;
  }
  REQUIRE_NEAR(sum / 100000.0, 0.5, 0.005, "uniform mean near one half");
  test_section("split stream");
}

void check_kernel_matches_reference() {
  SimConfig cfg = base_config();
  cfg.strength = 0.5;
  cfg.comm = {0.1, 0.2};
  cfg.naive_cutoff = 0.3;
  cfg.n_citizens = 2000;
  cfg.n_replications = 50;
  cfg.seed = 7;
  cfg.params.signal_precision = 2.0;

  for (std::int64_t rep = 0; rep < cfg.n_replications; ++rep) {
    const AttackOutcome fast = run_replication(cfg, rep);
    const AttackOutcome slow = run_replication_reference(cfg, rep);
    REQUIRE(fast.attack_mass == slow.attack_mass,
            "probability-space kernel replays the signal-space walk");
    REQUIRE(fast.regime_defends == slow.regime_defends, "defense flags agree");
    REQUIRE(fast.collapsed == slow.collapsed, "collapse flags agree");
  }

  const SimReport fast = run_simulation(cfg);
  const SimReport slow = run_simulation_reference(cfg);
  REQUIRE(std::memcmp(&fast, &slow, sizeof(SimReport)) == 0,
          "whole reports agree bit for bit");

  const SimReport again = run_simulation(cfg);
  REQUIRE(std::memcmp(&fast, &again, sizeof(SimReport)) == 0,
          "repeated runs are bit-identical");
  test_section("kernel vs reference");
}

void check_outcome_flags() {
  SimConfig cfg = base_config();
  const AttackOutcome out = run_replication(cfg, 3);
  REQUIRE(out.attack_mass >= 0.0 && out.attack_mass <= 1.0, "mass inside [0,1]");
  REQUIRE(out.regime_defends == (cfg.strength >= out.attack_mass),
          "defense follows the tie convention");
  REQUIRE(out.collapsed == (out.attack_mass >= cfg.strength),
          "collapse follows the tie convention");
  REQUIRE_THROWS(run_replication(cfg, -1), DomainError, "negative index rejected");
  test_section("outcome flags");
}

void check_pinned_share_attack() {
  // Pinned partisan share: mean attack matches share + (1-share)*Phi(-1/2).
  SimConfig cfg = base_config();
  cfg.pinned_share = 0.3;
  cfg.n_citizens = 100000;
  cfg.n_replications = 200;
  cfg.seed = 42;
  const SimReport report = run_simulation(cfg);
  const double expected = 0.51597627710819083;
  REQUIRE(std::abs(report.mean_attack - expected) <= 3.0 * report.se_attack,
          "pinned attack within three standard errors");
  REQUIRE(report.se_attack > 0.0 && report.se_attack < 1e-3,
          "standard error at the binomial scale");
  REQUIRE(report.seed_used == 42, "seed echoed");
  test_section("pinned-share attack mass");
}

void check_drawn_share_statistics() {
  // Random share: mean attack integrates the share out; collapse frequency
  // matches one minus the critical share.
  SimConfig cfg = base_config();
  cfg.n_citizens = 10000;
  cfg.n_replications = 2000;
  cfg.seed = 3;
  const SimReport report = run_simulation(cfg);
  const double phi = 0.3085375387259869;  // Phi(-1/2)
  REQUIRE(std::abs(report.mean_attack - (0.5 + 0.5 * phi)) <=
              4.0 * report.se_attack,
          "mean attack integrates the share draw");
  REQUIRE(std::abs(report.collapse_frequency - 0.72310505342365902) <=
              4.0 * report.se_collapse + 0.005,
          "collapse frequency matches the critical share");
  test_section("drawn-share statistics");
}

void check_collapse_iff_critical_share() {
  // Collapse happens exactly when the drawn share clears the critical share,
  // up to the binomial layer around the boundary; pin the share well away
  // from the boundary on both sides.
  const double critical = 0.27689494657634098;
  SimConfig cfg = base_config();
  cfg.n_citizens = 100000;
  cfg.n_replications = 20;
  for (const double offset : {+0.01, -0.01}) {
    cfg.pinned_share = critical + offset;
    cfg.seed = 11;
    const SimReport report = run_simulation(cfg);
    if (offset > 0.0) {
      REQUIRE(report.collapse_frequency == 1.0,
              "share above the critical mass always topples");
    } else {
      REQUIRE(report.collapse_frequency == 0.0,
              "share below the critical mass never topples");
    }
  }
  test_section("collapse at the critical share");
}

void check_sure_outcomes() {
  // Negative strength collapses even with no attackers; strength beyond one
  // survives any attack, so the regime pockets strength minus the mass.
  SimConfig cfg = base_config();
  cfg.strength = -0.1;
  cfg.n_replications = 50;
  SimReport report = run_simulation(cfg);
  REQUIRE(report.collapse_frequency == 1.0, "negative strength always collapses");

  cfg.strength = 2.0;
  report = run_simulation(cfg);
  REQUIRE(report.collapse_frequency == 0.0, "strength two never collapses");
  REQUIRE_NEAR(report.mean_regime_payoff, 2.0 - report.mean_attack, 1e-12,
               "surviving regime keeps strength minus attack");
  test_section("sure outcomes");
}

void check_payoff_consistency() {
  // The opposition payoff is linear in the collapse indicator, so the means
  // must tie out exactly.
  SimConfig cfg = base_config();
  cfg.comm = {0.15, 0.25};
  cfg.params.benefit = 2.0;
  cfg.params.counter_cost = 3.0;
  cfg.n_replications = 400;
  cfg.seed = 9;
  const SimReport report = run_simulation(cfg);
  const double cost = counter_propaganda_cost(0.25, cfg.params);
  REQUIRE_NEAR(report.mean_opposition_payoff,
               cfg.params.benefit * report.collapse_frequency - cost, 1e-12,
               "opposition mean ties to the collapse frequency");
  test_section("payoff consistency");
}

void check_attack_mass_convergence() {
  // Law of large numbers at a pinned share: the gap to the analytic mass
  // shrinks with the number of citizens, and at one million citizens it sits
  // within four binomial standard errors in at least 95 of 100 seeded runs.
  const double expected = 0.51597627710819083;
  const double p = 0.3085375387259869;

  SimConfig cfg = base_config();
  cfg.pinned_share = 0.3;
  cfg.n_replications = 1;

  double total_gap_small = 0.0;
  double total_gap_large = 0.0;
  int within = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    cfg.seed = seed;
    cfg.n_citizens = 1000;
    total_gap_small += std::abs(run_simulation(cfg).mean_attack - expected);
    cfg.n_citizens = 1000000;
    const double gap = std::abs(run_simulation(cfg).mean_attack - expected);
    total_gap_large += gap;
    const double strategic = 0.7 * 1000000.0;
    const double se = 0.7 * std::sqrt(p * (1.0 - p) / strategic);
    if (gap <= 4.0 * se) ++within;
  }
  REQUIRE(total_gap_large < total_gap_small, "gap shrinks as citizens grow");
  REQUIRE(within >= 95, "large population inside four standard errors");
  test_section("attack-mass convergence");
}

void check_collapse_curve() {
  SimConfig cfg = base_config();
  cfg.n_citizens = 20000;
  cfg.n_replications = 400;
  cfg.seed = 17;
  const std::vector<double> grid = {0.2, 0.36, 0.5, 0.8, 1.1};
  const std::vector<CollapsePoint> curve = estimate_collapse_curve(grid, cfg);
  REQUIRE(curve.size() == grid.size(), "one point per strength");
  REQUIRE(curve.front().analytic == 1.0, "below the floor collapse is certain");
  REQUIRE(curve.back().analytic == 0.0, "beyond one collapse is impossible");
  double prev = 2.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    REQUIRE(curve[i].strength == grid[i], "grid echoed");
    REQUIRE(curve[i].analytic <= prev + 1e-12, "analytic curve non-increasing");
    prev = curve[i].analytic;
    REQUIRE(std::abs(curve[i].empirical - curve[i].analytic) <=
                4.0 * curve[i].std_error + 0.01,
            "empirical curve tracks the analytic one");
  }
  test_section("collapse curve");
}

void check_config_validation() {
  SimConfig cfg = base_config();
  cfg.n_citizens = 0;
  REQUIRE_THROWS(cfg.validate(), DomainError, "zero citizens rejected");
  cfg = base_config();
  cfg.n_replications = 0;
  REQUIRE_THROWS(cfg.validate(), DomainError, "zero replications rejected");
  cfg = base_config();
  cfg.pinned_share = 1.5;
  REQUIRE_THROWS(cfg.validate(), DomainError, "pinned share outside [0,1]");
  cfg = base_config();
  cfg.strength = std::nan("");
  REQUIRE_THROWS(cfg.validate(), DomainError, "non-finite strength rejected");
  base_config().validate();
  test_section("config validation");
}

}  // namespace

int main() {
  check_stream();
  check_kernel_matches_reference();
  check_outcome_flags();
  check_pinned_share_attack();
  check_drawn_share_statistics();
  check_collapse_iff_critical_share();
  check_sure_outcomes();
  check_payoff_consistency();
  check_attack_mass_convergence();
  check_collapse_curve();
  check_config_validation();
  std::printf("simulate: all sections passed\n");
  return 0;
}
