#pragma once

// Finite-agent Monte Carlo engine replaying the stage game: draw a partisan
// share, draw citizen signals, threshold the attacks, then let the regime
// stand or fall. The production kernel decides each attack in probability
// space (one cdf per replication); a literal signal-space walk is kept as a
// slow serial reference. Replications use independent deterministic random
// streams, so results are bit-identical across thread counts.

#include <cstdint>
#include <optional>
#include <vector>

#include "rcg/communication.hpp"

namespace rcg {

struct SimConfig {
  double strength = 0.5;
  Communication comm{};
  double naive_cutoff = 0.0;
  std::int64_t n_citizens = 1000;
  std::int64_t n_replications = 100;
  std::uint64_t seed = 1;
  // Testing hook: fixes the partisan share instead of drawing it uniformly.
  std::optional<double> pinned_share{};
  ModelParams params{};

  void validate() const;  // throws DomainError on out-of-domain settings
};

struct AttackOutcome {
  double attack_mass = 0.0;
  bool regime_defends = false;
  bool collapsed = false;
};

struct SimReport {
  double mean_attack = 0.0;
  double collapse_frequency = 0.0;
  double mean_regime_payoff = 0.0;
  double mean_opposition_payoff = 0.0;
  double se_attack = 0.0;
  double se_collapse = 0.0;
  double se_regime_payoff = 0.0;
  double se_opposition_payoff = 0.0;
  std::uint64_t seed_used = 0;
};

// Deterministic counter-based stream: one independent sequence per
// (seed, stream) pair, insensitive to how streams interleave across threads.
struct SplitStream {
  std::uint64_t state;

  SplitStream(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next_u64();
  double next_uniform();  // strictly inside (0,1)
};

// One replication. Stream layout: draw 0 is the partisan share (skipped when
// pinned), then one uniform per strategic citizen; partisans consume none.
AttackOutcome run_replication(const SimConfig& cfg, std::int64_t replication);

// Literal signal-space walk: inverse-cdf noise per citizen, compare the
// realized signal against the cutoff. Same stream, same outcomes; kept as
// the reference the fast kernel is tested against.
AttackOutcome run_replication_reference(const SimConfig& cfg, std::int64_t replication);

SimReport run_simulation(const SimConfig& cfg);            // parallel over replications
SimReport run_simulation_reference(const SimConfig& cfg);  // serial, reference rule

struct CollapsePoint {
  double strength = 0.0;
  double empirical = 0.0;  // observed collapse frequency
  double std_error = 0.0;
  double analytic = 0.0;   // 1 - critical share, clamped to [0,1]
};

// Empirical collapse probability across a strength grid next to its analytic
// prediction; cfg_template supplies everything except the strength.
std::vector<CollapsePoint> estimate_collapse_curve(const std::vector<double>& strengths,
                                                   const SimConfig& cfg_template);

}  // namespace rcg
