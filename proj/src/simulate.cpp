#include "rcg/simulate.hpp"

#include <algorithm>
#include <cmath>

namespace rcg {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix-style finalizer: bijective, avalanche-complete.
inline std::uint64_t mix64(std::uint64_t v) {
  v ^= v >> 30;
  v *= 0xBF58476D1CE4E5B9ull;
  v ^= v >> 27;
  v *= 0x94D049BB133111EBull;
  v ^= v >> 31;
  return v;
}

struct ReplicationResult {
  double attack = 0.0;
  double collapsed = 0.0;
  double regime_payoff = 0.0;
  double opposition_payoff = 0.0;
};

// Shared frame of one replication: share draw, attacker count by either
// decision rule, then realized payoffs.
ReplicationResult replicate(const SimConfig& cfg, std::int64_t rep, bool reference) {
  const double rp = cfg.params.root_precision();
  const std::int64_t n = cfg.n_citizens;
  SplitStream rng(cfg.seed, static_cast<std::uint64_t>(rep));

  const double share =
      cfg.pinned_share.has_value() ? *cfg.pinned_share : rng.next_uniform();
  const std::int64_t partisans =
      std::min<std::int64_t>(n, static_cast<std::int64_t>(share * n));
  const std::int64_t strategic = n - partisans;

  // Signals center on strength shifted by the two campaigns.
  const double location =
      cfg.strength + cfg.comm.propaganda - cfg.comm.counter_propaganda;
  std::int64_t attackers = partisans;
  if (reference) {
    for (std::int64_t i = 0; i < strategic; ++i) {
      const double noise = std_normal_quantile(rng.next_uniform()) / rp;
      attackers += (location + noise <= cfg.naive_cutoff) ? 1 : 0;
    }
  } else {
    // Identical rule in probability space: the signal is below the cutoff
    // exactly when its uniform sits below the attack probability.
    const double p_attack = std_normal_cdf(rp * (cfg.naive_cutoff - location));
    for (std::int64_t i = 0; i < strategic; ++i) {
      attackers += (rng.next_uniform() <= p_attack) ? 1 : 0;
    }
  }

  const double mass = static_cast<double>(attackers) / static_cast<double>(n);
  const bool defends = regime_defends_at(cfg.strength, mass);
  const bool collapsed = regime_collapses_at(cfg.strength, mass);

  ReplicationResult res;
  res.attack = mass;
  res.collapsed = collapsed ? 1.0 : 0.0;
  res.regime_payoff =
      regime_realized_payoff(cfg.strength, mass, cfg.comm.propaganda, defends ? 1 : 0);
  res.opposition_payoff =
      opposition_realized_payoff(collapsed, cfg.comm.counter_propaganda, cfg.params);
  return res;
}

// Neumaier-compensated serial sum in index order; the fixed order keeps the
// report bit-identical no matter how many threads produced the values.
double stable_sum(const std::vector<double>& values) {
  double sum = 0.0;
  double comp = 0.0;
  for (const double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe summarize(const std::vector<double>& values) {
  const std::size_t n = values.size();
  MeanSe out;
  out.mean = stable_sum(values) / static_cast<double>(n);
  if (n < 2) return out;
  double ss = 0.0;
  for (const double v : values) {
    const double d = v - out.mean;
    ss += d * d;
  }
  out.se = std::sqrt(ss / static_cast<double>(n - 1)) /
           std::sqrt(static_cast<double>(n));
  return out;
}

SimReport run_impl(const SimConfig& cfg, bool reference) {
  cfg.validate();
  const std::int64_t reps = cfg.n_replications;
  std::vector<double> attack(reps), collapsed(reps), regime(reps), opposition(reps);

  if (reference) {
    for (std::int64_t r = 0; r < reps; ++r) {
      const ReplicationResult res = replicate(cfg, r, true);
      attack[r] = res.attack;
      collapsed[r] = res.collapsed;
      regime[r] = res.regime_payoff;
      opposition[r] = res.opposition_payoff;
    }
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < reps; ++r) {
      const ReplicationResult res = replicate(cfg, r, false);
      attack[r] = res.attack;
      collapsed[r] = res.collapsed;
      regime[r] = res.regime_payoff;
      opposition[r] = res.opposition_payoff;
    }
  }

  const MeanSe a = summarize(attack);
  const MeanSe c = summarize(collapsed);
  const MeanSe g = summarize(regime);
  const MeanSe o = summarize(opposition);
  SimReport report;
  report.mean_attack = a.mean;
  report.se_attack = a.se;
  report.collapse_frequency = c.mean;
  report.se_collapse = c.se;
  report.mean_regime_payoff = g.mean;
  report.se_regime_payoff = g.se;
  report.mean_opposition_payoff = o.mean;
  report.se_opposition_payoff = o.se;
  report.seed_used = cfg.seed;
  return report;
}

}  // namespace

// ----- SimConfig -----

void SimConfig::validate() const {
  params.validate();
  if (n_citizens < 1) throw DomainError("need at least one citizen");
  if (n_replications < 1) throw DomainError("need at least one replication");
  if (!std::isfinite(strength) || !std::isfinite(naive_cutoff) ||
      !std::isfinite(comm.propaganda) || !std::isfinite(comm.counter_propaganda)) {
    throw DomainError("simulation state must be finite");
  }
  if (pinned_share.has_value() &&
      (!(*pinned_share >= 0.0) || !(*pinned_share <= 1.0))) {
    throw DomainError("pinned partisan share must lie in [0,1]");
  }
}

// ----- SplitStream -----

SplitStream::SplitStream(std::uint64_t seed, std::uint64_t stream)
    : state(mix64(seed ^ (stream * 0xA24BAED4963EE407ull + 0x9FB21C651E98DF25ull))) {}

std::uint64_t SplitStream::next_u64() {
  state += kGolden;
  return mix64(state);
}

double SplitStream::next_uniform() {
  // 53 high bits, centered on the lattice: never exactly 0 or 1.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

// ----- replications and reports -----

AttackOutcome run_replication(const SimConfig& cfg, std::int64_t replication) {
  cfg.validate();
  if (replication < 0) throw DomainError("replication index must be nonnegative");
  const ReplicationResult res = replicate(cfg, replication, false);
  return {res.attack, regime_defends_at(cfg.strength, res.attack),
          regime_collapses_at(cfg.strength, res.attack)};
}

AttackOutcome run_replication_reference(const SimConfig& cfg, std::int64_t replication) {
  cfg.validate();
  if (replication < 0) throw DomainError("replication index must be nonnegative");
  const ReplicationResult res = replicate(cfg, replication, true);
  return {res.attack, regime_defends_at(cfg.strength, res.attack),
          regime_collapses_at(cfg.strength, res.attack)};
}

SimReport run_simulation(const SimConfig& cfg) { return run_impl(cfg, false); }

SimReport run_simulation_reference(const SimConfig& cfg) { return run_impl(cfg, true); }

// ----- collapse curve -----

std::vector<CollapsePoint> estimate_collapse_curve(const std::vector<double>& strengths,
                                                   const SimConfig& cfg_template) {
  std::vector<CollapsePoint> curve;
  curve.reserve(strengths.size());
  for (const double strength : strengths) {
    SimConfig cfg = cfg_template;
    cfg.strength = strength;
    const SimReport report = run_simulation(cfg);
    CollapsePoint point;
    point.strength = strength;
    point.empirical = report.collapse_frequency;
    point.std_error = report.se_collapse;
    const double cut = effective_cutoff(cfg.naive_cutoff, cfg.comm);
    const CriticalShare cs = critical_share(strength, cut, cfg.params);
    point.analytic = std::min(1.0, std::max(0.0, 1.0 - cs.raw));
    curve.push_back(point);
  }
  return curve;
}

}  // namespace rcg
