#pragma once

// Two-sided communication layer: the critical partisan share at a strength /
// cutoff pair, the zero-partisan collapse floor, expected payoffs of both
// campaigners, their best responses, the full equilibrium (general attack
// cost plus the half-cost closed form), and finite-difference comparative
// statics of that closed form.

#include "rcg/benchmark.hpp"

namespace rcg {

struct CriticalShare {
  double raw = 0.0;      // may leave [0,1]: negative means collapse is certain
  double clamped = 0.0;  // raw clipped to [0,1]
};

// Smallest partisan share that topples the regime at the given strength when
// strategic citizens attack below `cutoff`. Throws DegenerateDenominatorError
// when the marginal survival probability underflows.
CriticalShare critical_share(double strength, double cutoff, const ModelParams& params);

// d(raw critical share)/d(cutoff) = -sqrt(prec) * (1 - strength) * pdf / sf^2.
double critical_share_cutoff_derivative(double strength, double cutoff,
                                        const ModelParams& params);

// Strength below which the regime falls even with zero partisans: the unique
// fixed point of strength = Phi(sqrt(prec) * (cutoff - strength)).
double collapse_floor(double cutoff, const ModelParams& params);

// Expected payoffs before the partisan share is drawn, at naive citizen
// cutoff `naive_cutoff` shifted by both campaigns.
double opposition_expected_payoff(double strength, const Communication& comm,
                                  double naive_cutoff, const ModelParams& params);
double regime_expected_payoff(double strength, const Communication& comm,
                              double naive_cutoff, const ModelParams& params);

struct BestResponse {
  double strength = 0.0;
  double level = 0.0;          // optimal effort at the evaluation point
  double critical_share = 0.0; // clamped critical share there
};

// Opposition's optimal counter-effort against a fixed effective cutoff; zero
// whenever effort cannot change the outcome (strength outside [0,1] or
// already below the collapse floor).
BestResponse opposition_best_response(double strength, double cutoff,
                                      const ModelParams& params);

// Regime's optimal effort given the critical share it faces; the closed form
// is checked internally against the quadrature form before being returned.
BestResponse regime_best_response(double strength, double cutoff,
                                  double critical_share_clamped,
                                  const ModelParams& params);
double regime_best_response_quadrature(double strength, double cutoff,
                                       double critical_share_clamped,
                                       const ModelParams& params);

struct CommunicationEquilibrium {
  double critical_share = 0.0;     // partisan mass at which collapse starts
  double collapse_threshold = 0.0; // strength at the critical share
  double cutoff = 0.0;             // naive citizen cutoff
  double propaganda = 0.0;
  double counter_propaganda = 0.0;
};

// Signed residuals of the five fixed-point relations an equilibrium must
// satisfy; all vanish (to numeric precision) at a solution.
struct EquilibriumResiduals {
  double threshold = 0.0;   // collapse threshold vs the share relation
  double effort_gap = 0.0;  // (counter - propaganda) vs quantile / sqrt(prec)
  double propaganda = 0.0;  // propaganda level vs its first-order condition
  double counter = 0.0;     // counter level vs its first-order condition
  double cutoff = 0.0;      // cutoff vs threshold + propaganda - counter
  double max_abs() const;
};

// Reduces the five relations to one quadratic in the critical share, takes
// the admissible root in [0,1], and back-substitutes. Throws
// NoInteriorEquilibriumError / AmbiguousEquilibriumError (both carrying the
// quadratic's roots) when the root count in [0,1] is not exactly one.
CommunicationEquilibrium solve_equilibrium_general(const ModelParams& params);

// Closed form available when the attack cost is exactly one half.
CommunicationEquilibrium solve_equilibrium_half_cost(const ModelParams& params);

// Routing front door: the half-cost closed form when it applies, the general
// solver otherwise. What the CLI and the sweep driver call.
CommunicationEquilibrium solve_equilibrium(const ModelParams& params);

EquilibriumResiduals equilibrium_residuals(const CommunicationEquilibrium& eq,
                                           const ModelParams& params);

enum class EquilibriumDriver { signal_precision, benefit_ratio };

struct ComparativeStatics {
  double d_propaganda = 0.0;
  double d_counter = 0.0;
  double d_cutoff = 0.0;
  double d_threshold = 0.0;
};

// Central finite differences of the half-cost solution with respect to the
// chosen driver; requires attack cost exactly one half.
ComparativeStatics comparative_statics(const ModelParams& params,
                                       EquilibriumDriver which);

}  // namespace rcg
