#include "rcg/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace rcg {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// ----- rational inverse-normal initial guess -----

// Low-degree rational minimax approximation (relative error ~1e-9 before
// polishing), split at the 2.425% tails.
double quantile_initial(double p) {
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  auto tail = [](double q) {
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  };
  if (p < p_low) {
    return tail(std::sqrt(-2.0 * std::log(p)));
  }
  if (p > 1.0 - p_low) {
    return -tail(std::sqrt(-2.0 * std::log(1.0 - p)));
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// ----- Gauss-Legendre base rule -----

struct GaussRule {
  std::vector<double> node;    // on (0,1), symmetric about 1/2
  std::vector<double> weight;  // sums to 1
};

// Nodes by Newton iteration on the Legendre three-term recurrence.
GaussRule build_gauss_rule(int n) {
  GaussRule rule;
  rule.node.resize(n);
  rule.weight.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule.node[i] = 0.5 * (1.0 - x);  // map [-1,1] to (0,1), reversed order
    rule.weight[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss64() {
  static const GaussRule rule = build_gauss_rule(64);
  return rule;
}

double gauss_panels(const RealFn& f, double lo, double hi, int panels) {
  const GaussRule& rule = gauss64();
  const double width = (hi - lo) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double left = lo + p * width;
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.node.size(); ++i) {
      sum += rule.weight[i] * f(left + width * rule.node[i]);
    }
    total += sum * width;
  }
  return total;
}

}  // namespace

// ----- NumericConfig -----

void NumericConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("numeric tolerances must be positive");
  }
  if (max_iter < 1) {
    throw DomainError("max_iter must be at least 1");
  }
  if (!(fd_step > 0.0)) {
    throw DomainError("fd_step must be positive");
  }
}

// ----- distribution functions -----

double std_normal_cdf(double u) { return 0.5 * std::erfc(-u * kInvSqrt2); }

double std_normal_sf(double u) { return 0.5 * std::erfc(u * kInvSqrt2); }

double std_normal_pdf(double u) { return kInvSqrt2Pi * std::exp(-0.5 * u * u); }

double std_normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw DomainError("quantile argument must lie strictly inside (0,1)");
  }
  double x = quantile_initial(p);
  for (int i = 0; i < 2; ++i) {
    const double density = std_normal_pdf(x);
    if (density < 1e-280) break;  // deep tails: the rational guess stands
    x -= (std_normal_cdf(x) - p) / density;
  }
  return x;
}

// ----- find_root -----

double find_root(const RealFn& f, const Bracket& bracket, const NumericConfig& cfg) {
  cfg.validate();
  double a = bracket.lo;
  double b = bracket.hi;
  if (!(a < b)) {
    throw DomainError("root bracket must satisfy lo < hi");
  }
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (!(fa * fb < 0.0)) {
    throw BracketError("root bracket endpoints do not straddle a sign change");
  }

  double best = std::abs(fa) < std::abs(fb) ? a : b;
  double best_f = std::min(std::abs(fa), std::abs(fb));
  int last_kept = 0;  // -1: low end retained, +1: high end, 0: fresh

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    // Secant candidate from the bracket endpoints; midpoint when it leaves
    // the open interval or the slope degenerates.
    double s = b - fb * (b - a) / (fb - fa);
    if (!std::isfinite(s) || !(s > a) || !(s < b)) {
      s = 0.5 * (a + b);
    }
    const double fs = f(s);
    if (std::abs(fs) < best_f) {
      best = s;
      best_f = std::abs(fs);
    }
    if (fs == 0.0) return s;

    if (fa * fs < 0.0) {
      b = s;
      fb = fs;
      // Illinois scaling keeps the stagnant endpoint from pinning the secant.
      if (last_kept == -1) fa *= 0.5;
      last_kept = -1;
    } else {
      a = s;
      fa = fs;
      if (last_kept == +1) fb *= 0.5;
      last_kept = +1;
    }

    const double width = b - a;
    if (width <= cfg.abs_tol + cfg.rel_tol * std::abs(s) || std::abs(fs) <= cfg.abs_tol) {
      return s;
    }
  }
  throw ConvergenceError("root iteration budget exhausted", best);
}

// ----- integrate -----

double integrate(const RealFn& f, double lo, double hi, const NumericConfig& cfg) {
  cfg.validate();
  if (lo > hi) {
    throw DomainError("integration bounds must satisfy lo <= hi");
  }
  if (lo == hi) return 0.0;

  double prev = gauss_panels(f, lo, hi, 1);
  int panels = 2;
  for (int round = 0; round < 12; ++round, panels *= 2) {
    const double current = gauss_panels(f, lo, hi, panels);
    if (std::abs(current - prev) <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(current))) {
      return current;
    }
    prev = current;
  }
  throw ConvergenceError("quadrature refinement failed to settle", prev);
}

// ----- derivative_central -----

double derivative_central(const RealFn& f, double at, const NumericConfig& cfg) {
  cfg.validate();
  const double h = cfg.fd_step * std::max(1.0, std::abs(at));
  const double up = f(at + h);
  const double down = f(at - h);
  const double slope = (up - down) / (2.0 * h);
  if (!std::isfinite(slope)) {
    throw Error("central difference hit a non-finite evaluation");
  }
  return slope;
}

}  // namespace rcg
