#pragma once

// Standard normal distribution functions, bracketed root finding, composite
// Gauss-Legendre quadrature, and central differences. Everything here is a
// pure function of its arguments: identical inputs produce bit-identical
// outputs, which the simulation and CLI layers rely on for reproducibility.

#include <functional>

#include "rcg/errors.hpp"

namespace rcg {

struct NumericConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_iter = 200;
  double fd_step = 1e-6;  // central-difference step scale

  void validate() const;  // throws DomainError on nonpositive entries
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

using RealFn = std::function<double(double)>;

// Phi(u), via erfc so the tails keep full relative accuracy.
double std_normal_cdf(double u);

// 1 - Phi(u) computed directly (no cancellation); used wherever a survival
// probability sits in a denominator.
double std_normal_sf(double u);

// phi(u) = exp(-u^2/2) / sqrt(2 pi).
double std_normal_pdf(double u);

// Inverse of std_normal_cdf on (0,1): rational initial approximation
// polished by two Newton steps through std_normal_cdf / std_normal_pdf.
// |Phi(result) - p| stays below 1e-12 away from the extreme tails.
double std_normal_quantile(double p);

// Bisection-safeguarded secant (Illinois-style false position). The iterate
// sequence is a pure function of (f, bracket, cfg). Throws BracketError when
// f(lo) and f(hi) share a sign, ConvergenceError (carrying the best iterate)
// when max_iter runs out.
double find_root(const RealFn& f, const Bracket& bracket, const NumericConfig& cfg);

// Composite 64-point Gauss-Legendre rule, doubling the panel count until two
// successive refinements agree within max(abs_tol, rel_tol * |I|).
double integrate(const RealFn& f, double lo, double hi, const NumericConfig& cfg);

// (f(at + h) - f(at - h)) / (2 h) with h = fd_step * max(1, |at|).
double derivative_central(const RealFn& f, double at, const NumericConfig& cfg);

}  // namespace rcg
