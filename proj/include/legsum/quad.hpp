#pragma once

#include <functional>
#include <optional>

#include "legsum/common.hpp"

namespace legsum::quad {

// One-dimensional real integrand plus the metadata the engines rely on.
// decay_rate is a certified lower bound on the exponential decay exponent,
// used for truncation estimates only; osc_period caps panel widths and
// drives the oscillatory tail acceleration.
struct Integrand {
  std::function<double(double)> eval;
  std::optional<double> decay_rate;
  std::optional<double> osc_period;       // slowest oscillation, drives tail panels
  std::optional<double> osc_period_fast;  // fastest oscillation, caps panel widths
};

// Adaptive Gauss-Kronrod (7,15) on [a, b].
EvalResult integrate(const Integrand& f, double a, double b, double tol);

// Semi-infinite [a, inf) for integrands with (declared or detected)
// exponential decay; oscillatory integrands get a period-paneled tail with
// iterated averaging.
EvalResult integrate_semiinfinite(const Integrand& f, double a, double tol);

// Cauchy principal value across a simple pole at c in (a, b):
// symmetric excision plus the pair integrand g(t) = f(c+t) + f(c-t) on (0, eps],
// with an eps-halving stability check.
EvalResult integrate_pv(const Integrand& f, double pole, double a, double b, double tol);

// Integral over [x_M, inf) of g(x)/sqrt(x^2 - x_M^2); the substitution
// x = sqrt(x_M^2 + t^2) removes the endpoint singularity.
EvalResult integrate_sqrt_lower(const std::function<double(double)>& g, double x_M,
                                double tol, std::optional<double> decay_rate = {});

}  // namespace legsum::quad
