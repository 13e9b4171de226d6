#include "legsum/gammafn.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_psi.h>

#include <cmath>

namespace legsum::specfun {

namespace {

struct GslInit {
  GslInit() { gsl_set_error_handler_off(); }
};
const GslInit gsl_init_once;

constexpr double kLnSqrt2Pi = 0.91893853320467274178032973640562;

// Stirling tail coefficients B_{2n} / (2n (2n-1)).
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// Stirling series for Re z large enough.
cplx lgamma_stirling(cplx z) {
  cplx res = (z - 0.5) * std::log(z) - z + kLnSqrt2Pi;
  cplx zi = 1.0 / z;
  cplx zi2 = zi * zi;
  cplx t = zi;
  for (double c : kStirling) {
    res += c * t;
    t *= zi2;
  }
  return res;
}

// log(sin(pi z)) unwound so that reflection yields the continuous branch.
cplx log_sin_pi(cplx z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}),  |e^{2 i pi z}| <= 1 here
  cplx ipz = cplx(0.0, kPi) * z;
  return cplx(-0.69314718055994530942, 0.5 * kPi) - ipz + std::log(1.0 - std::exp(2.0 * ipz));
}

}  // namespace

cplx lgamma_c(cplx z) {
  if (z.imag() == 0.0 && z.real() > 0.0) return cplx(std::lgamma(z.real()), 0.0);
  if (z.real() < 0.5) {
    // Reflection, each log on the branch that keeps the result continuous.
    return std::log(cplx(kPi, 0.0)) - log_sin_pi(z) - lgamma_c(1.0 - z);
  }
  // Shift until Stirling is accurate.
  cplx shift(0.0, 0.0);
  cplx w = z;
  while (std::abs(w) < 20.0) {
    shift += std::log(w);
    w += 1.0;
  }
  return lgamma_stirling(w) - shift;
}

cplx digamma_c(cplx z) {
  cplx shift(0.0, 0.0);
  cplx w = z;
  if (w.real() < 0.5) {
    // psi(z) = psi(1-z) - pi cot(pi z)
    cplx piz = kPi * z;
    return digamma_c(1.0 - z) - kPi * std::cos(piz) / std::sin(piz);
  }
  while (std::abs(w) < 16.0) {
    shift += 1.0 / w;
    w += 1.0;
  }
  // Asymptotic series.
  cplx wi = 1.0 / w, wi2 = wi * wi;
  cplx res = std::log(w) - 0.5 * wi;
  static constexpr double b[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132, -691.0 / 32760, 1.0 / 12};
  cplx t = wi2;
  for (double c : b) {
    res -= c * t;
    t *= wi2;
  }
  return res - shift;
}

double log_abs_gamma_sq_int_ix(int l, double x) {
  // |Gamma(1 + ix)|^2 = pi x / sinh(pi x); stated in logs to survive large x.
  double ax = std::abs(x);
  double base;
  if (ax < 1e-8) {
    base = -kPi * kPi * ax * ax / 6.0;  // log(pi x / sinh(pi x)) ~ -(pi x)^2/6
  } else {
    base = std::log(kPi * ax) - (kPi * ax + std::log1p(-std::exp(-2.0 * kPi * ax)) - std::log(2.0));
  }
  double s = base;
  for (int j = 1; j <= l; ++j) s += std::log(static_cast<double>(j) * j + x * x);
  return s;
}

EvalResultC gamma_ln(cplx z) {
  EvalResultC r;
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw DomainError("gamma_ln: pole at non-positive integer");
  }
  r.value = lgamma_c(z);
  r.abs_err = 5e-15 * (1.0 + std::abs(r.value));
  double dist = 1.0;
  if (z.real() < 0.5 && std::abs(z.imag()) < 0.5) {
    dist = std::abs(z - std::round(z.real()));
    if (dist < 1e-6) r.flags |= kNearPole;
  }
  return r;
}

EvalResultC gamma_ratio_abs_sq(double z, double mu) {
  // (GammaRel): Gamma(iz+mu+1/2)/Gamma(iz-mu+1/2) = pi |Gamma(iz-mu+1/2)|^{-2} / cos[pi(mu+iz)].
  cplx arg(0.5 - mu, z);
  double log_abs_sq = 2.0 * lgamma_c(arg).real();
  cplx cosf = std::cos(kPi * cplx(mu, z));
  EvalResultC r;
  r.value = kPi * std::exp(-log_abs_sq) / cosf;
  r.abs_err = 1e-14 * std::abs(r.value);
  return r;
}

cplx gamma_ratio_direct(double z, double mu) {
  return std::exp(lgamma_c(cplx(mu + 0.5, z)) - lgamma_c(cplx(0.5 - mu, z)));
}

double digamma(double x) { return gsl_sf_psi(x); }
double trigamma(double x) { return gsl_sf_psi_1(x); }

}  // namespace legsum::specfun
