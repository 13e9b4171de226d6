#pragma once

#include "legsum/common.hpp"

namespace legsum::specfun {

// Principal-branch log-gamma (continuous, real on the positive real axis).
cplx lgamma_c(cplx z);

// Complex digamma psi(z), any z off the poles.
cplx digamma_c(cplx z);

// |Gamma(l + 1 + i x)|^2 = prod_{j=1..l} (j^2 + x^2) * pi x / sinh(pi x),
// evaluated without overflow; log form.
double log_abs_gamma_sq_int_ix(int l, double x);

// Operations named by the module contract.

// gamma_ln: principal log-gamma with error estimate.
EvalResultC gamma_ln(cplx z);

// Gamma(iz + mu + 1/2) / Gamma(iz - mu + 1/2), evaluated through
// pi |Gamma(iz - mu + 1/2)|^{-2} / cos[pi (mu + iz)].  Generally complex.
EvalResultC gamma_ratio_abs_sq(double z, double mu);

// Same ratio by direct log-gamma difference (used for cross-validation).
cplx gamma_ratio_direct(double z, double mu);

// Real digamma / trigamma (GSL-backed).
double digamma(double x);
double trigamma(double x);

}  // namespace legsum::specfun
