#pragma once

#include <vector>

#include "legsum/common.hpp"

namespace legsum::specfun {

enum class BesselKind { J, Y, I, K, H1, H2 };

// Standard Bessel family for real order nu >= 0.
EvalResultC bessel(BesselKind kind, double nu, double x);

// Convenience real accessors.
double bessel_j(double nu, double x);
double bessel_y(double nu, double x);
double bessel_i(double nu, double x);
double bessel_k(double nu, double x);
double bessel_j_prime(double nu, double x);

// log of I_nu(x) and K_nu(x) (both positive), overflow-safe.
double bessel_i_log(double nu, double x);
double bessel_k_log(double nu, double x);

// First n positive zeros of J_mu, bracketed from the McMahon estimates and
// refined with the shared root engine.
std::vector<double> bessel_j_zeros(double mu, int n, double tol = 1e-13);

}  // namespace legsum::specfun
