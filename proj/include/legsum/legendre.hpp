#pragma once

#include "legsum/common.hpp"

namespace legsum::specfun {

// eta crossover between the direct hypergeometric path and the Q-based path.
double crossover_eta();

enum class PathChoice { automatic, force_direct, force_qbased };

// Q^mu_{zeta-1/2}(cosh eta) for complex degree parameter zeta
// (zeta = x gives real degree, zeta = i z the conical function).
// Optional derivatives with respect to zeta and eta.
struct QEval {
  cplx q{};
  cplx dq_dzeta{};
  cplx dq_deta{};
  double abs_err = 0.0;
  unsigned flags = kConverged;
};
QEval legendre_q_deg(double mu, cplx zeta, double eta, bool want_dzeta = false,
                     bool want_deta = false);

// Bundle of P^mu_{iz-1/2}(u) and its z- and eta-derivatives from one pass.
struct PEval {
  double p = 0.0;
  double dp_dz = 0.0;
  double dp_deta = 0.0;
  double abs_err = 0.0;
  unsigned flags = kConverged;
  SeriesPath path = SeriesPath::direct_hypergeometric;
};
PEval legendre_p_conical_all(double mu, double z, double eta,
                             PathChoice pc = PathChoice::automatic);

// Spec operations -------------------------------------------------------

EvalResult legendre_p_conical(const ConicalPoint& pt, double z);
EvalResult legendre_p_real_degree(const ConicalPoint& pt, double x);
EvalResultC legendre_q_real_degree(const ConicalPoint& pt, double x);
EvalResultC legendre_q_conical(const ConicalPoint& pt, double z, int branch);
EvalResult dz_legendre_p_conical(const ConicalPoint& pt, double z);
EvalResult du_legendre_p_conical(const ConicalPoint& pt, double z);

// Engine helpers --------------------------------------------------------

// P^mu_{iz-1/2}(u) for complex z (degree-parameter poles live off the real
// axis).  Pure-imaginary z reduces to the real-degree function.
EvalResultC legendre_p_conical_c(const ConicalPoint& pt, cplx z);

// Real, phase-stripped e^{-i mu pi} Q^mu_{x-1/2}(u).
EvalResult legendre_q_real_stripped(const ConicalPoint& pt, double x);

// log-scaled P^mu_{x-1/2}(cosh eta), valid for mu <= 1/2, x >= 0.
LogScaled legendre_p_real_log(double mu, double x, double eta);

// log-scaled  Gamma(x+l+1)/Gamma(x-l) * e^{-i mu pi} Q^{-l-1/2}_{x-1/2}(cosh eta),
// the combination entering the radial physics kernels; stable for all x >= 0.
LogScaled weighted_q_phys_log(int l, double x, double eta);

}  // namespace legsum::specfun
