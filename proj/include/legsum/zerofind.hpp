#pragma once

#include <vector>

#include "legsum/common.hpp"

namespace legsum::zerofind {

// One certified zero of P^mu_{iz-1/2}(u0) in the degree parameter.
struct Zero {
  int k = 0;             // 1-based index, ascending
  double z = 0.0;        // the zero
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;  // |P| at the refined point
  double dz_p = 0.0;      // dP/dz there (nonzero: zeros are simple)
};

enum class ZeroMethod { closed_form, bracketed_refined };

struct ZeroSet {
  ConicalPoint pt{0.0, 1.0, 0.0};
  std::vector<Zero> zeros;
  ZeroMethod method = ZeroMethod::bracketed_refined;
};

// Large-k estimate (pi k - pi mu/2 - pi/4) / eta.
double zero_estimate(const ConicalPoint& pt, int k);

// First k_max positive zeros.  mu <= 0 runs the bracketed engine (census of
// sign changes, then hybrid refinement); mu = 1/2 uses the closed form.
ZeroSet find_zeros(const ConicalPoint& pt, int k_max, double tol = 1e-13);

// Certification report per zero: both sides of the degree-derivative
// integration identity, their relative gap, and the simplicity check.
struct CertifyEntry {
  int k;
  double integral_side;   // int_1^{u0} P^2 dv by quadrature
  double derivative_side; // (u0^2-1)/(2 z_k) * dzP * duP
  double rel_gap;
  bool simple;            // dz_p bounded away from zero
};
std::vector<CertifyEntry> certify(const ZeroSet& zs, double quad_tol = 1e-9);

}  // namespace legsum::zerofind
