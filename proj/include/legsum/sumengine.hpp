#pragma once

#include <map>
#include <string>
#include <vector>

#include "legsum/common.hpp"
#include "legsum/zerofind.hpp"

namespace legsum::sumengine {

// Built-in catalog of summand families h(z) (and their H(z) forms for the
// half-integer-order engine).  Each family knows its own analytic
// continuation to the imaginary axis and its pole registry, so the engine
// never continues numerically.
enum class CatalogId {
  rational_cos,      // H = z^{2n} cos(alpha z) / (z^2 + c^2)^{m+1}
  bessel_product,    // H = z^{2n-nu} J_nu(a z) J_alpha(b sqrt(z^2+c^2)) / (z^2+c^2)^{alpha/2}
  exp_decay,         // h = e^{-q z} or e^{-q z}/(z - x0)  (x0 > 0 optional real pole)
  user_series_of_P,  // h = e^{-q z} P^mu_{iz-1/2}(u)  (identity kernel; lhs = 0)
  physics_wightman,  // h from the radial mode sum (admissibility metadata)
  odd_rational,      // H = z / ((z^2 + c1^2)(z^2 + c2^2))  (delta = 0 class)
};

struct Pole {
  cplx location;  // open right half-plane, imaginary axis, or origin
  cplx residue;   // residue of h (general engine) or of H (half-integer engine)
};

struct TestFunction {
  CatalogId id;
  std::map<std::string, double> params;

  // filled by make_catalog(): kernel class and growth metadata
  int delta = 1;          // 1: h = H/sinh(pi z); 0: h = H/cosh(pi z)
  int l = 0;              // order mu = -l - delta/2
  double c_growth = 0.0;  // |h| < eps(x) e^{c eta y} envelope exponent (units of eta)
  bool decays_on_axis = true;
  std::vector<Pole> h_poles;  // poles of h (x0 real for exp_decay)
  std::vector<Pole> H_poles;  // poles of H on the upper imaginary axis
};

// Construct a catalog member and populate metadata for the given point.
TestFunction make_catalog(CatalogId id, const std::map<std::string, double>& params,
                          const ConicalPoint& pt);

// T_mu(z, u) = Q^mu_{iz-1/2}(u) cos[pi(mu+iz)] / dz P^mu_{iz-1/2}(u);
// cross-checked against the Wronskian |Gamma|^{-2} form, whose gap feeds abs_err.
EvalResultC t_factor(const ConicalPoint& pt, double z_k);

struct AdmissibilityReport {
  bool growth_ok = true;        // c_growth < 2
  bool axis_decay_ok = true;    // eps(x) e^{pi x} -> 0 declared
  double worst_ray_ratio = 0.0; // max |h| / envelope over sampled rays
  std::vector<std::string> warnings;
};
AdmissibilityReport admissibility_check(const TestFunction& tf, const ConicalPoint& pt);

struct SumComponents {
  cplx first_integral{};   // (e^{i mu pi}/2) p.v. int sinh(pi x) h(x) dx
  cplx residues{};         // -r[h]
  cplx axis_integral{};    // -(1/2pi) int (Q/P) cos[pi(mu+x)] [h(ix)+h(-ix)] dx
  cplx imag_poles{};       // residue extension at 0, i y_k
  double abs_err = 0.0;
  unsigned flags = kConverged;
  cplx total() const { return first_integral + residues + axis_integral + imag_poles; }
};

struct SumVerdict {
  cplx lhs{};
  SumComponents rhs;
  double tail_bound = 0.0;
  double residual = 0.0;
  bool pass = false;
};

// Sum over certified zeros with the family tail model appended.
EvalResultC lhs_sum(const TestFunction& tf, const zerofind::ZeroSet& zs, double* tail_bound);

// Right-hand side of the summation formula, component by component.
SumComponents rhs_eval(const TestFunction& tf, const ConicalPoint& pt, double tol);

// Full verification of the summation formula for one catalog member.
SumVerdict verify_sum(const TestFunction& tf, const ConicalPoint& pt, int k_max, double tol);

// Half-integer-order form (orders mu = -l - delta/2, weight tanh^{1-delta}).
SumVerdict verify_sum_half_integer(int delta, int l, const TestFunction& H,
                                   const ConicalPoint& pt, int k_max, double tol);

// Abel-Plana reductions.  F families: "rational" (1/(x^2+a^2)) and "exp" (e^{-s x}).
enum class ApVariant { integer, half_integer };
struct ApResult {
  double lhs_direct;   // accelerated partial sums
  double rhs;          // Abel-Plana right side (with pole extension terms)
  double abs_err;
};
ApResult abel_plana(ApVariant variant, const std::string& f_family, double param, double tol);

// Summation over the zeros of J_mu for even rational f with simple
// imaginary poles.
SumVerdict sum_bessel_zeros(const TestFunction& f, double mu, int k_max, double tol);

}  // namespace legsum::sumengine
