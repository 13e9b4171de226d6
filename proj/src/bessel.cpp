#include "legsum/bessel.hpp"

#include <gsl/gsl_sf_bessel.h>

#include <cmath>

#include "legsum/rootfind.hpp"

namespace legsum::specfun {

namespace {

double gsl_or_throw(int status, const gsl_sf_result& r, const char* what) {
  if (status != 0) throw DomainError(std::string("bessel: ") + what);
  return r.val;
}

}  // namespace

double bessel_j(double nu, double x) {
  gsl_sf_result r;
  int st = gsl_sf_bessel_Jnu_e(nu, x, &r);
  return gsl_or_throw(st, r, "Jnu");
}

double bessel_y(double nu, double x) {
  gsl_sf_result r;
  int st = gsl_sf_bessel_Ynu_e(nu, x, &r);
  return gsl_or_throw(st, r, "Ynu");
}

double bessel_i(double nu, double x) {
  gsl_sf_result r;
  int st = gsl_sf_bessel_Inu_e(nu, x, &r);
  return gsl_or_throw(st, r, "Inu");
}

double bessel_k(double nu, double x) {
  gsl_sf_result r;
  int st = gsl_sf_bessel_Knu_e(nu, x, &r);
  return gsl_or_throw(st, r, "Knu");
}

double bessel_i_log(double nu, double x) {
  gsl_sf_result r;
  int st = gsl_sf_bessel_Inu_scaled_e(nu, x, &r);
  gsl_or_throw(st, r, "Inu_scaled");
  return std::log(r.val) + x;
}

double bessel_k_log(double nu, double x) {
  gsl_sf_result r;
  int st = gsl_sf_bessel_lnKnu_e(nu, x, &r);
  return gsl_or_throw(st, r, "lnKnu");
}

double bessel_j_prime(double nu, double x) {
  // J'_nu = J_{nu-1} - (nu/x) J_nu  (DLMF 10.6.2)
  if (nu >= 1.0) return bessel_j(nu - 1.0, x) - nu / x * bessel_j(nu, x);
  return nu / x * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

EvalResultC bessel(BesselKind kind, double nu, double x) {
  if (nu < 0.0) throw DomainError("bessel: nu must be >= 0");
  bool needs_positive = kind == BesselKind::Y || kind == BesselKind::K ||
                        kind == BesselKind::H1 || kind == BesselKind::H2;
  if (needs_positive ? !(x > 0.0) : x < 0.0) throw DomainError("bessel: x outside domain");
  EvalResultC out;
  gsl_sf_result r;
  int st = 0;
  switch (kind) {
    case BesselKind::J:
      if (x == 0.0) {
        out.value = (nu == 0.0) ? 1.0 : 0.0;
        return out;
      }
      st = gsl_sf_bessel_Jnu_e(nu, x, &r);
      out.value = gsl_or_throw(st, r, "Jnu");
      break;
    case BesselKind::Y:
      st = gsl_sf_bessel_Ynu_e(nu, x, &r);
      out.value = gsl_or_throw(st, r, "Ynu");
      break;
    case BesselKind::I:
      if (x == 0.0) {
        out.value = (nu == 0.0) ? 1.0 : 0.0;
        return out;
      }
      st = gsl_sf_bessel_Inu_e(nu, x, &r);
      out.value = gsl_or_throw(st, r, "Inu");
      break;
    case BesselKind::K:
      st = gsl_sf_bessel_Knu_e(nu, x, &r);
      out.value = gsl_or_throw(st, r, "Knu");
      break;
    case BesselKind::H1:
      out.value = cplx(bessel_j(nu, x), bessel_y(nu, x));
      break;
    case BesselKind::H2:
      out.value = cplx(bessel_j(nu, x), -bessel_y(nu, x));
      break;
  }
  out.abs_err = 2e-15 * std::abs(out.value) + (st ? 0.0 : r.err);
  return out;
}

std::vector<double> bessel_j_zeros(double mu, int n, double tol) {
  std::vector<double> zeros;
  zeros.reserve(n);
  auto f = [mu](double x) { return bessel_j(mu, x); };
  for (int k = 1; k <= n; ++k) {
    // McMahon: j_{mu,k} ~ beta - (4 mu^2 - 1)/(8 beta)
    double beta = (k + 0.5 * mu - 0.25) * kPi;
    double est = beta - (4.0 * mu * mu - 1.0) / (8.0 * beta);
    double half = 0.45 * kPi;
    double lo = std::max(est - half, zeros.empty() ? 0.1 * est : zeros.back() + 1e-8);
    double hi = est + half;
    double flo = f(lo), fhi = f(hi);
    int widen = 0;
    while ((flo < 0) == (fhi < 0) && widen < 3) {
      lo = std::max(lo - 0.2, zeros.empty() ? 1e-8 : zeros.back() + 1e-8);
      hi += 0.2;
      flo = f(lo);
      fhi = f(hi);
      ++widen;
    }
    RootResult rr = refine_root(f, lo, hi, flo, fhi, tol);
    zeros.push_back(rr.x);
  }
  return zeros;
}

}  // namespace legsum::specfun
