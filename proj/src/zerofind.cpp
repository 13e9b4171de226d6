#include "legsum/zerofind.hpp"

#include <algorithm>
#include <cmath>

#include "legsum/legendre.hpp"
#include "legsum/parallel.hpp"
#include "legsum/quad.hpp"
#include "legsum/rootfind.hpp"

namespace legsum::zerofind {

using specfun::legendre_p_conical_all;
using specfun::PEval;

double zero_estimate(const ConicalPoint& pt, int k) {
  if (k < 1) throw DomainError("zero_estimate: k must be >= 1");
  return (kPi * k - kPi * pt.mu / 2.0 - kPi / 4.0) / pt.eta;
}

namespace {

ZeroSet closed_form_half(const ConicalPoint& pt, int k_max) {
  // mu = 1/2: P ~ cos(z eta), zeros at z = pi (k - 1/2) / eta;
  // mu = -1/2 keeps the generic path (acceptance exercises it there).
  ZeroSet zs;
  zs.pt = pt;
  zs.method = ZeroMethod::closed_form;
  for (int k = 1; k <= k_max; ++k) {
    Zero z;
    z.k = k;
    z.z = kPi * (k - 0.5) / pt.eta;
    z.bracket_lo = z.z - 1e-12;
    z.bracket_hi = z.z + 1e-12;
    PEval pe = legendre_p_conical_all(pt.mu, z.z, pt.eta);
    z.residual = std::abs(pe.p);
    z.dz_p = pe.dp_dz;
    zs.zeros.push_back(z);
  }
  return zs;
}

}  // namespace

ZeroSet find_zeros(const ConicalPoint& pt, int k_max, double tol) {
  if (k_max < 1) throw DomainError("find_zeros: k_max must be >= 1");
  if (tol < 1e-13) tol = 1e-13;
  if (pt.mu > 0.0) {
    if (std::abs(pt.mu - 0.5) < 1e-14) return closed_form_half(pt, k_max);
    throw DomainError("find_zeros: unsupported order (mu <= 0 or mu = 1/2)");
  }

  auto pval = [&](double z) { return legendre_p_conical_all(pt.mu, z, pt.eta).p; };

  // Census: contiguous scan over the union of estimate windows; must find
  // exactly k_max sign changes (retry once at double resolution).
  const double pad = 0.45 * kPi / pt.eta;
  const double z_lo = std::max(0.25 * zero_estimate(pt, 1), zero_estimate(pt, 1) - pad);
  const double z_hi = zero_estimate(pt, k_max) + pad;
  std::vector<std::pair<double, double>> brackets;
  int steps_per_zero = 6;
  for (int attempt = 0; attempt < 2; ++attempt) {
    brackets.clear();
    const int n = k_max * steps_per_zero + 8;
    const double h = (z_hi - z_lo) / n;
    std::vector<double> vals(n + 1);
    par::for_each_index(n + 1, [&](int i) { vals[i] = pval(z_lo + i * h); });
    for (int i = 0; i < n; ++i) {
      if (vals[i] == 0.0) {
        brackets.emplace_back(z_lo + (i - 0.5) * h, z_lo + (i + 0.5) * h);
      } else if ((vals[i] < 0) != (vals[i + 1] < 0)) {
        brackets.emplace_back(z_lo + i * h, z_lo + (i + 1) * h);
      }
    }
    if (static_cast<int>(brackets.size()) == k_max) break;
    steps_per_zero *= 2;
    if (attempt == 1)
      throw DomainError("find_zeros: bracket failure (census count mismatch)");
  }

  ZeroSet zs;
  zs.pt = pt;
  zs.method = ZeroMethod::bracketed_refined;
  zs.zeros.resize(k_max);
  par::for_each_index(k_max, [&](int i) {
    auto [lo, hi] = brackets[i];
    double flo = pval(lo), fhi = pval(hi);
    RootResult rr = refine_root(pval, lo, hi, flo, fhi, tol);
    Zero z;
    z.k = i + 1;
    z.z = rr.x;
    z.bracket_lo = lo;
    z.bracket_hi = hi;
    PEval pe = legendre_p_conical_all(pt.mu, rr.x, pt.eta);
    z.residual = std::abs(pe.p);
    z.dz_p = pe.dp_dz;
    zs.zeros[i] = z;
  });
  return zs;
}

std::vector<CertifyEntry> certify(const ZeroSet& zs, double quad_tol) {
  std::vector<CertifyEntry> out(zs.zeros.size());
  const ConicalPoint& pt = zs.pt;
  par::for_each_index(static_cast<int>(zs.zeros.size()), [&](int i) {
    const Zero& z = zs.zeros[i];
    // integral side in eta: int_0^{eta0} P(cosh s)^2 sinh(s) ds
    quad::Integrand f{[&](double s) {
                        double p = legendre_p_conical_all(pt.mu, z.z, s).p;
                        return p * p * std::sinh(s);
                      },
                      {}, {}};
    EvalResult I = quad::integrate(f, 1e-12, pt.eta, quad_tol);
    PEval pe = legendre_p_conical_all(pt.mu, z.z, pt.eta);
    double du_p = pe.dp_deta / std::sinh(pt.eta);
    double rhs = (pt.u * pt.u - 1.0) / (2.0 * z.z) * pe.dp_dz * du_p;
    CertifyEntry e;
    e.k = z.k;
    e.integral_side = I.value;
    e.derivative_side = rhs;
    e.rel_gap = std::abs(I.value - rhs) / std::max(std::abs(rhs), 1e-300);
    e.simple = std::abs(pe.dp_dz) > 1e3 * pe.abs_err;
    out[i] = e;
  });
  return out;
}

}  // namespace legsum::zerofind
