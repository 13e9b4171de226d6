#include "legsum/legendre.hpp"

#include <algorithm>
#include <cmath>

#include "legsum/gammafn.hpp"

namespace legsum::specfun {

namespace {

constexpr double kEtaStar = 1.2;          // direct/Q crossover in eta
constexpr double kCancelBudget = 4.5;     // z*sinh(eta/2) budget on the direct path
constexpr int kMaxTerms = 200000;

bool direct_path_ok(double zmag, double eta) {
  double s = std::sinh(0.5 * eta);
  return s * s < 0.99 && zmag * s < kCancelBudget;
}

cplx phase_mu(double mu) { return cplx(std::cos(kPi * mu), std::sin(kPi * mu)); }

// ---------------------------------------------------------------------
// Q^mu_{zeta-1/2}(cosh eta).
//
// Half-integer orders mu = -l-1/2 (l >= -1) terminate: the gamma ratio is
// the finite product 1/prod_{j=0..l}(zeta-j) and F(-l, l+1; 1+zeta; x2) is a
// polynomial, so the result is exact for every eta > 0.  Generic orders use
// the e^{-2 eta} series for small eta and the 1/(1-e^{2 eta}) one otherwise.
// ---------------------------------------------------------------------

QEval q_half_integer(int l, double mu, cplx zeta, double eta, bool want_dzeta, bool want_deta) {
  QEval out;
  const double sh = std::sinh(eta);
  const double x2 = 1.0 / (1.0 - std::exp(2.0 * eta));

  cplx ratio(1.0, 0.0), dlog_ratio(0.0, 0.0);
  double pole_dist = 1e300;
  for (int j = 0; j <= l; ++j) {
    cplx f = zeta - static_cast<double>(j);
    pole_dist = std::min(pole_dist, std::abs(f));
    ratio /= f;
    dlog_ratio -= 1.0 / f;
  }
  if (pole_dist < 1e-10) out.flags |= kNearPole;

  // F(-l, l+1; 1+zeta; x2) and its zeta/eta derivatives, term by term.
  cplx F(1.0, 0.0), dF_dzeta(0.0, 0.0), sum_jt(0.0, 0.0);
  cplx t(1.0, 0.0), harm(0.0, 0.0);
  for (int j = 0; j < std::max(l, 0); ++j) {
    cplx cj = 1.0 + zeta + static_cast<double>(j);
    t *= (static_cast<double>(-l + j)) * (static_cast<double>(l + 1 + j)) * x2 /
         (cj * (1.0 + j));
    harm -= 1.0 / cj;
    F += t;
    dF_dzeta += t * harm;
    sum_jt += t * static_cast<double>(j + 1);
  }

  const cplx pref = std::sqrt(kPi) * phase_mu(mu) * ratio * std::exp(-zeta * eta) /
                    std::sqrt(2.0 * sh);
  out.q = pref * F;
  out.abs_err = 4e-16 * std::abs(out.q) * (l + 2);
  if (want_dzeta) {
    out.dq_dzeta = out.q * (dlog_ratio - eta) + pref * dF_dzeta;
  }
  if (want_deta) {
    // d/deta of the prefactor: -zeta - coth(eta)/2; of F: via dx2/deta.
    double dx2 = 2.0 * std::exp(2.0 * eta) * x2 * x2;
    cplx dF_deta = (x2 != 0.0) ? sum_jt / x2 * dx2 : cplx(0.0, 0.0);
    out.dq_deta = out.q * (-zeta - 0.5 / std::tanh(eta)) + pref * dF_deta;
  }
  return out;
}

QEval q_generic(double mu, cplx zeta, double eta, bool want_dzeta, bool want_deta) {
  QEval out;
  const bool form1 = eta < 0.45;
  const double sh = std::sinh(eta);
  const double w = form1 ? std::exp(-2.0 * eta) : 1.0 / (1.0 - std::exp(2.0 * eta));

  const cplx b0 = form1 ? cplx(0.5 + mu) + zeta : cplx(0.5 - mu, 0.0);
  const cplx a0(0.5 + mu, 0.0);
  const cplx c0 = 1.0 + zeta;

  // gamma ratio Gamma(1/2+zeta+mu)/Gamma(1+zeta)
  cplx g_top(0.5 + mu, 0.0);
  g_top += zeta;
  if (std::abs(g_top.imag()) < 1e-12) {
    double r = std::round(g_top.real());
    if (r <= 0.25 && std::abs(g_top.real() - r) < 1e-10) out.flags |= kNearPole;
  }
  const cplx lg_ratio = lgamma_c(g_top) - lgamma_c(c0);
  const cplx ratio = std::exp(lg_ratio);

  cplx F(1.0, 0.0), dF_dzeta(0.0, 0.0), sum_jt(0.0, 0.0);
  cplx t(1.0, 0.0), harm(0.0, 0.0);
  double peak = 1.0;
  int j = 0;
  for (; j < kMaxTerms; ++j) {
    cplx aj = a0 + static_cast<double>(j);
    cplx bj = b0 + static_cast<double>(j);
    cplx cj = c0 + static_cast<double>(j);
    t *= aj * bj * w / (cj * (1.0 + j));
    if (form1) {
      harm += 1.0 / bj - 1.0 / cj;  // b depends on zeta in form 1
    } else {
      harm -= 1.0 / cj;
    }
    F += t;
    dF_dzeta += t * harm;
    sum_jt += t * static_cast<double>(j + 1);
    double at = std::abs(t);
    peak = std::max(peak, at);
    if (at <= 1e-17 * std::abs(F) && j > 3) break;
  }
  if (j >= kMaxTerms) out.flags |= kSlowConvergence;

  cplx pref;
  cplx dlog_pref_eta;
  if (form1) {
    pref = std::sqrt(kPi) * phase_mu(mu) * ratio * std::pow(1.0 - w, mu) *
           std::exp(-(zeta + 0.5) * eta);
    dlog_pref_eta = cplx(mu * 2.0 * w / (1.0 - w), 0.0) - (zeta + 0.5);
  } else {
    pref = std::sqrt(kPi) * phase_mu(mu) * ratio * std::exp(-zeta * eta) / std::sqrt(2.0 * sh);
    dlog_pref_eta = -zeta - cplx(0.5 / std::tanh(eta), 0.0);
  }
  out.q = pref * F;
  out.abs_err = std::abs(pref) * (peak * 4e-16 + std::abs(t) / std::max(0.05, 1.0 - std::abs(w)));
  if (want_dzeta) {
    cplx dlog_pref_zeta = digamma_c(g_top) - digamma_c(c0) - eta;
    out.dq_dzeta = out.q * dlog_pref_zeta + pref * dF_dzeta;
  }
  if (want_deta) {
    double dw = form1 ? -2.0 * w : 2.0 * std::exp(2.0 * eta) * w * w;
    cplx dF_deta = (w != 0.0) ? sum_jt / w * dw : cplx(0.0, 0.0);
    out.dq_deta = out.q * dlog_pref_eta + pref * dF_deta;
  }
  return out;
}

// ---------------------------------------------------------------------
// Direct hypergeometric path for P^mu_{iz-1/2}(cosh eta), real arithmetic.
// Coefficients are products of ((j+1/2)^2 + z^2), so the z-derivative comes
// from the running sum of 2z/((j+1/2)^2+z^2).
// ---------------------------------------------------------------------

PEval p_direct(double mu, double z, double eta) {
  PEval out;
  out.path = SeriesPath::direct_hypergeometric;
  const double sh2 = std::sinh(0.5 * eta);
  const double w = -sh2 * sh2;
  const double pref = std::pow(1.0 / std::tanh(0.5 * eta), mu) / std::tgamma(1.0 - mu);

  double F = 1.0, dFz = 0.0, sum_jt = 0.0;
  double t = 1.0, Sz = 0.0;
  double peak = 1.0;
  int j = 0;
  for (; j < kMaxTerms; ++j) {
    double num = (j + 0.5) * (j + 0.5) + z * z;
    t *= num * w / ((j + 1.0 - mu) * (j + 1.0));
    Sz += 2.0 * z / num;
    F += t;
    dFz += t * Sz;
    sum_jt += t * (j + 1.0);
    double at = std::abs(t);
    peak = std::max(peak, at);
    if (at <= 1e-17 * std::max(1e-300, std::abs(F)) && j > 3) break;
  }
  if (j >= kMaxTerms) out.flags |= kSlowConvergence;

  out.p = pref * F;
  out.dp_dz = pref * dFz;
  // d/deta: pref' / pref = -mu / sinh(eta);  F' via dw/deta = -sinh(eta)/2.
  double dF_deta = (w != 0.0) ? sum_jt / w * (-0.5 * std::sinh(eta)) : 0.0;
  out.dp_deta = out.p * (-mu / std::sinh(eta)) + pref * dF_deta;
  out.abs_err = std::abs(pref) * peak * 4e-16 * std::sqrt(j + 1.0);
  if (peak > 1e10 * std::max(1e-300, std::abs(F))) out.flags |= kOverflowRisk;
  return out;
}

// Q-based path: P = (2/pi) Re[(sin(pi mu) - i cos(pi mu) coth(pi z)) e^{i mu pi} conj(Q(iz))].
PEval p_qbased(double mu, double z, double eta) {
  PEval out;
  out.path = SeriesPath::q_based_via_reflection;
  const double smu = std::sin(kPi * mu);
  const double cmu = std::cos(kPi * mu);
  const cplx ph = phase_mu(mu);

  QEval qe = legendre_q_deg(mu, cplx(0.0, z), eta, true, true);
  out.flags |= qe.flags;
  const cplx G = ph * std::conj(qe.q);
  const cplx dG_dz = ph * std::conj(qe.dq_dzeta * cplx(0.0, 1.0));
  const cplx dG_deta = ph * std::conj(qe.dq_deta);

  if (z == 0.0) {
    // coth(pi z) Im G -> Im(dG/dz)(0) / pi; P is even so dP/dz = 0.
    out.p = (2.0 / kPi) * (smu * G.real() + cmu * dG_dz.imag() / kPi);
    out.dp_dz = 0.0;
    out.dp_deta = (2.0 / kPi) * (smu * dG_deta.real() + cmu * 0.0);
    out.abs_err = 4.0 * qe.abs_err;
    if (cmu != 0.0) out.flags |= kNearPole;
    return out;
  }

  const double cth = 1.0 / std::tanh(kPi * z);
  out.p = (2.0 / kPi) * (smu * G.real() + cmu * cth * G.imag());
  // A'(z) = i pi cmu / sinh^2(pi z); P' = (2/pi) Re[A' G + A dG/dz]
  const double sh = std::sinh(kPi * z);
  const cplx A(smu, -cmu * cth);
  const cplx Ap(0.0, kPi * cmu / (sh * sh));
  out.dp_dz = (2.0 / kPi) * (Ap * G + A * dG_dz).real();
  out.dp_deta = (2.0 / kPi) * (A * dG_deta).real();
  out.abs_err = (2.0 / kPi) * (qe.abs_err + std::abs(qe.q) * 1e-15) *
                (std::abs(smu) + std::abs(cmu) * std::max(1.0, std::abs(cth)));
  return out;
}

}  // namespace

double crossover_eta() { return kEtaStar; }

QEval legendre_q_deg(double mu, cplx zeta, double eta, bool want_dzeta, bool want_deta) {
  if (!(eta > 0.0)) throw DomainError("legendre_q_deg: eta must be > 0");
  int l = 0;
  if (is_half_integer_order(mu, &l)) return q_half_integer(l, mu, zeta, eta, want_dzeta, want_deta);
  return q_generic(mu, zeta, eta, want_dzeta, want_deta);
}

PEval legendre_p_conical_all(double mu, double z, double eta, PathChoice pc) {
  if (!(eta > 0.0)) throw DomainError("legendre_p_conical_all: eta must be > 0");
  const double az = std::abs(z);
  bool use_direct;
  switch (pc) {
    case PathChoice::force_direct:
      if (std::sinh(0.5 * eta) * std::sinh(0.5 * eta) >= 1.0)
        throw DomainError("direct path diverges for sinh^2(eta/2) >= 1");
      use_direct = true;
      break;
    case PathChoice::force_qbased:
      use_direct = false;
      break;
    default:
      if (eta < kEtaStar) {
        use_direct = direct_path_ok(az, eta);
      } else {
        use_direct = (az < 0.02 && std::cos(kPi * mu) != 0.0 && direct_path_ok(az, eta));
      }
  }
  PEval pe = use_direct ? p_direct(mu, az, eta) : p_qbased(mu, az, eta);
  if (z < 0.0) pe.dp_dz = -pe.dp_dz;  // P is even in z
  return pe;
}

EvalResult legendre_p_conical(const ConicalPoint& pt, double z) {
  PEval pe = legendre_p_conical_all(pt.mu, z, pt.eta);
  return {pe.p, pe.abs_err, pe.flags};
}

EvalResult dz_legendre_p_conical(const ConicalPoint& pt, double z) {
  PEval pe = legendre_p_conical_all(pt.mu, z, pt.eta);
  return {pe.dp_dz, pe.abs_err * std::max(1.0, std::abs(z)), pe.flags};
}

EvalResult du_legendre_p_conical(const ConicalPoint& pt, double z) {
  PEval pe = legendre_p_conical_all(pt.mu, z, pt.eta);
  double sh = std::sinh(pt.eta);
  return {pe.dp_deta / sh, pe.abs_err / sh, pe.flags};
}

EvalResult legendre_p_real_degree(const ConicalPoint& pt, double x) {
  if (x < 0.0) throw DomainError("legendre_p_real_degree: x must be >= 0");
  LogScaled ls = legendre_p_real_log(pt.mu, x, pt.eta);
  EvalResult r;
  if (ls.log_abs > 700.0) {
    r.value = ls.sign * std::numeric_limits<double>::infinity();
    r.flags = kOverflowRisk;
    return r;
  }
  r.value = ls.value();
  r.abs_err = std::abs(r.value) * 5e-15;
  return r;
}

EvalResultC legendre_q_real_degree(const ConicalPoint& pt, double x) {
  if (x < 0.0) throw DomainError("legendre_q_real_degree: x must be >= 0");
  QEval qe = legendre_q_deg(pt.mu, cplx(x, 0.0), pt.eta);
  return {qe.q, qe.abs_err, qe.flags};
}

EvalResultC legendre_q_conical(const ConicalPoint& pt, double z, int branch) {
  QEval qe = legendre_q_deg(pt.mu, cplx(0.0, branch >= 0 ? z : -z), pt.eta);
  return {qe.q, qe.abs_err, qe.flags};
}

EvalResult legendre_q_real_stripped(const ConicalPoint& pt, double x) {
  QEval qe = legendre_q_deg(pt.mu, cplx(x, 0.0), pt.eta);
  cplx v = qe.q / phase_mu(pt.mu);
  EvalResult r{v.real(), qe.abs_err + std::abs(v.imag()), qe.flags};
  return r;
}

EvalResultC legendre_p_conical_c(const ConicalPoint& pt, cplx z) {
  if (std::abs(z.imag()) < 1e-14) {
    PEval pe = legendre_p_conical_all(pt.mu, z.real(), pt.eta);
    return {cplx(pe.p, 0.0), pe.abs_err, pe.flags};
  }
  if (std::abs(z.real()) < 1e-14) {
    // degree i(iy)-1/2 = -y-1/2 and P^mu_nu = P^mu_{-nu-1}
    LogScaled ls = legendre_p_real_log(pt.mu, std::abs(z.imag()), pt.eta);
    return {cplx(ls.value(), 0.0), std::abs(ls.value()) * 5e-15, kConverged};
  }
  const double mu = pt.mu, eta = pt.eta;
  if (direct_path_ok(std::abs(z), eta)) {
    // complex version of the direct series
    const double sh2 = std::sinh(0.5 * eta);
    const double w = -sh2 * sh2;
    const double pref = std::pow(1.0 / std::tanh(0.5 * eta), mu) / std::tgamma(1.0 - mu);
    cplx F(1.0, 0.0), t(1.0, 0.0);
    double peak = 1.0;
    for (int j = 0; j < kMaxTerms; ++j) {
      cplx num = cplx((j + 0.5) * (j + 0.5), 0.0) + z * z;
      t *= num * w / ((j + 1.0 - mu) * (j + 1.0));
      F += t;
      peak = std::max(peak, std::abs(t));
      if (std::abs(t) <= 1e-17 * std::abs(F) && j > 3) break;
    }
    return {pref * F, std::abs(pref) * peak * 4e-16, kConverged};
  }
  // general complex combination through Q^mu_{+iz-1/2} and Q^mu_{-iz-1/2}
  const double smu = std::sin(kPi * mu), cmu = std::cos(kPi * mu);
  QEval qp = legendre_q_deg(mu, cplx(0.0, 1.0) * z, eta);
  QEval qm = legendre_q_deg(mu, cplx(0.0, -1.0) * z, eta);
  cplx C = 1.0 / std::tanh(kPi * z);
  cplx Am = cplx(smu, 0.0) - cplx(0.0, cmu) * C;
  cplx Ap = cplx(smu, 0.0) + cplx(0.0, cmu) * C;
  cplx val = (Am * qm.q + Ap * qp.q) / (kPi * phase_mu(mu));
  return {val, (qp.abs_err + qm.abs_err) * (1.0 + std::abs(C)), qp.flags | qm.flags};
}

LogScaled legendre_p_real_log(double mu, double x, double eta) {
  if (!(eta > 0.0) || x < 0.0) throw DomainError("legendre_p_real_log: bad arguments");
  const double th = std::tanh(0.5 * eta);
  const double t2 = th * th;
  // positive-term series F(1/2+x, 1/2+x-mu; 1-mu; tanh^2(eta/2))
  double F = 1.0, term = 1.0;
  double log_scale = 0.0;
  int j = 0;
  for (; j < kMaxTerms; ++j) {
    term *= (0.5 + x + j) * (0.5 + x - mu + j) * t2 / ((1.0 - mu + j) * (1.0 + j));
    F += term;
    if (F > 1e270) {
      F *= 1e-270;
      term *= 1e-270;
      log_scale += 270.0 * 2.302585092994045684;
    }
    if (term <= 1e-17 * F && j > 2) break;
  }
  LogScaled out;
  out.sign = 1;
  out.log_abs = mu * std::log(1.0 / th) - (2.0 * x + 1.0) * std::log(std::cosh(0.5 * eta)) -
                std::lgamma(1.0 - mu) + std::log(F) + log_scale;
  return out;
}

LogScaled weighted_q_phys_log(int l, double x, double eta) {
  // sqrt(pi) * prod_{t=1..l}(x+t) * e^{-x eta} * F(-l, l+1; 1+x; x2) / sqrt(2 sinh eta),
  // with x2 = 1/(1-e^{2 eta}); every factor positive.
  const double x2 = 1.0 / (1.0 - std::exp(2.0 * eta));
  double F = 1.0, t = 1.0;
  for (int j = 0; j < l; ++j) {
    t *= (static_cast<double>(-l + j)) * (static_cast<double>(l + 1 + j)) * x2 /
         ((1.0 + x + j) * (1.0 + j));
    F += t;
  }
  LogScaled out;
  out.sign = F > 0 ? 1 : -1;
  double logprod = 0.0;
  for (int j = 1; j <= l; ++j) logprod += std::log(x + j);
  out.log_abs = 0.5 * std::log(kPi) + logprod - x * eta + std::log(std::abs(F)) -
                0.5 * std::log(2.0 * std::sinh(eta));
  return out;
}

}  // namespace legsum::specfun
