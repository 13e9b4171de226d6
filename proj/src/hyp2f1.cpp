#include "legsum/hyp2f1.hpp"

#include <cmath>

namespace legsum::specfun {

namespace {

bool nonpositive_integer(cplx v, double* dist = nullptr) {
  if (std::abs(v.imag()) > 1e-13) return false;
  double r = std::round(v.real());
  if (r > 0.25) return false;
  double d = std::abs(v.real() - r);
  if (dist) *dist = d;
  return d < 1e-12;
}

int terminating_index(cplx a, cplx b) {
  // (a)_j or (b)_j vanishes beyond j = -a (or -b) for non-positive integers.
  int n = -1;
  if (nonpositive_integer(a)) n = static_cast<int>(-std::round(a.real()));
  if (nonpositive_integer(b)) {
    int m = static_cast<int>(-std::round(b.real()));
    n = (n < 0) ? m : std::min(n, m);
  }
  return n;
}

}  // namespace

EvalResultC hyp2f1(cplx a, cplx b, cplx c, cplx w) {
  EvalResultC r;
  int nterm = terminating_index(a, b);
  if (nonpositive_integer(c)) {
    // Fine only if the numerator terminates first.
    int nc = static_cast<int>(-std::round(c.real()));
    if (nterm < 0 || nterm > nc) throw DomainError("hyp2f1: c is a non-positive integer");
  }
  if (w == cplx(0.0, 0.0)) {
    r.value = 1.0;
    return r;
  }

  const double aw = std::abs(w);
  cplx term(1.0, 0.0), sum(1.0, 0.0);
  double peak = 1.0;
  const int jmax = nterm >= 0 ? nterm : 40000;
  double tail = 0.0;
  int j = 0;
  for (; j < jmax; ++j) {
    term *= (a + static_cast<double>(j)) * (b + static_cast<double>(j)) * w /
            ((c + static_cast<double>(j)) * (1.0 + j));
    sum += term;
    double at = std::abs(term);
    peak = std::max(peak, at);
    if (nterm < 0 && at <= 1e-17 * std::abs(sum) && j > 4) {
      // Geometric tail estimate from the current term ratio.
      double ratio = std::min(0.999, aw * (1.0 + (std::abs(a) + std::abs(b)) / (j + 1.0)));
      tail = at * ratio / (1.0 - ratio);
      break;
    }
  }
  r.value = sum;
  r.abs_err = tail + peak * 4e-16;
  if (nterm < 0 && j >= jmax) {
    r.flags |= kSlowConvergence;
    r.abs_err += std::abs(term) / std::max(1e-30, 1.0 - aw);
  }
  if (peak > 1e12 * std::max(1e-300, std::abs(sum))) r.flags |= kOverflowRisk;
  return r;
}

}  // namespace legsum::specfun
