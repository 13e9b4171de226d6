#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace legsum {

struct RootResult {
  double x;
  double fx;
  int evals;
};

// Bracketed secant/bisection hybrid: derivative-free, never leaves [lo, hi].
// Stops when the bracket or step is below xtol.
inline RootResult refine_root(const std::function<double(double)>& f, double lo, double hi,
                              double flo, double fhi, double xtol, int max_iter = 200) {
  if (!(flo == 0.0 || fhi == 0.0 || (flo < 0) != (fhi < 0)))
    throw std::runtime_error("refine_root: endpoints do not bracket a sign change");
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  double a = lo, b = hi, fa = flo, fb = fhi;
  int evals = 0;
  double x = 0.5 * (a + b), fx = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    double xs = b - fb * (b - a) / (fb - fa);  // secant
    double pad = 0.01 * (b - a);
    if (!(xs > a + pad && xs < b - pad)) xs = 0.5 * (a + b);
    x = xs;
    fx = f(x);
    ++evals;
    if (fx == 0.0) break;
    if ((fx < 0) == (fa < 0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
    if (b - a <= xtol) {
      x = 0.5 * (a + b);
      fx = f(x);
      ++evals;
      break;
    }
  }
  return {x, fx, evals};
}

}  // namespace legsum
