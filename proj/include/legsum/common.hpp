#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace legsum {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Status flags carried by every numeric result. Bits can combine.
enum Flag : unsigned {
  kConverged = 0u,
  kSlowConvergence = 1u << 0,
  kNearPole = 1u << 1,
  kOverflowRisk = 1u << 2,
  kNearBoundaryDivergence = 1u << 3,
};

// A real value with an absolute-error estimate and status flags.
struct EvalResult {
  double value = 0.0;
  double abs_err = 0.0;
  unsigned flags = kConverged;

  bool converged() const { return flags == kConverged; }
};

// Complex-valued variant.
struct EvalResultC {
  cplx value{0.0, 0.0};
  double abs_err = 0.0;
  unsigned flags = kConverged;

  bool converged() const { return flags == kConverged; }
};

// Which evaluation route produced a Legendre value.
enum class SeriesPath { direct_hypergeometric, q_based_via_reflection, asymptotic };

// Parameter triple (mu, u, eta) with u = cosh(eta), u > 1.
struct ConicalPoint {
  double mu;
  double u;
  double eta;

  static ConicalPoint from_eta(double mu, double eta) {
    if (!(eta > 0.0)) throw std::domain_error("ConicalPoint: eta must be > 0");
    return {mu, std::cosh(eta), eta};
  }
  static ConicalPoint from_u(double mu, double u) {
    if (!(u > 1.0)) throw std::domain_error("ConicalPoint: u must be > 1");
    return {mu, u, std::acosh(u)};
  }
};

// True when mu + 1/2 is a non-positive integer (mu = -l - 1/2); fills l.
inline bool is_half_integer_order(double mu, int* l_out = nullptr) {
  double l = -(mu + 0.5);
  double lr = std::round(l);
  if (lr >= -0.75 && std::abs(l - lr) < 1e-12) {
    if (l_out) *l_out = static_cast<int>(lr);
    return lr >= 0.0 || std::abs(mu - 0.5) < 1e-12;
  }
  return false;
}

// Kahan-compensated accumulator.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double get() const { return s; }
};

// log(|value|) plus sign, for quantities that would over/underflow as doubles.
struct LogScaled {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;  // -1, 0, +1

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
  LogScaled& operator*=(const LogScaled& o) {
    log_abs += o.log_abs;
    sign *= o.sign;
    return *this;
  }
};

inline LogScaled log_scaled(double v) {
  if (v == 0.0) return {};
  return {std::log(std::abs(v)), v > 0 ? 1 : -1};
}

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace legsum
