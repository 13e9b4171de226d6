#include "legsum/quad.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace legsum::quad {

namespace {

// Gauss-Kronrod 7-15 pair (QUADPACK constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, integral, err;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  if (!std::isfinite(fc)) throw DomainError("quad: non-finite integrand");
  double resk = kWgk[7] * fc, resg = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double dx = h * kXgk[i];
    double f1 = f(c - dx), f2 = f(c + dx);
    if (!std::isfinite(f1) || !std::isfinite(f2)) throw DomainError("quad: non-finite integrand");
    resk += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
  }
  double integral = resk * h;
  double err = std::abs((resk - resg) * h);
  return {a, b, integral, err};
}

EvalResult adapt(const std::function<double(double)>& f, double a, double b, double tol,
                 double max_width) {
  std::vector<Panel> panels;
  int initial = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
  initial = std::min(initial, 4096);
  double step = (b - a) / initial;
  for (int i = 0; i < initial; ++i)
    panels.push_back(gk15(f, a + i * step, a + (i + 1) * step));

  const int max_panels = 4000;
  while (static_cast<int>(panels.size()) < max_panels) {
    double total_err = 0.0;
    size_t worst = 0;
    for (size_t i = 0; i < panels.size(); ++i) {
      total_err += panels[i].err;
      if (panels[i].err > panels[worst].err) worst = i;
    }
    if (total_err <= tol) break;
    Panel p = panels[worst];
    double mid = 0.5 * (p.a + p.b);
    if (mid <= p.a || mid >= p.b) break;  // width at rounding floor
    panels[worst] = gk15(f, p.a, mid);
    panels.push_back(gk15(f, mid, p.b));
  }

  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  KahanSum s;
  double err = 0.0;
  for (const Panel& p : panels) {
    s.add(p.integral);
    err += p.err;
  }
  EvalResult r{s.get(), err, kConverged};
  if (err > tol) r.flags |= kSlowConvergence;
  return r;
}

// Estimate a decay exponent from samples when none was declared.
std::optional<double> detect_decay(const std::function<double(double)>& f, double a) {
  double x0 = a + 1.0;
  double prev = std::abs(f(x0));
  double lambda = 1e300;
  int good = 0;
  for (int i = 0; i < 6; ++i) {
    double x1 = x0 + 2.0;
    double cur = std::abs(f(x1));
    if (cur < prev && prev > 0.0) {
      if (cur == 0.0) return 1.0;
      lambda = std::min(lambda, std::log(prev / cur) / 2.0);
      ++good;
    }
    prev = cur;
    x0 = x1;
  }
  if (good >= 4 && lambda > 1e-6) return 0.5 * lambda;  // halved for safety
  return std::nullopt;
}

}  // namespace

EvalResult integrate(const Integrand& f, double a, double b, double tol) {
  if (!(a < b)) throw DomainError("integrate: requires a < b");
  double max_width = b - a;
  if (f.osc_period) max_width = std::min(max_width, *f.osc_period / 2.0);
  if (f.osc_period_fast) max_width = std::min(max_width, *f.osc_period_fast / 2.0);
  return adapt(f.eval, a, b, tol, max_width);
}

namespace {

// Iterated averaging (Euler transform) of half-period panel sums from X on.
// Panels are themselves integrated adaptively so fast oscillations under a
// slow envelope stay resolved.
std::pair<double, double> oscillatory_tail(const Integrand& f, double X, double tol) {
  double hp = *f.osc_period / 2.0;
  double cap = f.osc_period_fast ? *f.osc_period_fast / 2.0 : hp;
  std::vector<double> partial;
  KahanSum ps;
  const int J = 72;
  for (int j = 0; j < J; ++j) {
    EvalResult p = adapt(f.eval, X + j * hp, X + (j + 1) * hp, tol / J, cap);
    ps.add(p.value);
    partial.push_back(ps.get());
  }
  std::vector<double> row = partial;
  double best = row.back(), best_gap = 1e300;
  for (int lvl = 0; lvl < 48 && row.size() > 2; ++lvl) {
    std::vector<double> nxt(row.size() - 1);
    for (size_t i = 0; i + 1 < row.size(); ++i) nxt[i] = 0.5 * (row[i] + row[i + 1]);
    double gap = std::abs(nxt.back() - row.back());
    if (gap < best_gap) {
      best_gap = gap;
      best = nxt.back();
    }
    row.swap(nxt);
  }
  return {best, best_gap};
}

}  // namespace

EvalResult integrate_semiinfinite(const Integrand& f, double a, double tol) {
  std::optional<double> lambda = f.decay_rate;
  if (!lambda && !f.osc_period) lambda = detect_decay(f.eval, a);

  if (lambda) {
    const double lam = *lambda;
    // Envelope probe; oscillation nodes must not fake an early cutoff.
    auto probe = [&](double x) {
      double m = std::abs(f.eval(x));
      if (f.osc_period) {
        m = std::max(m, std::abs(f.eval(x + 0.31 * *f.osc_period)));
        m = std::max(m, std::abs(f.eval(x + 0.67 * *f.osc_period)));
      }
      return m;
    };
    double X = a + std::max(4.0, 4.0 / lam);
    for (int i = 0; i < 60; ++i) {
      double fx = probe(X);
      if (fx / lam <= 0.5 * tol) break;
      X += std::max(2.0, std::log(std::max(2.0, 2.0 * fx / (lam * tol))) / lam);
    }
    EvalResult main = integrate(f, a, X, 0.5 * tol);
    double tail_err = probe(X) / lam;
    EvalResult r{main.value, main.abs_err + tail_err, main.flags};
    if (r.abs_err > tol) r.flags |= kSlowConvergence;
    return r;
  }

  if (f.osc_period) {
    // Algebraic or undeclared decay under oscillation: finite head plus an
    // averaged oscillatory tail.
    double X = a + std::max(24.0, 6.0 * (*f.osc_period));
    EvalResult main = integrate(f, a, X, 0.5 * tol);
    auto [tv, terr] = oscillatory_tail(f, X, tol);
    EvalResult r{main.value + tv, main.abs_err + terr, main.flags};
    if (r.abs_err > tol) r.flags |= kSlowConvergence;
    return r;
  }

  // Smooth algebraic decay: power-law tail model checked at two cut points.
  double X = a + 60.0;
  auto tail_model = [&](double x) -> std::pair<double, double> {
    double f1 = f.eval(x), f2 = f.eval(2.0 * x);
    if (!(std::abs(f2) > 0.0) || !(std::abs(f1) > std::abs(f2)))
      throw DomainError("integrate_semiinfinite: decay undetected");
    double p = std::log(std::abs(f1 / f2)) / std::log(2.0);
    if (p < 1.3) throw DomainError("integrate_semiinfinite: decay undetected");
    return {f2 * 2.0 * x / (p - 1.0), p};
  };
  EvalResult i1 = integrate(f, a, 2.0 * X, 0.25 * tol);
  auto [t1, p1] = tail_model(X);
  (void)p1;
  EvalResult i2 = integrate(f, a, 4.0 * X, 0.25 * tol);
  auto [t2, p2] = tail_model(2.0 * X);
  (void)p2;
  double v1 = i1.value + t1, v2 = i2.value + t2;
  EvalResult r{v2, i2.abs_err + std::abs(v2 - v1), i2.flags};
  if (r.abs_err > tol) r.flags |= kSlowConvergence;
  return r;
}

EvalResult integrate_pv(const Integrand& f, double pole, double a, double b, double tol) {
  if (!(a < pole && pole < b)) throw DomainError("integrate_pv: pole must lie inside (a, b)");
  const double eps0 = 0.5 * std::min(pole - a, b - pole);

  auto evaluate = [&](double eps) {
    EvalResult left{0, 0, 0u}, right{0, 0, 0u};
    if (a < pole - eps) left = integrate(f, a, pole - eps, tol / 4.0);
    if (pole + eps < b) right = integrate(f, pole + eps, b, tol / 4.0);
    // pair integrand g(t) = f(pole+t) + f(pole-t); regular at t -> 0
    Integrand g{[&](double t) { return f.eval(pole + t) + f.eval(pole - t); }, {}, {}};
    const double delta = 1e-7 * (1.0 + std::abs(pole));
    EvalResult inner1 = integrate(g, delta, eps, tol / 4.0);
    EvalResult inner2 = integrate(g, 0.5 * delta, eps, tol / 4.0);
    double inner = 2.0 * inner2.value - inner1.value;  // delta -> 0 extrapolation
    EvalResult r;
    r.value = left.value + right.value + inner;
    r.abs_err = left.abs_err + right.abs_err + inner1.abs_err + inner2.abs_err +
                std::abs(inner2.value - inner1.value);
    r.flags = left.flags | right.flags;
    return r;
  };

  EvalResult r1 = evaluate(eps0);
  EvalResult r2 = evaluate(0.5 * eps0);
  EvalResult out = r2;
  double gap = std::abs(r1.value - r2.value);
  out.abs_err += gap;
  if (gap > 2.0 * tol) out.flags |= kSlowConvergence;
  return out;
}

EvalResult integrate_sqrt_lower(const std::function<double(double)>& g, double x_M, double tol,
                                std::optional<double> decay_rate) {
  Integrand h;
  if (x_M > 0.0) {
    h.eval = [g, x_M](double t) {
      double x = std::sqrt(x_M * x_M + t * t);
      return g(x) / x;
    };
  } else {
    h.eval = [g](double t) { return t > 0.0 ? g(t) / t : g(1e-300) / 1e-300; };
  }
  h.decay_rate = decay_rate;
  return integrate_semiinfinite(h, 0.0, tol);
}

}  // namespace legsum::quad
