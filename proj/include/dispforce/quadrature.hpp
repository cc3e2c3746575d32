#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

// Adaptive Gauss-Kronrod (G7/K15) integration on a finite interval.

namespace dispforce {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;    // accumulated error estimate
  bool converged = true; // false if the interval budget was exhausted
};

namespace detail {

// {node, Gauss-7 weight, Kronrod-15 weight}; nodes are symmetric about 0.
inline constexpr double g7k15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class F>
inline std::pair<double, double> g7k15_panel(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double y0 = f(mid);
  double g7 = g7k15[0][1] * y0;
  double k15 = g7k15[0][2] * y0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * g7k15[i][0];
    const double yi = f(mid + dx) + f(mid - dx);
    g7 += g7k15[i][1] * yi;
    k15 += g7k15[i][2] * yi;
  }
  g7 *= half;
  k15 *= half;
  return {k15, std::fabs(k15 - g7)};
}

}  // namespace detail

// Integrates f over [a, b], bisecting until each panel satisfies
// err <= rel_tol*|panel| or err <= abs_tol. Suited to one-signed
// integrands, where the per-panel relative criterion bounds the
// global relative error.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double rel_tol,
                              double abs_tol = 0.0, int max_panels = 4000) {
  QuadResult out;
  if (a == b) return out;

  const double min_width = std::fabs(b - a) * 1e-14;
  std::vector<std::pair<double, double>> stack;
  stack.reserve(64);
  stack.emplace_back(a, b);

  int panels = 0;
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    const auto [s, err] = detail::g7k15_panel(f, lo, hi);
    ++panels;

    const bool ok = err <= rel_tol * std::fabs(s) || err <= abs_tol ||
                    std::fabs(hi - lo) <= min_width;
    if (ok || panels >= max_panels) {
      out.value += s;
      out.error += err;
      if (!ok) out.converged = false;
      continue;
    }
    const double mid = 0.5 * (lo + hi);
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  return out;
}

}  // namespace dispforce
