#pragma once

#include <cmath>

#include "dispforce/constants.hpp"

// Polylogarithms Li2 and Li3 on [0, 1], used by the closed-form
// ideal-metal Matsubara series.

namespace dispforce {

// Li2(x) = sum x^n/n^2. Direct series for small x, Euler reflection
// Li2(x) + Li2(1-x) = pi^2/6 - ln(x)ln(1-x) otherwise.
inline double li2(double x) {
  if (x == 0.0) return 0.0;
  if (x == 1.0) return constants::pi * constants::pi / 6.0;
  auto series = [](double t) {
    double sum = 0.0, power = t;
    for (int n = 1; n < 200; ++n) {
      const double term = power / (static_cast<double>(n) * n);
      sum += term;
      if (term < 1e-17 * sum) break;
      power *= t;
    }
    return sum;
  };
  if (x <= 0.5) return series(x);
  return constants::pi * constants::pi / 6.0 - std::log(x) * std::log1p(-x) -
         series(1.0 - x);
}

// Li3(x) = sum x^n/n^3. Direct series for x <= 0.6; near x = 1 the
// expansion in mu = -ln x:
//   Li3(e^-mu) = zeta(3) - zeta(2) mu + mu^2 (3 - 2 ln mu)/4
//              + sum_{k>=3} zeta(3-k) (-mu)^k / k!
inline double li3(double x) {
  if (x == 0.0) return 0.0;
  if (x <= 0.6) {
    double sum = 0.0, power = x;
    for (int n = 1; n < 200; ++n) {
      const double term = power / (static_cast<double>(n) * n * n);
      sum += term;
      if (term < 1e-17 * sum) break;
      power *= x;
    }
    return sum;
  }
  const double mu = -std::log(x);  // 0 <= mu <= 0.52
  const double zeta2 = constants::pi * constants::pi / 6.0;
  // zeta(3-k) for k = 3..13 (zeta at 0 and negative integers)
  static constexpr double zeta_neg[] = {
      -0.5,          // zeta(0)
      -1.0 / 12.0,   // zeta(-1)
      0.0,           // zeta(-2)
      1.0 / 120.0,   // zeta(-3)
      0.0,           // zeta(-4)
      -1.0 / 252.0,  // zeta(-5)
      0.0,           // zeta(-6)
      1.0 / 240.0,   // zeta(-7)
      0.0,           // zeta(-8)
      -1.0 / 132.0,  // zeta(-9)
      0.0,           // zeta(-10)
  };
  double sum = constants::zeta3 - zeta2 * mu;
  if (mu > 0.0) sum += mu * mu * (3.0 - 2.0 * std::log(mu)) / 4.0;
  double mu_pow = -mu * mu * mu;  // (-mu)^3
  double factorial = 6.0;         // 3!
  for (int k = 3; k <= 13; ++k) {
    sum += zeta_neg[k - 3] * mu_pow / factorial;
    mu_pow *= -mu;
    factorial *= k + 1;
  }
  return sum;
}

}  // namespace dispforce
