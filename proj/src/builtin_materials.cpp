#include "dispforce/builtin_materials.hpp"

#include <cmath>

#include "dispforce/constants.hpp"

namespace dispforce::materials {

namespace {

using constants::eV;

// Drude + Lorentz oscillator strengths for gold (Rakic et al.,
// Appl. Opt. 37, 5271, LD model): {f, gamma_eV, omega_eV}; the first
// entry is the free-electron term.
struct Oscillator {
  double f;
  double gamma;
  double omega;
};
constexpr double kGoldPlasmaEv = 9.03;
constexpr Oscillator kGoldOsc[] = {
    {0.760, 0.053, 0.0},    //
    {0.024, 0.241, 0.415},  //
    {0.010, 0.345, 0.830},  //
    {0.071, 0.870, 2.969},  //
    {0.601, 2.494, 4.304},  //
    {4.384, 2.214, 13.32},  //
};

// lambda(um), n, k for silicon, CRC Handbook of Chemistry and Physics
constexpr double kSiliconNk[][3] = {
    {0.1240, 0.306, 1.38},    {0.1305, 0.332, 1.51},
    {0.1378, 0.367, 1.66},    {0.1459, 0.414, 1.82},
    {0.1550, 0.478, 2.00},    {0.1653, 0.563, 2.21},
    {0.1771, 0.682, 2.45},    {0.1907, 0.847, 2.73},
    {0.2066, 1.11, 3.05},     {0.2254, 1.340, 3.302},
    {0.2480, 1.570, 3.565},   {0.2755, 2.451, 5.082},
    {0.3100, 5.010, 3.650},   {0.3306, 5.105, 3.111},
    {0.3542, 5.610, 3.014},   {0.3815, 6.389, 0.880},
    {0.4133, 5.222, 0.269},   {0.4275, 4.961, 0.203},
    {0.4428, 4.753, 0.163},   {0.4592, 4.583, 0.130},
    {0.4769, 4.442, 0.090},   {0.4959, 4.320, 0.073},
    {0.5166, 4.215, 0.060},   {0.5391, 4.123, 0.048},
    {0.5636, 4.042, 0.032},   {0.5904, 3.969, 0.030},
    {0.6199, 3.906, 0.022},   {0.6526, 3.847, 0.016},
    {0.6888, 3.796, 0.013},   {0.7293, 3.752, 0.010},
    {0.7749, 3.714, 0.008},   {0.8266, 3.673, 0.005},
    {0.8856, 3.673, 7.75e-3}, {0.9537, 3.673, 2.26e-3},
    {1.0332, 3.673, 1.80e-4}, {1.1271, 3.5341, 1.30e-5},
    {1.200, 3.5193, 2.50e-9},
};

}  // namespace

OpticalDataTable builtin_gold_table() {
  const double wp2 = kGoldPlasmaEv * eV * kGoldPlasmaEv * eV;
  const double w_lo = 0.05 * eV, w_hi = 100.0 * eV;
  const int n = 300;

  std::vector<OpticalSample> rows;
  rows.reserve(n);
  const double step = std::log(w_hi / w_lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double w = w_lo * std::exp(i * step);
    const double g0 = kGoldOsc[0].gamma * eV;
    double e1 = 1.0 - kGoldOsc[0].f * wp2 / (w * w + g0 * g0);
    double e2 = kGoldOsc[0].f * wp2 * g0 / (w * (w * w + g0 * g0));
    for (std::size_t j = 1; j < std::size(kGoldOsc); ++j) {
      const double wj = kGoldOsc[j].omega * eV;
      const double gj = kGoldOsc[j].gamma * eV;
      const double d = wj * wj - w * w;
      const double denom = d * d + gj * gj * w * w;
      e1 += kGoldOsc[j].f * wp2 * d / denom;
      e2 += kGoldOsc[j].f * wp2 * gj * w / denom;
    }
    rows.push_back({w, e1, e2});
  }
  return OpticalDataTable(std::move(rows));
}

KkExtrapolation builtin_gold_extrapolation() {
  KkExtrapolation ex;
  ex.low = KkExtrapolation::Low::DrudeTail;
  ex.drude_tail = {std::sqrt(kGoldOsc[0].f) * kGoldPlasmaEv * eV,
                   kGoldOsc[0].gamma * eV};
  return ex;
}

OpticalDataTable builtin_silicon_table() {
  std::vector<OpticalSample> rows;
  rows.reserve(std::size(kSiliconNk));
  // table is ascending in wavelength, i.e. descending in omega
  for (auto it = std::rbegin(kSiliconNk); it != std::rend(kSiliconNk); ++it) {
    const double lambda = (*it)[0] * 1e-6;
    const double n = (*it)[1], k = (*it)[2];
    const double w = 2.0 * constants::pi * constants::c0 / lambda;
    rows.push_back({w, n * n - k * k, 2.0 * n * k});
  }
  return OpticalDataTable(std::move(rows));
}

LorentzFit builtin_silicon_lorentz() { return {1.035, 11.66, 6.13e15}; }

std::vector<DrudeParams> silicon_photocarrier_drude() {
  return {{5.6e14, 5.0e12}, {5.0e14, 1.8e13}};
}

DrudeParams silicon_dark_dc_drude() { return {2.8e12, 5.0e12}; }

PermittivityModel default_profile(MaterialProfile profile) {
  ProfileInputs in;
  switch (profile) {
    case MaterialProfile::GoldTabulated:
      in.table = builtin_gold_table();
      in.extrapolation = builtin_gold_extrapolation();
      break;
    case MaterialProfile::SiDarkDielectric:
      in.lorentz = builtin_silicon_lorentz();
      break;
    case MaterialProfile::SiDarkWithDc:
      in.lorentz = builtin_silicon_lorentz();
      in.drude = {silicon_dark_dc_drude()};
      break;
    case MaterialProfile::SiIlluminated:
      in.lorentz = builtin_silicon_lorentz();
      in.drude = silicon_photocarrier_drude();
      break;
  }
  return build_material_profile(profile, in);
}

}  // namespace dispforce::materials
