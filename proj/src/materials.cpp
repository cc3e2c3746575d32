#include "dispforce/materials.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dispforce/constants.hpp"
#include "dispforce/quadrature.hpp"

namespace dispforce::materials {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_drude(const DrudeParams& p, const char* what) {
  if (!(p.omega_p > 0.0) || !(p.gamma > 0.0))
    throw std::invalid_argument(std::string(what) + ": omega_p and gamma must be > 0");
}

// int_{wmax}^inf domega / (omega^2 (omega^2 + xi^2)), stable for all xi.
double high_tail_kernel(double wmax, double xi) {
  if (xi < 0.5 * wmax) {
    // alternating series in (xi/wmax)^2, avoids the atan cancellation
    const double r2 = (xi / wmax) * (xi / wmax);
    double sum = 0.0, power = 1.0;
    for (int k = 0; k < 60; ++k) {
      const double term = power / (2 * k + 3);
      sum += term;
      if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
      power *= -r2;
    }
    return sum / (wmax * wmax * wmax);
  }
  return (1.0 / wmax - std::atan(xi / wmax) / xi) / (xi * xi);
}

}  // namespace

OpticalDataTable::OpticalDataTable(std::vector<OpticalSample> rows)
    : rows_(std::move(rows)) {
  if (rows_.size() < 2)
    throw std::invalid_argument("OpticalDataTable: need at least 2 rows");
  double prev = 0.0;
  for (const auto& r : rows_) {
    if (!(r.omega > prev))
      throw std::invalid_argument("OpticalDataTable: omega must be strictly increasing and > 0");
    if (r.eps2 < 0.0)
      throw std::invalid_argument("OpticalDataTable: eps2 must be >= 0 (passivity)");
    prev = r.omega;
  }
}

double kramers_kronig_transform(const OpticalDataTable& table, double xi,
                                const KkExtrapolation& extrapolation) {
  if (xi < 0.0) throw std::domain_error("kramers_kronig_transform: xi must be >= 0");
  const auto& rows = table.rows();
  const double wmin = table.min_omega();
  const double wmax = table.max_omega();
  const double e2_lo = rows.front().eps2;
  const double e2_hi = rows.back().eps2;
  const double xi2 = xi * xi;

  double integral = 0.0;

  // below the tabulated range
  if (extrapolation.low == KkExtrapolation::Low::DrudeTail) {
    if (xi == 0.0)
      throw std::domain_error(
          "kramers_kronig_transform: xi = 0 diverges under a Drude tail; "
          "zero frequency is handled by the model's zero_freq_class");
    check_drude(extrapolation.drude_tail, "kramers_kronig_transform");
    const double wp2 = extrapolation.drude_tail.omega_p * extrapolation.drude_tail.omega_p;
    const double g = extrapolation.drude_tail.gamma;
    auto tail = [&](double w) { return wp2 * g / ((w * w + g * g) * (w * w + xi2)); };
    integral += integrate_adaptive(tail, 0.0, wmin, 1e-10).value;
  } else if (xi > 0.0) {
    // eps2 held at its lowest tabulated value
    integral += e2_lo * 0.5 * std::log1p(wmin * wmin / xi2);
  } else {
    // xi = 0: the held tail would diverge logarithmically; let eps2
    // decay linearly to zero below wmin instead
    integral += e2_lo;
  }

  // tabulated range: the kernel integrates exactly against the linear
  // interpolant on each segment, so a per-segment panel converges fast;
  // segments also split the kernel peak at omega = xi
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double w1 = rows[i].omega, w2 = rows[i + 1].omega;
    const double a = rows[i].eps2;
    const double slope = (rows[i + 1].eps2 - rows[i].eps2) / (w2 - w1);
    auto seg = [&](double w) {
      const double e2 = a + slope * (w - w1);
      return w * e2 / (w * w + xi2);
    };
    integral += integrate_adaptive(seg, w1, w2, 1e-10).value;
  }

  // above the tabulated range: eps2 ~ e2_hi (wmax/omega)^3
  integral += e2_hi * wmax * wmax * wmax * high_tail_kernel(wmax, xi);

  return 1.0 + 2.0 / constants::pi * integral;
}

double drude_term(const DrudeParams& params, double xi) {
  check_drude(params, "drude_term");
  if (!(xi > 0.0)) throw std::domain_error("drude_term: xi must be > 0");
  return params.omega_p * params.omega_p / (xi * (xi + params.gamma));
}

PermittivityModel PermittivityModel::tabulated(OpticalDataTable table,
                                               ZeroFreqClass cls,
                                               KkExtrapolation extrapolation) {
  PermittivityModel m;
  m.base_ = Tabulated{std::move(table), extrapolation};
  m.zero_freq_class_ = cls;
  if (cls == ZeroFreqClass::PerfectReflector)
    throw std::invalid_argument("PermittivityModel: a tabulated model cannot be a perfect reflector");
  return m;
}

PermittivityModel PermittivityModel::lorentz(LorentzFit fit, ZeroFreqClass cls) {
  if (!(fit.eps_inf >= 1.0) || !(fit.eps_static > fit.eps_inf) || !(fit.omega0 > 0.0))
    throw std::invalid_argument("LorentzFit: requires eps_static > eps_inf >= 1 and omega0 > 0");
  if (cls == ZeroFreqClass::PerfectReflector)
    throw std::invalid_argument("PermittivityModel: a Lorentz model cannot be a perfect reflector");
  PermittivityModel m;
  m.base_ = fit;
  m.zero_freq_class_ = cls;
  return m;
}

PermittivityModel PermittivityModel::perfect_reflector() {
  PermittivityModel m;
  m.base_ = PerfectConductor{};
  m.zero_freq_class_ = ZeroFreqClass::PerfectReflector;
  return m;
}

PermittivityModel& PermittivityModel::add_drude_term(DrudeParams params) {
  check_drude(params, "add_drude_term");
  if (is_perfect_reflector())
    throw std::invalid_argument("add_drude_term: not applicable to a perfect reflector");
  drude_terms_.push_back(params);
  zero_freq_class_ = ZeroFreqClass::DrudeLike;
  return *this;
}

bool PermittivityModel::is_perfect_reflector() const {
  return std::holds_alternative<PerfectConductor>(base_);
}

double PermittivityModel::eval(double xi) const {
  if (!(xi > 0.0)) throw std::domain_error("PermittivityModel::eval: xi must be > 0");
  if (is_perfect_reflector()) return kInf;
  double value;
  if (const auto* tab = std::get_if<Tabulated>(&base_)) {
    value = kramers_kronig_transform(tab->table, xi, tab->extrapolation);
  } else {
    const auto& fit = std::get<LorentzFit>(base_);
    const double u = xi / fit.omega0;
    value = fit.eps_inf + (fit.eps_static - fit.eps_inf) / (1.0 + u * u);
  }
  for (const auto& d : drude_terms_) value += drude_term(d, xi);
  return value;
}

double PermittivityModel::static_permittivity() const {
  if (is_perfect_reflector()) return kInf;
  if (const auto* tab = std::get_if<Tabulated>(&base_))
    return kramers_kronig_transform(tab->table, 0.0, tab->extrapolation);
  return std::get<LorentzFit>(base_).eps_static;
}

double eval_permittivity(const PermittivityModel& model, double xi) {
  return model.eval(xi);
}

double plasma_frequency(const CarrierSpec& spec) {
  if (!(spec.density > 0.0)) throw std::domain_error("plasma_frequency: density must be > 0");
  if (!(spec.mass_ratio > 0.0))
    throw std::domain_error("plasma_frequency: mass_ratio must be > 0");
  using namespace constants;
  return std::sqrt(spec.density * q_e * q_e / (spec.mass_ratio * m_e * eps0));
}

double carrier_density_from_illumination(const IlluminationSpec& spec) {
  if (!(spec.absorbed_power > 0.0) || !(spec.photon_omega > 0.0) ||
      !(spec.thickness > 0.0) || !(spec.gauss_width > 0.0) || spec.lifetime < 0.0)
    throw std::domain_error("carrier_density_from_illumination: invalid spec");
  using namespace constants;
  return 4.0 * spec.absorbed_power * spec.lifetime /
         (hbar * spec.photon_omega * spec.thickness * pi * spec.gauss_width *
          spec.gauss_width);
}

PermittivityModel build_material_profile(MaterialProfile profile,
                                         const ProfileInputs& inputs) {
  auto si_base = [&](ZeroFreqClass cls) {
    if (inputs.table)
      return PermittivityModel::tabulated(*inputs.table, cls,
                                          inputs.extrapolation.value_or(KkExtrapolation{}));
    if (inputs.lorentz) return PermittivityModel::lorentz(*inputs.lorentz, cls);
    throw std::invalid_argument("build_material_profile: Si profiles need a table or a Lorentz fit");
  };

  switch (profile) {
    case MaterialProfile::GoldTabulated: {
      if (!inputs.table)
        throw std::invalid_argument("build_material_profile: GoldTabulated needs an optical table");
      // conduction electrons make gold Drude-like at zero frequency;
      // no explicit Drude term is added on top of the tabulated data
      return PermittivityModel::tabulated(
          *inputs.table, ZeroFreqClass::DrudeLike,
          inputs.extrapolation.value_or(KkExtrapolation{}));
    }
    case MaterialProfile::SiDarkDielectric:
      return si_base(ZeroFreqClass::Dielectric);
    case MaterialProfile::SiDarkWithDc: {
      if (inputs.drude.size() != 1)
        throw std::invalid_argument(
            "build_material_profile: SiDarkWithDc needs exactly one Drude term (intrinsic holes)");
      auto m = si_base(ZeroFreqClass::Dielectric);
      m.add_drude_term(inputs.drude[0]);
      return m;
    }
    case MaterialProfile::SiIlluminated: {
      if (inputs.drude.size() != 2)
        throw std::invalid_argument(
            "build_material_profile: SiIlluminated needs two Drude terms (electrons and holes)");
      auto m = si_base(ZeroFreqClass::Dielectric);
      m.add_drude_term(inputs.drude[0]);
      m.add_drude_term(inputs.drude[1]);
      return m;
    }
  }
  throw std::invalid_argument("build_material_profile: unknown profile");
}

std::string profile_name(MaterialProfile profile) {
  switch (profile) {
    case MaterialProfile::GoldTabulated: return "gold";
    case MaterialProfile::SiDarkDielectric: return "si-dark";
    case MaterialProfile::SiDarkWithDc: return "si-dc";
    case MaterialProfile::SiIlluminated: return "si-light";
  }
  return "unknown";
}

}  // namespace dispforce::materials
