#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

// Dielectric permittivity models evaluated along the imaginary
// frequency axis, plus the carrier physics feeding them.

namespace dispforce::materials {

struct OpticalSample {
  double omega;  // angular frequency, rad/s
  double eps1;   // Re eps(omega)
  double eps2;   // Im eps(omega)
};

/// Tabulated complex permittivity on the real frequency axis.
/// Rows must be strictly increasing in omega (> 0) with eps2 >= 0.
class OpticalDataTable {
 public:
  explicit OpticalDataTable(std::vector<OpticalSample> rows);

  const std::vector<OpticalSample>& rows() const { return rows_; }
  double min_omega() const { return rows_.front().omega; }
  double max_omega() const { return rows_.back().omega; }

 private:
  std::vector<OpticalSample> rows_;
};

struct DrudeParams {
  double omega_p;  // plasma frequency, rad/s
  double gamma;    // relaxation parameter, rad/s
};

struct CarrierSpec {
  double density;     // carriers per m^3
  double mass_ratio;  // effective mass / electron mass
};

struct IlluminationSpec {
  double absorbed_power;  // W
  double lifetime;        // s
  double photon_omega;    // rad/s
  double thickness;       // m
  double gauss_width;     // m
};

/// Single-oscillator fit eps(i xi) = eps_inf + (eps_static - eps_inf) /
/// (1 + (xi/omega0)^2); requires eps_static > eps_inf >= 1, omega0 > 0.
struct LorentzFit {
  double eps_inf;
  double eps_static;
  double omega0;
};

enum class ZeroFreqClass { Dielectric, DrudeLike, PerfectReflector };

/// Extrapolation of tabulated eps2 outside the tabulated range when
/// evaluating the dispersion integral. Above max omega, eps2 always
/// falls off as omega^-3. Below min omega, either hold the lowest
/// tabulated value (dielectrics) or use a Drude absorption tail.
struct KkExtrapolation {
  enum class Low { HoldLowest, DrudeTail };
  Low low = Low::HoldLowest;
  DrudeParams drude_tail{0.0, 0.0};
};

class PermittivityModel {
 public:
  struct Tabulated {
    OpticalDataTable table;
    KkExtrapolation extrapolation;
  };
  struct PerfectConductor {};

  static PermittivityModel tabulated(OpticalDataTable table, ZeroFreqClass cls,
                                     KkExtrapolation extrapolation = {});
  static PermittivityModel lorentz(LorentzFit fit,
                                   ZeroFreqClass cls = ZeroFreqClass::Dielectric);
  static PermittivityModel perfect_reflector();

  /// Appends a free-carrier term; forces zero_freq_class to DrudeLike.
  PermittivityModel& add_drude_term(DrudeParams params);

  /// eps(i xi) for xi > 0; +infinity for a perfect reflector.
  double eval(double xi) const;

  /// The xi -> 0+ limit of the base permittivity (Drude terms excluded).
  double static_permittivity() const;

  ZeroFreqClass zero_freq_class() const { return zero_freq_class_; }
  const std::vector<DrudeParams>& drude_terms() const { return drude_terms_; }
  bool is_perfect_reflector() const;

 private:
  PermittivityModel() = default;

  std::variant<Tabulated, LorentzFit, PerfectConductor> base_{PerfectConductor{}};
  std::vector<DrudeParams> drude_terms_;
  ZeroFreqClass zero_freq_class_ = ZeroFreqClass::PerfectReflector;
};

/// eps(i xi) = 1 + (2/pi) int omega eps2(omega) / (omega^2 + xi^2) domega
/// with piecewise-linear eps2 between table rows and the extrapolation
/// tails described by KkExtrapolation. xi = 0 is allowed for the
/// HoldLowest policy (the sub-table tail then decays linearly to zero,
/// the limit of any dielectric absorption spectrum).
double kramers_kronig_transform(const OpticalDataTable& table, double xi,
                                const KkExtrapolation& extrapolation = {});

/// omega_p^2 / (xi (xi + gamma)), xi > 0.
double drude_term(const DrudeParams& params, double xi);

/// Base permittivity plus all Drude terms, xi > 0.
double eval_permittivity(const PermittivityModel& model, double xi);

/// omega_p = sqrt(n e^2 / (m* eps0)), density > 0.
double plasma_frequency(const CarrierSpec& spec);

/// Steady-state photo-carrier density n = 4 P tau / (hbar omega d pi w^2).
double carrier_density_from_illumination(const IlluminationSpec& spec);

enum class MaterialProfile {
  GoldTabulated,
  SiDarkDielectric,
  SiDarkWithDc,
  SiIlluminated,
};

/// Inputs for build_material_profile; which fields are required depends
/// on the profile (a table for gold, Lorentz or table for Si bases,
/// Drude parameters for the conducting Si profiles).
struct ProfileInputs {
  std::optional<OpticalDataTable> table;
  std::optional<KkExtrapolation> extrapolation;
  std::optional<LorentzFit> lorentz;
  std::vector<DrudeParams> drude;
};

PermittivityModel build_material_profile(MaterialProfile profile,
                                         const ProfileInputs& inputs);

std::string profile_name(MaterialProfile profile);

}  // namespace dispforce::materials
