#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dispforce/materials.hpp"

// Finite-temperature Lifshitz free energy between half-spaces and the
// sphere-plate force through the proximity force approximation.

namespace dispforce::lifshitz {

struct LifshitzConfig {
  double temperature = 300.0;          // K
  double matsubara_rel_tol = 1e-9;     // stop when terms fall below this share
  std::size_t matsubara_max_terms = 100000;
  double quad_rel_tol = 1e-8;          // k-perp quadrature tolerance
  double y_cutoff = 60.0;              // integration window above 2 xi z / c

  void validate() const;
};

struct HalfSpace {
  materials::PermittivityModel model;
  /// Diagnostic override of the zero-frequency TE reflection
  /// coefficient (conventions differ for metals; the Lifshitz formula
  /// only sees the product of the two sides).
  std::optional<double> zero_freq_te_override;
};

struct SpherePlateGeometry {
  double radius;      // m
  double separation;  // m

  void validate() const;
  /// true when separation/radius is small enough for the proximity
  /// force approximation to be comfortably accurate
  bool pfa_trustworthy() const { return separation / radius < 0.05; }
};

enum class CurveKind { Force, ForceDifference, FreeEnergyPerArea };

struct CurvePoint {
  double z;      // m
  double value;  // N or J/m^2
};

struct CurveMetadata {
  std::string sphere_material;
  std::string plate_material;
  std::string reference_material;  // dark-side material for differences
  double temperature = 300.0;      // K
};

class ForceCurve {
 public:
  ForceCurve(CurveKind kind, std::vector<CurvePoint> points, CurveMetadata metadata);

  CurveKind kind() const { return kind_; }
  const std::vector<CurvePoint>& points() const { return points_; }
  const CurveMetadata& metadata() const { return metadata_; }

 private:
  CurveKind kind_;
  std::vector<CurvePoint> points_;
  CurveMetadata metadata_;
};

/// Thrown when the Matsubara sum fails to settle within
/// matsubara_max_terms; carries the partial sum and the size of the
/// last term for diagnostics.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial_value, double last_term)
      : std::runtime_error(what), partial_value_(partial_value), last_term_(last_term) {}

  double partial_value() const { return partial_value_; }
  double last_term() const { return last_term_; }

 private:
  double partial_value_;
  double last_term_;
};

/// Thrown by curve evaluation; identifies the failing separation and
/// carries the points already computed.
class CurveEvaluationError : public std::runtime_error {
 public:
  CurveEvaluationError(const std::string& what, double z, std::vector<CurvePoint> completed)
      : std::runtime_error(what), z_(z), completed_(std::move(completed)) {}

  double failing_z() const { return z_; }
  const std::vector<CurvePoint>& completed_points() const { return completed_; }

 private:
  double z_;
  std::vector<CurvePoint> completed_;
};

/// xi_j = 2 pi k_B T j / hbar.
double matsubara_frequency(std::size_t j, double temperature);

struct Reflection {
  double tm;
  double te;
};

/// Fresnel coefficients of a vacuum / half-space interface at imaginary
/// frequency: eps = eps(i xi) >= 1, kperp >= 0. A perfect reflector
/// (eps = +inf) gives (1, -1).
Reflection fresnel_coefficients(double eps, double xi, double kperp);

/// Zero-Matsubara-frequency coefficients, fixed by the material class:
/// Dielectric -> ((eps(0)-1)/(eps(0)+1), 0), DrudeLike -> (1, 0),
/// PerfectReflector -> (1, 1).
Reflection zero_frequency_coefficients(const HalfSpace& hs);

/// Free energy per unit area between two half-spaces at separation z:
///   E(z,T) = (k_B T / 2 pi) sum'_j int kperp dkperp
///            sum_pol ln(1 - r1 r2 e^{-2 q_j z}),
/// j = 0 at half weight with the zero-frequency coefficients.
double free_energy_per_area(double z, const HalfSpace& hs1, const HalfSpace& hs2,
                            const LifshitzConfig& cfg);

/// Per-Matsubara-order contributions (already weighted; element 0 holds
/// the half-weighted j = 0 term). Summing the vector reproduces
/// free_energy_per_area.
std::vector<double> matsubara_energy_terms(double z, const HalfSpace& hs1,
                                           const HalfSpace& hs2,
                                           const LifshitzConfig& cfg);

/// PFA sphere-plate force F(z) = 2 pi R E(z, T); negative (attractive).
double sphere_plate_force(const SpherePlateGeometry& geom, const HalfSpace& sphere,
                          const HalfSpace& plate, const LifshitzConfig& cfg);

/// F_light - F_dark at the same geometry.
double force_difference(const SpherePlateGeometry& geom, const HalfSpace& sphere,
                        const HalfSpace& plate_light, const HalfSpace& plate_dark,
                        const LifshitzConfig& cfg);

/// Pointwise sphere_plate_force over an ascending separation grid.
ForceCurve force_curve(const std::vector<double>& grid, double radius,
                       const HalfSpace& sphere, const HalfSpace& plate,
                       const LifshitzConfig& cfg, CurveMetadata metadata);

/// Pointwise force_difference over an ascending separation grid.
ForceCurve force_difference_curve(const std::vector<double>& grid, double radius,
                                  const HalfSpace& sphere,
                                  const HalfSpace& plate_light,
                                  const HalfSpace& plate_dark,
                                  const LifshitzConfig& cfg, CurveMetadata metadata);

/// Ideal-metal free energy per area. T = 0 gives the closed form
/// -pi^2 hbar c / (720 z^3); T > 0 evaluates the Matsubara series with
/// r_TM = r_TE = 1, whose k-perp integral reduces to polylogarithms.
/// An independent check on free_energy_per_area.
double ideal_metal_reference(double z, double temperature);

}  // namespace dispforce::lifshitz
