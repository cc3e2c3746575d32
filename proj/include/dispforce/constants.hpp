#pragma once

// Shared physical constants (CODATA 2018). All quantities SI.

namespace dispforce::constants {

inline constexpr double c0 = 2.99792458e8;        // speed of light, m/s
inline constexpr double hbar = 1.054571817e-34;   // reduced Planck constant, J s
inline constexpr double k_B = 1.380649e-23;       // Boltzmann constant, J/K
inline constexpr double q_e = 1.602176634e-19;    // elementary charge, C
inline constexpr double m_e = 9.1093837015e-31;   // electron mass, kg
inline constexpr double eps0 = 8.8541878128e-12;  // vacuum permittivity, F/m

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double zeta3 = 1.2020569031595942854;  // Riemann zeta(3)

// angular frequency of a 1 eV photon, rad/s
inline constexpr double eV = q_e / hbar;

}  // namespace dispforce::constants
